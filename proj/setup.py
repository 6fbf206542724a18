from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "semireflex._core",
    sources=[
        "python/bindings.cpp",
        "src/rational.cpp",
        "src/linalg.cpp",
        "src/polytope.cpp",
        "src/ehrhart.cpp",
        "src/classify.cpp",
        "src/families.cpp",
        "src/io.cpp",
        "src/corpus.cpp",
    ],
    include_dirs=["include", "vendor"],
    cxx_std=20,
    libraries=["gmp"],
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
