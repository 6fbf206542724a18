"""Exact dilation counting and semi-reflexivity checks for rational polytopes.

Rationals cross the boundary as reduced strings like "5/3" (plain integers
stay plain, "7"). Structured results are dicts decoded from the library's
canonical JSON, so their values use the same convention. All arithmetic is
exact; nothing here touches floating point.
"""

import json as _json

from semireflex import _core
from semireflex._core import (
    Error,
    Polytope,
    is_reflexive,
    is_semi_reflexive_structural,
    polar_dual,
)

__all__ = [
    "Error",
    "Polytope",
    "check_reflexive_duality",
    "check_theorems",
    "classify",
    "cone_deep_point",
    "count",
    "generate",
    "interior_step_function",
    "is_reflexive",
    "is_semi_reflexive_structural",
    "polar_dual",
    "polytope_from_json",
    "polytope_to_json",
    "step_function",
    "vertices",
]


def generate(family, spec):
    """Family member: cube/simplex/cross take a dimension, order/chain a poset
    description, quasimetric a graph description."""
    return _core.generate(family, str(spec))


def polytope_from_json(doc):
    """Polytope from a {"dim", "inequalities"} document, dict or JSON text."""
    return _core.polytope_from_json(doc if isinstance(doc, str) else _json.dumps(doc))


def polytope_to_json(polytope, include_vertices=False):
    """The document back as a dict, optionally with the vertex list."""
    return _json.loads(_core.polytope_to_json(polytope, include_vertices))


def vertices(polytope):
    """Exact vertex set, each vertex a list of rational strings."""
    return _json.loads(_core.vertices_json(polytope))["vertices"]


def step_function(polytope, s_max="6", strict=False):
    """Dilation counter on [0, s_max]: {"s_max", "pieces", "drop_points"}."""
    return _json.loads(_core.step_function_json(polytope, str(s_max), strict))


def interior_step_function(polytope, s_max="6"):
    """Counter of the relative interior, same shape as step_function."""
    return _json.loads(_core.interior_step_function_json(polytope, str(s_max)))


def count(polytope, s, strict=False):
    """Lattice points of s*P, evaluated directly from the inequalities."""
    return _core.count(polytope, str(s), strict)


def classify(polytope, s_max="6"):
    """Full report: structural and numeric semi-reflexivity, drops, reflexivity."""
    return _json.loads(_core.classify_json(polytope, str(s_max)))


def check_reflexive_duality(polytope):
    """The three reflexivity readings and whether they agree."""
    return _json.loads(_core.check_reflexive_duality_json(polytope))


def cone_deep_point(generators, delta):
    """Integer point of the spanned cone with distance above delta to every facet."""
    return _core.cone_deep_point(
        [[str(c) for c in g] for g in generators], str(delta)
    )


def check_theorems(
    s_max="6",
    threads=0,
    *,
    count=200,
    dim_min=2,
    dim_max=3,
    bound=4,
    seed=42,
    structured_weight=1,
    general_weight=3,
):
    """Invariant suite over a seeded random corpus plus the family generators.

    Returns {"text": report, "failures": count}; threads=0 picks a worker per
    hardware thread.
    """
    text, failures = _core.check_theorems(
        count,
        dim_min,
        dim_max,
        bound,
        seed,
        structured_weight,
        general_weight,
        str(s_max),
        threads,
    )
    return {"text": text, "failures": failures}
