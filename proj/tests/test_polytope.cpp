#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "semireflex/polytope.hpp"

#include <set>

using namespace semireflex;

namespace {

HalfSpace hs(std::vector<int> a, Rational b) {
    RatVector ra(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) ra[i] = Rational(a[i]);
    return {std::move(ra), std::move(b)};
}

RatVector pt(std::vector<Rational> v) { return v; }

HRep unit_cube(int d) {
    std::vector<HalfSpace> rows;
    for (int i = 0; i < d; ++i) {
        std::vector<int> up(d, 0), down(d, 0);
        up[i] = 1;
        down[i] = -1;
        rows.push_back(hs(up, 1));
        rows.push_back(hs(down, 0));
    }
    return make_hrep(d, rows);
}

HRep standard_simplex(int d) {
    std::vector<HalfSpace> rows;
    for (int i = 0; i < d; ++i) {
        std::vector<int> down(d, 0);
        down[i] = -1;
        rows.push_back(hs(down, 0));
    }
    rows.push_back(hs(std::vector<int>(d, 1), 1));
    return make_hrep(d, rows);
}

HRep cross_polytope(int d) {
    std::vector<HalfSpace> rows;
    for (int mask = 0; mask < (1 << d); ++mask) {
        std::vector<int> a(d);
        for (int i = 0; i < d; ++i) a[i] = (mask >> i) & 1 ? 1 : -1;
        rows.push_back(hs(a, 1));
    }
    return make_hrep(d, rows);
}

// Independent lattice-point count of sP (or its interior) by scanning the
// bounding box of the scaled vertex hull and testing <a,x> <= s*b directly.
long brute_count(const HRep& p, const Rational& s, bool strict) {
    if (s == 0) return strict ? 0 : 1;
    VRep v = enumerate_vertices(p);
    if (v.vertices.empty()) return 0;
    const std::size_t d = static_cast<std::size_t>(p.dim);
    std::vector<Int> lo(d), hi(d);
    for (std::size_t j = 0; j < d; ++j) {
        Rational mn = v.vertices[0][j], mx = mn;
        for (const RatVector& w : v.vertices) {
            mn = std::min(mn, w[j]);
            mx = std::max(mx, w[j]);
        }
        lo[j] = floor_int(s * mn);
        hi[j] = ceil_int(s * mx);
    }
    long count = 0;
    std::vector<Int> x = lo;
    while (true) {
        bool inside = true;
        for (const HalfSpace& h : p.halfspaces) {
            Rational lhs = dot(h.a, to_rational(x));
            Rational rhs = s * h.b;
            if (strict ? !(lhs < rhs) : !(lhs <= rhs)) {
                inside = false;
                break;
            }
        }
        if (inside) ++count;
        std::size_t j = 0;
        while (j < d && x[j] == hi[j]) {
            x[j] = lo[j];
            ++j;
        }
        if (j == d) break;
        ++x[j];
    }
    return count;
}

}  // namespace

TEST_CASE("make_hrep validates, flags empties, rejects unbounded sets") {
    HRep seg = make_hrep(1, {hs({1}, 1), hs({-1}, 0)});
    CHECK_FALSE(seg.empty);
    VRep v = enumerate_vertices(seg);
    REQUIRE(v.vertices.size() == 2);
    CHECK(v.vertices[0] == pt({Rational(0)}));
    CHECK(v.vertices[1] == pt({Rational(1)}));

    CHECK_THROWS_AS(make_hrep(2, {hs({1, 0}, 1)}), unbounded_error);
    CHECK(make_hrep(1, {hs({1}, -1), hs({-1}, 0)}).empty);

    CHECK_THROWS_AS(make_hrep(0, {}), dimension_error);
    CHECK_THROWS_AS(make_hrep(2, {}), dimension_error);
    CHECK_THROWS_AS(make_hrep(2, {hs({1}, 1)}), dimension_error);
    CHECK_THROWS_AS(make_hrep(1, {hs({0}, 1)}), dimension_error);
}

TEST_CASE("make_hrep flags an empty system whose recession cone is a line") {
    // x+y <= 0 and -(x+y) <= -1 contradict; emptiness wins over the
    // unbounded recession direction.
    HRep p = make_hrep(2, {hs({1, 1}, 0), hs({-1, -1}, -1)});
    CHECK(p.empty);
    CHECK(enumerate_vertices(p).vertices.empty());
}

TEST_CASE("is_bounded matches the recession cone") {
    CHECK(is_bounded(unit_cube(2)));
    CHECK_FALSE(is_bounded(HRep{2, {hs({1, 0}, 1), hs({0, 1}, 1)}, false}));
    CHECK(is_bounded(HRep{1, {hs({2}, 1), hs({-1}, 0)}, false}));
    CHECK_FALSE(is_bounded(HRep{2, {hs({1, 1}, 1), hs({-1, -1}, 0)}, false}));
    CHECK(is_bounded(HRep{2, {hs({1, 1}, 1), hs({-1, 0}, 0), hs({0, -1}, 0)}, false}));
}

TEST_CASE("enumerate_vertices on the basic families") {
    VRep sq = enumerate_vertices(unit_cube(2));
    REQUIRE(sq.vertices.size() == 4);
    CHECK(sq.vertices[0] == pt({Rational(0), Rational(0)}));
    CHECK(sq.vertices[1] == pt({Rational(0), Rational(1)}));
    CHECK(sq.vertices[2] == pt({Rational(1), Rational(0)}));
    CHECK(sq.vertices[3] == pt({Rational(1), Rational(1)}));

    VRep tri = enumerate_vertices(standard_simplex(2));
    REQUIRE(tri.vertices.size() == 3);
    CHECK(tri.vertices[0] == pt({Rational(0), Rational(0)}));
    CHECK(tri.vertices[1] == pt({Rational(0), Rational(1)}));
    CHECK(tri.vertices[2] == pt({Rational(1), Rational(0)}));

    VRep cr = enumerate_vertices(cross_polytope(2));
    REQUIRE(cr.vertices.size() == 4);
    CHECK(cr.vertices[0] == pt({Rational(-1), Rational(0)}));
    CHECK(cr.vertices[1] == pt({Rational(0), Rational(-1)}));
    CHECK(cr.vertices[2] == pt({Rational(0), Rational(1)}));
    CHECK(cr.vertices[3] == pt({Rational(1), Rational(0)}));

    CHECK(enumerate_vertices(unit_cube(4)).vertices.size() == 16);
    CHECK(enumerate_vertices(cross_polytope(3)).vertices.size() == 6);
}

TEST_CASE("every enumerated vertex lies in the polytope") {
    for (const HRep& p : {unit_cube(3), standard_simplex(3), cross_polytope(3)}) {
        for (const RatVector& v : enumerate_vertices(p).vertices) CHECK(contains(p, v, false));
    }
}

TEST_CASE("minimal_facets strips duplicates and redundancies") {
    HRep square = make_hrep(2, {hs({1, 0}, 1), hs({1, 0}, 1), hs({1, 0}, 2), hs({-1, 0}, 0),
                                hs({0, 1}, 1), hs({0, -1}, 0)});
    HRep facets = minimal_facets(square);
    CHECK(facets.halfspaces.size() == 4);

    HRep tri = make_hrep(2, {hs({-1, 0}, 0), hs({0, -1}, 0), hs({1, 1}, 1), hs({1, 1}, 3)});
    CHECK(minimal_facets(tri).halfspaces.size() == 3);

    CHECK(minimal_facets(cross_polytope(2)).halfspaces.size() == 4);
}

TEST_CASE("minimal_facets canonicalizes scaling and keeps input order") {
    // 2x <= 1 describes the facet x <= 1/2; the primitive normal is (1).
    HRep seg = make_hrep(1, {hs({2}, 1), hs({-3}, 0)});
    HRep facets = minimal_facets(seg);
    REQUIRE(facets.halfspaces.size() == 2);
    CHECK(facets.halfspaces[0].a == pt({Rational(1)}));
    CHECK(facets.halfspaces[0].b == Rational(1, 2));
    CHECK(facets.halfspaces[1].a == pt({Rational(-1)}));
    CHECK(facets.halfspaces[1].b == Rational(0));
}

TEST_CASE("minimal_facets requires full dimension") {
    HRep diag = make_hrep(2, {hs({1, -1}, 0), hs({-1, 1}, 0), hs({1, 0}, 1), hs({-1, 0}, 0)});
    CHECK_THROWS_AS(minimal_facets(diag), error);
}

TEST_CASE("removing any minimal facet changes the vertex set") {
    for (const HRep& p : {unit_cube(2), standard_simplex(2), cross_polytope(2)}) {
        HRep facets = minimal_facets(p);
        std::set<RatVector> base;
        for (const RatVector& v : enumerate_vertices(facets).vertices) base.insert(v);
        for (std::size_t drop = 0; drop < facets.halfspaces.size(); ++drop) {
            std::vector<HalfSpace> rest;
            for (std::size_t i = 0; i < facets.halfspaces.size(); ++i)
                if (i != drop) rest.push_back(facets.halfspaces[i]);
            HRep sub{facets.dim, rest, false};
            bool changed = !is_bounded(sub);
            if (!changed) {
                std::set<RatVector> got;
                for (const RatVector& v : enumerate_vertices(sub).vertices) got.insert(v);
                changed = got != base;
            }
            CHECK(changed);
        }
    }
}

TEST_CASE("affine_dimension") {
    CHECK(affine_dimension(unit_cube(2)) == 2);
    HRep diag = make_hrep(2, {hs({1, -1}, 0), hs({-1, 1}, 0), hs({1, 0}, 1), hs({-1, 0}, 0)});
    CHECK(affine_dimension(diag) == 1);
    HRep origin = make_hrep(2, {hs({1, 0}, 0), hs({-1, 0}, 0), hs({0, 1}, 0), hs({0, -1}, 0)});
    CHECK(affine_dimension(origin) == 0);
}

TEST_CASE("lattice_project maps the diagonal segment to a unit segment") {
    HRep diag = make_hrep(2, {hs({1, -1}, 0), hs({-1, 1}, 0), hs({1, 0}, 1), hs({-1, 0}, 0)});
    HRep q = lattice_project(diag);
    CHECK(q.dim == 1);
    VRep v = enumerate_vertices(q);
    REQUIRE(v.vertices.size() == 2);
    CHECK(v.vertices[0] == pt({Rational(0)}));
    CHECK(v.vertices[1] == pt({Rational(1)}));
}

TEST_CASE("lattice_project keeps an axis-aligned segment as is") {
    HRep seg = make_hrep(2, {hs({0, 1}, 0), hs({0, -1}, 0), hs({1, 0}, 2), hs({-1, 0}, 0)});
    HRep q = lattice_project(seg);
    CHECK(q.dim == 1);
    VRep v = enumerate_vertices(q);
    REQUIRE(v.vertices.size() == 2);
    CHECK((v.vertices[1][0] - v.vertices[0][0] == 2 || v.vertices[0][0] - v.vertices[1][0] == 2));
}

TEST_CASE("lattice_project preserves lattice counts") {
    std::vector<HRep> cases;
    cases.push_back(make_hrep(2, {hs({1, -1}, 0), hs({-1, 1}, 0), hs({1, 0}, 1), hs({-1, 0}, 0)}));
    // Segment from (0,0) to (2,4): span direction (1,2).
    cases.push_back(
        make_hrep(2, {hs({2, -1}, 0), hs({-2, 1}, 0), hs({1, 0}, 2), hs({-1, 0}, 0)}));
    // Triangle in the plane x+y+z = 0 ... embedded 2-D polytope in 3-D:
    // conv{0, (1,-1,0), (0,1,-1)}.
    cases.push_back(make_hrep(3, {hs({1, 1, 1}, 0), hs({-1, -1, -1}, 0), hs({-1, 0, 0}, 0),
                                  hs({0, 0, 1}, 0), hs({1, 0, -1}, 1)}));
    for (const HRep& p : cases) {
        HRep q = lattice_project(p);
        CHECK(affine_dimension(q) == q.dim);
        for (const Rational& s :
             {Rational(0), Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)}) {
            CHECK(brute_count(p, s, false) == brute_count(q, s, false));
        }
    }
}

TEST_CASE("lattice_project preconditions") {
    HRep shifted = make_hrep(2, {hs({1, -1}, 0), hs({-1, 1}, 0), hs({1, 0}, 2), hs({-1, 0}, -1)});
    CHECK_THROWS_AS(lattice_project(shifted), error);
    CHECK_THROWS_AS(lattice_project(unit_cube(2)), error);
    HRep origin = make_hrep(2, {hs({1, 0}, 0), hs({-1, 0}, 0), hs({0, 1}, 0), hs({0, -1}, 0)});
    CHECK_THROWS_AS(lattice_project(origin), error);
}

TEST_CASE("polar_dual of the symmetric square is the cross-polytope") {
    VRep square{2,
                {pt({Rational(-1), Rational(-1)}), pt({Rational(-1), Rational(1)}),
                 pt({Rational(1), Rational(-1)}), pt({Rational(1), Rational(1)})}};
    HRep dual = polar_dual(square);
    CHECK(is_bounded(dual));
    VRep dv = enumerate_vertices(dual);
    VRep expect = enumerate_vertices(cross_polytope(2));
    CHECK(dv.vertices == expect.vertices);
}

TEST_CASE("polar_dual of the unit cube is unbounded") {
    HRep dual = polar_dual(enumerate_vertices(unit_cube(2)));
    CHECK(dual.halfspaces.size() == 3);  // the origin vertex contributes nothing
    CHECK_FALSE(is_bounded(dual));
}

TEST_CASE("polar_dual twice returns the original vertex set") {
    std::vector<VRep> cases;
    cases.push_back(enumerate_vertices(cross_polytope(2)));
    cases.push_back(enumerate_vertices(cross_polytope(3)));
    cases.push_back(VRep{2,
                         {pt({Rational(-1), Rational(-1)}), pt({Rational(-1), Rational(1)}),
                          pt({Rational(1), Rational(-1)}), pt({Rational(1), Rational(1)})}});
    // An asymmetric triangle with the origin interior.
    cases.push_back(VRep{2,
                         {pt({Rational(-1), Rational(-1)}), pt({Rational(2), Rational(-1)}),
                          pt({Rational(-1), Rational(2)})}});
    for (const VRep& v : cases) {
        HRep dual = polar_dual(v);
        REQUIRE(is_bounded(dual));
        VRep back = enumerate_vertices(polar_dual(enumerate_vertices(dual)));
        std::set<RatVector> original(v.vertices.begin(), v.vertices.end());
        std::set<RatVector> round(back.vertices.begin(), back.vertices.end());
        CHECK(original == round);
    }
}

TEST_CASE("vertex round-trip through the polar machinery") {
    // Recenter so the origin is interior, rebuild an H-rep from the polar
    // dual of the dual, and compare vertex sets.
    for (const HRep& p : {unit_cube(2), standard_simplex(2)}) {
        VRep v = enumerate_vertices(p);
        const std::size_t d = static_cast<std::size_t>(p.dim);
        RatVector centroid(d, Rational(0));
        for (const RatVector& w : v.vertices)
            for (std::size_t j = 0; j < d; ++j) centroid[j] += w[j];
        for (std::size_t j = 0; j < d; ++j) centroid[j] /= Rational(v.vertices.size());
        VRep shifted{p.dim, {}};
        for (const RatVector& w : v.vertices) {
            RatVector t(d);
            for (std::size_t j = 0; j < d; ++j) t[j] = w[j] - centroid[j];
            shifted.vertices.push_back(t);
        }
        HRep rebuilt = polar_dual(enumerate_vertices(polar_dual(shifted)));
        REQUIRE(is_bounded(rebuilt));
        HRep facets = minimal_facets(rebuilt);
        std::set<RatVector> expect(shifted.vertices.begin(), shifted.vertices.end());
        VRep got = enumerate_vertices(facets);
        std::set<RatVector> actual(got.vertices.begin(), got.vertices.end());
        CHECK(expect == actual);
    }
}

TEST_CASE("contains with strict and non-strict modes") {
    HRep sq = unit_cube(2);
    CHECK(contains(sq, pt({Rational(1, 2), Rational(1, 2)}), true));
    CHECK_FALSE(contains(sq, pt({Rational(1), Rational(0)}), true));
    CHECK(contains(sq, pt({Rational(1), Rational(0)}), false));
    CHECK(contains(cross_polytope(2), pt({Rational(1, 2), Rational(1, 2)}), false));
    CHECK_FALSE(contains(cross_polytope(2), pt({Rational(1, 2), Rational(1, 2)}), true));
    CHECK_THROWS_AS(contains(sq, pt({Rational(0)}), false), dimension_error);
}

TEST_CASE("canonical_inequality") {
    auto [a1, b1] = canonical_inequality(pt({Rational(1, 2), Rational(1, 3)}), Rational(1));
    CHECK(a1 == IntVector{3, 2});
    CHECK(b1 == Rational(6));
    auto [a2, b2] = canonical_inequality(pt({Rational(-4), Rational(2)}), Rational(6));
    CHECK(a2 == IntVector{-2, 1});
    CHECK(b2 == Rational(3));
}
