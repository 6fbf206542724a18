#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "semireflex/ehrhart.hpp"

using namespace semireflex;

namespace {

HalfSpace hs(std::vector<int> a, Rational b) {
    RatVector ra(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) ra[i] = Rational(a[i]);
    return {std::move(ra), std::move(b)};
}

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

HRep segment(Rational lo, Rational hi) {
    return make_hrep(1, {{{Rational(1)}, hi}, {{Rational(-1)}, -lo}});
}

// Independent count of s*P (or its interior) over the scaled bounding box.
long brute_count(const HRep& p, const Rational& s, bool strict) {
    if (s == 0) return strict || p.empty ? 0 : 1;
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
    long result = 0;
    std::vector<Int> x = lo;
    while (true) {
        bool inside = true;
        for (const HalfSpace& h : p.halfspaces) {
            Rational lhs = dot(x, h.a), rhs = s * h.b;
            if (strict ? !(lhs < rhs) : !(lhs <= rhs)) {
                inside = false;
                break;
            }
        }
        if (inside) ++result;
        std::size_t j = 0;
        while (j < d && x[j] == hi[j]) {
            x[j] = lo[j];
            ++j;
        }
        if (j == d) break;
        ++x[j];
    }
    return result;
}

void check_partition(const StepFunction& f) {
    REQUIRE_FALSE(f.pieces.empty());
    CHECK(f.pieces.front().lo == Rational(0));
    CHECK(f.pieces.front().lo_closed);
    CHECK(f.pieces.back().hi == f.s_max);
    CHECK(f.pieces.back().hi_closed);
    for (std::size_t i = 0; i + 1 < f.pieces.size(); ++i) {
        CHECK(f.pieces[i].hi == f.pieces[i + 1].lo);
        CHECK(f.pieces[i].hi_closed != f.pieces[i + 1].lo_closed);
        CHECK(f.pieces[i].value != f.pieces[i + 1].value);
    }
    for (const Piece& piece : f.pieces) {
        CHECK((piece.lo < piece.hi || (piece.lo == piece.hi && piece.lo_closed && piece.hi_closed)));
        CHECK(piece.value >= 0);
    }
}

}  // namespace

TEST_CASE("membership_interval rays") {
    HRep seg01 = segment(0, 1);
    MembershipInterval a = membership_interval(seg01, {Int(2)}, false);
    CHECK_FALSE(a.empty);
    CHECK(a.lo == Rational(2));
    CHECK(a.lo_closed);
    CHECK_FALSE(a.hi.has_value());

    HRep seg12 = segment(1, 2);
    MembershipInterval b = membership_interval(seg12, {Int(2)}, false);
    CHECK(b.lo == Rational(1));
    CHECK(b.lo_closed);
    REQUIRE(b.hi.has_value());
    CHECK(*b.hi == Rational(2));
    CHECK(b.hi_closed);

    MembershipInterval c = membership_interval(seg01, {Int(0)}, false);
    CHECK_FALSE(c.empty);
    CHECK(c.lo == Rational(0));
    CHECK_FALSE(c.lo_closed);
    CHECK_FALSE(c.hi.has_value());
    CHECK(membership_interval(seg01, {Int(0)}, true).empty);

    MembershipInterval e = membership_interval(unit_cube(2), {Int(1), Int(1)}, true);
    CHECK_FALSE(e.empty);
    CHECK(e.lo == Rational(1));
    CHECK_FALSE(e.lo_closed);

    CHECK_THROWS_AS(membership_interval(seg01, {Int(1), Int(1)}, false), dimension_error);
}

TEST_CASE("membership_interval can be empty for points outside every dilate") {
    // x = -1 violates -x <= 0 for every s > 0.
    CHECK(membership_interval(segment(0, 1), {Int(-1)}, false).empty);
    // P = [1,2], x = 1: s in [1/2, 1].
    MembershipInterval iv = membership_interval(segment(1, 2), {Int(1)}, false);
    CHECK(iv.lo == Rational(1, 2));
    REQUIRE(iv.hi.has_value());
    CHECK(*iv.hi == Rational(1));
}

TEST_CASE("step_function of the unit square") {
    StepFunction f = step_function(unit_cube(2), Rational(2), false);
    check_partition(f);
    REQUIRE(f.pieces.size() == 3);
    CHECK(f.pieces[0].value == 1);
    CHECK(f.pieces[0].hi == Rational(1));
    CHECK_FALSE(f.pieces[0].hi_closed);
    CHECK(f.pieces[1].value == 4);
    CHECK(f.pieces[2].lo == Rational(2));
    CHECK(f.pieces[2].value == 9);
}

TEST_CASE("step_function of the shifted segment [1,2]") {
    StepFunction f = step_function(segment(1, 2), Rational(3), false);
    check_partition(f);
    // Non-monotone staircase: values by direct count of [s, 2s].
    struct Expect {
        Rational lo;
        bool lo_closed;
        Rational hi;
        bool hi_closed;
        long value;
    };
    std::vector<Expect> expect = {
        {Rational(0), true, Rational(0), true, 1},  // 0*P = {0} by convention
        {Rational(0), false, Rational(1, 2), false, 0},
        {Rational(1, 2), true, Rational(1), false, 1},  // 1 sits in [s, 2s]
        {Rational(1), true, Rational(1), true, 2},
        {Rational(1), false, Rational(3, 2), false, 1},
        {Rational(3, 2), true, Rational(2), false, 2},
        {Rational(2), true, Rational(2), true, 3},
        {Rational(2), false, Rational(5, 2), false, 2},
        {Rational(5, 2), true, Rational(3), false, 3},
        {Rational(3), true, Rational(3), true, 4},
    };
    REQUIRE(f.pieces.size() == expect.size());
    for (std::size_t i = 0; i < expect.size(); ++i) {
        CHECK(f.pieces[i].lo == expect[i].lo);
        CHECK(f.pieces[i].lo_closed == expect[i].lo_closed);
        CHECK(f.pieces[i].hi == expect[i].hi);
        CHECK(f.pieces[i].hi_closed == expect[i].hi_closed);
        CHECK(f.pieces[i].value == expect[i].value);
    }
}

TEST_CASE("strict step_function of the unit square") {
    StepFunction f = step_function(unit_cube(2), Rational(2), true);
    check_partition(f);
    REQUIRE(f.pieces.size() == 2);
    CHECK(f.pieces[0].lo == Rational(0));
    CHECK(f.pieces[0].hi == Rational(1));
    CHECK(f.pieces[0].hi_closed);
    CHECK(f.pieces[0].value == 0);
    CHECK_FALSE(f.pieces[1].lo_closed);
    CHECK(f.pieces[1].value == 1);
}

TEST_CASE("step_function matches the brute-force oracle") {
    std::vector<HRep> cases = {unit_cube(2), standard_simplex(2), cross_polytope(2),
                               standard_simplex(3), segment(1, 2),
                               segment(Rational(0), Rational(3, 2)),
                               make_hrep(2, {hs({2, 1}, 2), hs({-1, 0}, 0), hs({0, -1}, 1)})};
    std::vector<Rational> samples = {Rational(0),     Rational(1, 3), Rational(1, 2),
                                     Rational(2, 3),  Rational(1),    Rational(3, 2),
                                     Rational(2),     Rational(5, 2), Rational(3)};
    for (const HRep& p : cases) {
        for (bool strict : {false, true}) {
            StepFunction f = step_function(p, Rational(3), strict);
            check_partition(f);
            for (const Rational& s : samples) {
                CHECK(value_at(f, s) == brute_count(p, s, strict));
                CHECK(count(p, s, strict) == brute_count(p, s, strict));
            }
        }
    }
}

TEST_CASE("strict counts never exceed non-strict counts") {
    for (const HRep& p : {unit_cube(2), cross_polytope(2), segment(1, 2)}) {
        for (const Rational& s : {Rational(0), Rational(1, 2), Rational(1), Rational(7, 3)}) {
            CHECK(count(p, s, true) <= count(p, s, false));
        }
    }
}

TEST_CASE("count conventions at s = 0 and errors") {
    CHECK(count(unit_cube(2), Rational(0), false) == 1);
    CHECK(count(unit_cube(2), Rational(0), true) == 0);
    CHECK(count(cross_polytope(2), Rational(1), false) == 5);
    CHECK(count(standard_simplex(2), Rational(1), false) == 3);
    CHECK_THROWS_AS(count(unit_cube(2), Rational(-1), false), error);
    CHECK_THROWS_AS(step_function(unit_cube(2), Rational(0), false), error);
    HRep empty = make_hrep(1, {hs({1}, -1), hs({-1}, 0)});
    CHECK(count(empty, Rational(0), false) == 0);
    CHECK(count(empty, Rational(2), false) == 0);
    StepFunction f = step_function(empty, Rational(2), false);
    REQUIRE(f.pieces.size() == 1);
    CHECK(f.pieces[0].value == 0);
}

TEST_CASE("step function of the origin polytope is constant 1") {
    HRep origin = make_hrep(1, {hs({1}, 0), hs({-1}, 0)});
    StepFunction f = step_function(origin, Rational(5, 2), false);
    REQUIRE(f.pieces.size() == 1);
    CHECK(f.pieces[0].value == 1);
    CHECK(drop_points(f).empty());
}

TEST_CASE("drop_points of [1,2] on [0, 11/2]") {
    StepFunction f = step_function(segment(1, 2), Rational(11, 2), false);
    std::vector<Rational> drops = drop_points(f);
    REQUIRE(drops.size() == 5);
    for (int i = 0; i < 5; ++i) CHECK(drops[i] == Rational(i + 1));
}

TEST_CASE("monotone step functions have no drops") {
    for (const HRep& p : {unit_cube(2), cross_polytope(2), standard_simplex(3)}) {
        StepFunction f = step_function(p, Rational(4), false);
        CHECK(drop_points(f).empty());
        long prev = -1;
        for (const Piece& piece : f.pieces) {
            CHECK(piece.value > prev);
            prev = piece.value;
        }
    }
}

TEST_CASE("floor_property on floor-like and non-floor-like functions") {
    CHECK(floor_property(step_function(unit_cube(2), Rational(4), false)).holds);
    CHECK(floor_property(step_function(cross_polytope(2), Rational(4), false)).holds);
    CHECK(floor_property(step_function(standard_simplex(3), Rational(4), false)).holds);

    PropertyResult r = floor_property(step_function(segment(Rational(0), Rational(3, 2)), Rational(3), false));
    CHECK_FALSE(r.holds);
    REQUIRE(r.witness.has_value());
    // First violation: L(2/3) = 2 while L(0) = 1.
    CHECK(*r.witness == Rational(2, 3));

    // With the origin outside, L falls from the conventional L(0) = 1 to 0
    // on (0, 1/2); that run is open, so the witness is its midpoint.
    PropertyResult q = floor_property(step_function(segment(1, 2), Rational(3), false));
    CHECK_FALSE(q.holds);
    REQUIRE(q.witness.has_value());
    CHECK(*q.witness == Rational(1, 4));
}

TEST_CASE("ceil_property on interior step functions") {
    CHECK(ceil_property(step_function(unit_cube(2), Rational(3), true)).holds);
    CHECK(ceil_property(step_function(cross_polytope(2), Rational(3), true)).holds);

    PropertyResult r = ceil_property(step_function(segment(Rational(0), Rational(3, 2)), Rational(3), true));
    CHECK_FALSE(r.holds);
    REQUIRE(r.witness.has_value());
    // Interior count is 0 on (0, 2/3] but 1 at the window anchor s = 1; the
    // violating run is left-open, so the witness is its midpoint.
    CHECK(*r.witness == Rational(1, 3));
}

TEST_CASE("ceil_property ignores the s = 0 value") {
    // Strict counters always start at 0 while the (0,1] window may hold a
    // positive constant; only in-window variation should matter.
    HRep sym = make_hrep(1, {hs({1}, 1), hs({-1}, 1)});  // segment [-1,1]
    StepFunction f = step_function(sym, Rational(3), true);
    CHECK(value_at(f, Rational(1, 2)) == 1);  // 0 is interior from the start
    CHECK(ceil_property(f).holds);
}

TEST_CASE("restriction to integers equals the classical counter") {
    for (const HRep& p : {unit_cube(2), unit_cube(3), standard_simplex(2), cross_polytope(2)}) {
        StepFunction f = step_function(p, Rational(4), false);
        for (int t = 0; t <= 4; ++t) CHECK(value_at(f, Rational(t)) == brute_count(p, Rational(t), false));
    }
}

TEST_CASE("cube closed form (floor(s)+1)^d") {
    for (int d = 1; d <= 3; ++d) {
        StepFunction f = step_function(unit_cube(d), Rational(5), false);
        for (const Piece& piece : f.pieces) {
            // Sample the piece at its left end when closed, else at the
            // midpoint; the closed form must hold everywhere on it.
            Rational s = piece.lo_closed ? piece.lo : (piece.lo + piece.hi) / 2;
            Int base = floor_int(s) + 1;
            Int expect = 1;
            for (int i = 0; i < d; ++i) expect *= base;
            CHECK(Int(piece.value) == expect);
        }
    }
}

TEST_CASE("value_at rejects out-of-window arguments") {
    StepFunction f = step_function(unit_cube(1), Rational(2), false);
    CHECK_THROWS_AS(value_at(f, Rational(5, 2)), error);
    CHECK_THROWS_AS(value_at(f, Rational(-1)), error);
}

TEST_CASE("relative interior counter equals the strict one when full-dimensional") {
    for (const HRep& p : {unit_cube(2), cross_polytope(2), standard_simplex(3), segment(1, 2)})
        CHECK(relative_interior_step_function(p, 3) == step_function(p, 3, true));
}

TEST_CASE("relative interior counter pins dilations on a stranded point") {
    // P = {1}: sP touches the lattice exactly at the integers, so every
    // dilation with a point is a singleton piece.
    HRep p = make_hrep(1, {{{Rational(1)}, Rational(1)}, {{Rational(-1)}, Rational(-1)}});
    StepFunction f = relative_interior_step_function(p, Rational(5) / 2);
    std::vector<Piece> expect = {
        {0, true, 1, false, 0},
        {1, true, 1, true, 1},
        {1, false, 2, false, 0},
        {2, true, 2, true, 1},
        {2, false, Rational(5) / 2, true, 0},
    };
    CHECK(f.pieces == expect);
}

TEST_CASE("relative interior counter on a diagonal segment through the origin") {
    // conv{0, (1,1)}: the relative interior of the dilate holds (k,k) with
    // 0 < k < s, matching the interior of the projected segment [0, 1].
    HRep diag = make_hrep(2, {{{Rational(1), Rational(-1)}, Rational(0)},
                              {{Rational(-1), Rational(1)}, Rational(0)},
                              {{Rational(1), Rational(0)}, Rational(1)},
                              {{Rational(-1), Rational(0)}, Rational(0)}});
    StepFunction f = relative_interior_step_function(diag, 3);
    CHECK(f == step_function(lattice_project(diag), 3, true));
    CHECK(value_at(f, 2) == 1);
}
