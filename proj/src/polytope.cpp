#include "semireflex/polytope.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace semireflex {

namespace {

// Fourier-Motzkin works on rows (a | b) meaning <a, x> <= b, kept as
// primitive integer vectors of length d+1 so duplicates collapse.
using FmRow = IntVector;

// Drops vacuous rows, records constant contradictions, deduplicates.
std::vector<FmRow> fm_normalize(const std::vector<FmRow>& rows, std::size_t d, bool& infeasible) {
    std::set<FmRow> seen;
    std::vector<FmRow> out;
    for (const FmRow& row : rows) {
        bool zero_a = true;
        for (std::size_t j = 0; j < d && zero_a; ++j) zero_a = row[j] == 0;
        if (zero_a) {
            if (row[d] < 0) infeasible = true;
            continue;
        }
        FmRow prim = primitive_integer_vector(row);
        if (seen.insert(prim).second) out.push_back(prim);
    }
    return out;
}

// Eliminates variable k: keeps rows with zero coefficient, combines each
// positive/negative pair into the positive combination that cancels x_k.
std::vector<FmRow> fm_eliminate(const std::vector<FmRow>& rows, std::size_t k, std::size_t d,
                                bool& infeasible) {
    std::vector<FmRow> out;
    std::vector<const FmRow*> pos, neg;
    for (const FmRow& row : rows) {
        if (row[k] > 0)
            pos.push_back(&row);
        else if (row[k] < 0)
            neg.push_back(&row);
        else
            out.push_back(row);
    }
    for (const FmRow* p : pos) {
        for (const FmRow* n : neg) {
            FmRow combined(d + 1);
            for (std::size_t j = 0; j <= d; ++j)
                combined[j] = -(*n)[k] * (*p)[j] + (*p)[k] * (*n)[j];
            assert(combined[k] == 0);
            out.push_back(std::move(combined));
        }
    }
    return fm_normalize(out, d, infeasible);
}

std::vector<FmRow> fm_rows(const HRep& p, bool homogeneous, bool& infeasible) {
    const std::size_t d = static_cast<std::size_t>(p.dim);
    std::vector<FmRow> raw;
    raw.reserve(p.halfspaces.size());
    for (const HalfSpace& h : p.halfspaces) {
        RatVector row(d + 1);
        for (std::size_t j = 0; j < d; ++j) row[j] = h.a[j];
        row[d] = homogeneous ? Rational(0) : h.b;
        FmRow prim(d + 1);
        // Scale jointly so the whole row is primitive integral.
        prim = primitive_integer_vector(row);
        raw.push_back(std::move(prim));
    }
    return fm_normalize(raw, d, infeasible);
}

// Exact feasibility of the inequality system by eliminating every variable.
bool fm_feasible(const HRep& p) {
    const std::size_t d = static_cast<std::size_t>(p.dim);
    bool infeasible = false;
    std::vector<FmRow> rows = fm_rows(p, false, infeasible);
    for (std::size_t k = 0; k < d && !infeasible && !rows.empty(); ++k)
        rows = fm_eliminate(rows, k, d, infeasible);
    return !infeasible;
}

template <typename Fn>
void for_each_combination(std::size_t n, std::size_t r, Fn&& fn) {
    if (r > n) return;
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    while (true) {
        fn(idx);
        std::size_t i = r;
        while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

void check_shapes(int dim, const std::vector<HalfSpace>& halfspaces) {
    if (dim < 1) throw dimension_error("make_hrep: dimension must be positive");
    if (halfspaces.empty()) throw dimension_error("make_hrep: no half-spaces");
    for (const HalfSpace& h : halfspaces) {
        if (h.a.size() != static_cast<std::size_t>(dim))
            throw dimension_error("make_hrep: normal length does not match dimension");
        if (is_zero(h.a)) throw dimension_error("make_hrep: zero normal vector");
    }
}

// Affine dimension of a point set: rank of differences from the first point.
int affine_rank(const std::vector<RatVector>& points, std::size_t dim) {
    if (points.empty()) return -1;
    if (points.size() == 1) return 0;
    RatMatrix diffs(points.size() - 1, dim);
    for (std::size_t i = 1; i < points.size(); ++i)
        for (std::size_t j = 0; j < dim; ++j) diffs.at(i - 1, j) = points[i][j] - points[0][j];
    return rank(diffs);
}

}  // namespace

HRep make_hrep(int dim, std::vector<HalfSpace> halfspaces) {
    check_shapes(dim, halfspaces);
    HRep p{dim, std::move(halfspaces), false};
    if (!fm_feasible(p)) {
        p.empty = true;
        return p;
    }
    if (!is_bounded(p)) throw unbounded_error("make_hrep: set is unbounded");
    return p;
}

bool is_bounded(const HRep& p) {
    check_shapes(p.dim, p.halfspaces);
    const std::size_t d = static_cast<std::size_t>(p.dim);
    // The cone is {0} iff its projection to every coordinate axis is {0},
    // i.e. elimination pins each x_j between rows of both signs.
    for (std::size_t j = 0; j < d; ++j) {
        bool infeasible = false;  // never set: homogeneous systems contain 0
        std::vector<FmRow> rows = fm_rows(p, true, infeasible);
        for (std::size_t k = 0; k < d; ++k) {
            if (k == j) continue;
            rows = fm_eliminate(rows, k, d, infeasible);
        }
        bool above = false, below = false;
        for (const FmRow& row : rows) {
            if (row[j] > 0) above = true;
            if (row[j] < 0) below = true;
        }
        if (!above || !below) return false;
    }
    return true;
}

VRep enumerate_vertices(const HRep& p) {
    if (p.empty) return {p.dim, {}};
    if (!is_bounded(p)) throw unbounded_error("enumerate_vertices: set is unbounded");
    const std::size_t d = static_cast<std::size_t>(p.dim);
    const std::size_t m = p.halfspaces.size();
    std::set<RatVector> found;
    for_each_combination(m, d, [&](const std::vector<std::size_t>& idx) {
        RatMatrix a(d, d);
        RatVector b(d);
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t c = 0; c < d; ++c) a.at(r, c) = p.halfspaces[idx[r]].a[c];
            b[r] = p.halfspaces[idx[r]].b;
        }
        auto x = solve_linear_system(a, b);
        if (x && contains(p, *x, false)) found.insert(*x);
    });
    return {p.dim, std::vector<RatVector>(found.begin(), found.end())};
}

HRep minimal_facets(const HRep& p) {
    if (p.empty) throw error("minimal_facets: empty polytope");
    VRep v = enumerate_vertices(p);
    const std::size_t d = static_cast<std::size_t>(p.dim);
    if (affine_rank(v.vertices, d) != p.dim)
        throw error("minimal_facets: polytope is not full-dimensional");

    std::vector<HalfSpace> facets;
    std::set<std::pair<IntVector, Rational>> seen;
    for (const HalfSpace& h : p.halfspaces) {
        std::vector<RatVector> tight;
        for (const RatVector& w : v.vertices)
            if (dot(h.a, w) == h.b) tight.push_back(w);
        if (affine_rank(tight, d) != p.dim - 1) continue;
        auto canon = canonical_inequality(h.a, h.b);
        if (!seen.insert(canon).second) continue;
        facets.push_back({to_rational(canon.first), canon.second});
    }
    return {p.dim, std::move(facets), false};
}

int affine_dimension(const HRep& p) {
    VRep v = enumerate_vertices(p);
    if (v.vertices.empty()) throw error("affine_dimension: empty polytope");
    return affine_rank(v.vertices, static_cast<std::size_t>(p.dim));
}

HRep lattice_project(const HRep& p) {
    const std::size_t d = static_cast<std::size_t>(p.dim);
    if (!contains(p, RatVector(d, Rational(0)), false))
        throw error("lattice_project: polytope must contain the origin");
    VRep v = enumerate_vertices(p);
    const int k = affine_rank(v.vertices, d);
    if (k == p.dim) throw error("lattice_project: polytope is already full-dimensional");
    if (k == 0) throw error("lattice_project: affine dimension 0 (single point)");

    // Since 0 is in P, the affine hull is the linear span of the vertices.
    // A row transform bringing the matrix of vertex columns to Hermite form
    // is a unimodular coordinate change y = Ux under which that span becomes
    // the span of the first k coordinates.
    std::vector<IntVector> columns;
    for (const RatVector& w : v.vertices)
        if (!is_zero(w)) columns.push_back(primitive_integer_vector(w));
    IntMatrix span(d, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (std::size_t i = 0; i < d; ++i) span.at(i, j) = columns[j][i];
    auto [h, u] = hermite_normal_form(span);
    IntMatrix uinv = unimodular_inverse(u);

    // x = U^{-1} y turns <a, x> <= b into <U^{-T} a, y> <= b; on the image
    // the trailing coordinates of y vanish, so only the first k survive.
    std::vector<HalfSpace> projected;
    for (const HalfSpace& hs : p.halfspaces) {
        RatVector na(static_cast<std::size_t>(k));
        for (std::size_t r = 0; r < static_cast<std::size_t>(k); ++r) {
            Rational acc = 0;
            for (std::size_t c = 0; c < d; ++c) acc += Rational(uinv.at(c, r)) * hs.a[c];
            na[r] = acc;
        }
        if (is_zero(na)) {
            assert(hs.b >= 0);  // holds because 0 satisfies every inequality
            continue;
        }
        projected.push_back({std::move(na), hs.b});
    }
    return make_hrep(k, std::move(projected));
}

HRep polar_dual(const VRep& v) {
    std::vector<HalfSpace> halfspaces;
    for (const RatVector& w : v.vertices) {
        if (is_zero(w)) continue;  // the origin contributes the vacuous 0 <= 1
        halfspaces.push_back({w, Rational(1)});
    }
    if (halfspaces.empty()) throw error("polar_dual: every vertex is the origin");
    return {v.dim, std::move(halfspaces), false};
}

bool contains(const HRep& p, const RatVector& x, bool strict) {
    if (x.size() != static_cast<std::size_t>(p.dim))
        throw dimension_error("contains: point dimension mismatch");
    for (const HalfSpace& h : p.halfspaces) {
        Rational lhs = dot(h.a, x);
        if (strict ? !(lhs < h.b) : !(lhs <= h.b)) return false;
    }
    return true;
}

std::pair<IntVector, Rational> canonical_inequality(const RatVector& a, const Rational& b) {
    IntVector prim = primitive_integer_vector(a);
    std::size_t i = 0;
    while (a[i] == 0) ++i;
    Rational scale = Rational(prim[i]) / a[i];
    assert(scale > 0);
    return {std::move(prim), b * scale};
}

}  // namespace semireflex
