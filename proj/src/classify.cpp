#include "semireflex/classify.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace semireflex {

namespace {

bool all_integral(const RatVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& e) { return is_integer(e); });
}

bool all_integral_vertices(const VRep& v) {
    return std::all_of(v.vertices.begin(), v.vertices.end(),
                       [](const RatVector& w) { return all_integral(w); });
}

// Canonical description of the point polytope {0}: offset-0 rows only.
HRep origin_canonical(int dim) {
    std::vector<HalfSpace> rows;
    for (int i = 0; i < dim; ++i) {
        RatVector up(static_cast<std::size_t>(dim), Rational(0));
        RatVector down(static_cast<std::size_t>(dim), Rational(0));
        up[static_cast<std::size_t>(i)] = 1;
        down[static_cast<std::size_t>(i)] = -1;
        rows.push_back({std::move(up), Rational(0)});
        rows.push_back({std::move(down), Rational(0)});
    }
    return HRep{dim, std::move(rows), false};
}

// Normalizes the minimal facet form of a full-dimensional polytope into the
// offset-{0,1} shape when possible.
StructuralResult normalize_facets(const HRep& full_dim) {
    HRep facets = minimal_facets(full_dim);
    std::vector<HalfSpace> rows;
    for (const HalfSpace& h : facets.halfspaces) {
        if (h.b < 0) return {false, std::nullopt};
        if (h.b == 0) {
            rows.push_back({to_rational(primitive_integer_vector(h.a)), Rational(0)});
            continue;
        }
        RatVector scaled(h.a.size());
        for (std::size_t j = 0; j < h.a.size(); ++j) scaled[j] = h.a[j] / h.b;
        if (!all_integral(scaled)) return {false, std::nullopt};
        rows.push_back({std::move(scaled), Rational(1)});
    }
    return {true, make_hrep(full_dim.dim, std::move(rows))};
}

}  // namespace

StructuralResult is_semi_reflexive_structural(const HRep& p) {
    const std::size_t d = static_cast<std::size_t>(p.dim);
    if (p.empty || !contains(p, RatVector(d, Rational(0)), false)) return {false, std::nullopt};
    const int k = affine_dimension(p);
    if (k == 0) return {true, origin_canonical(p.dim)};
    if (k < p.dim) return normalize_facets(lattice_project(p));
    return normalize_facets(p);
}

NumericCheck is_semi_reflexive_numeric(const HRep& p, const Rational& s_max) {
    if (s_max < 2) throw error("is_semi_reflexive_numeric: s_max must be at least 2");
    PropertyResult r = floor_property(step_function(p, s_max, false));
    return {r.holds, s_max, r.witness};
}

bool is_reflexive(const HRep& p) {
    VRep v = enumerate_vertices(p);
    if (v.vertices.empty() || !all_integral_vertices(v)) return false;
    if (!contains(p, RatVector(static_cast<std::size_t>(p.dim), Rational(0)), true)) return false;
    HRep dual = polar_dual(v);
    assert(is_bounded(dual));  // guaranteed by the strictly interior origin
    return all_integral_vertices(enumerate_vertices(dual));
}

DualityReport check_reflexive_duality(const HRep& p) {
    DualityReport report;
    const std::size_t d = static_cast<std::size_t>(p.dim);
    report.origin_interior = !p.empty && contains(p, RatVector(d, Rational(0)), true);
    report.reflexive = is_reflexive(p);

    StructuralResult primal;
    if (report.origin_interior) {
        primal = is_semi_reflexive_structural(p);
        HRep dual = polar_dual(enumerate_vertices(p));
        StructuralResult dual_res = is_semi_reflexive_structural(dual);
        report.both_semi_reflexive = primal.semi_reflexive && dual_res.semi_reflexive;
        if (!primal.semi_reflexive) report.notes.push_back("P is not semi-reflexive");
        if (!dual_res.semi_reflexive) report.notes.push_back("the polar dual is not semi-reflexive");
    } else {
        report.notes.push_back(
            "origin is not strictly interior: the polar dual is unbounded and every "
            "reading of reflexivity fails");
    }

    if (report.origin_interior && primal.semi_reflexive) {
        // A x <= 1 form: the canonical description must carry no offset-0
        // rows, and reflexivity additionally needs integer vertices.
        bool zero_rows = false;
        for (const HalfSpace& h : primal.canonical->halfspaces) zero_rows = zero_rows || h.b == 0;
        report.matrix_form = !zero_rows && all_integral_vertices(enumerate_vertices(p));
        if (zero_rows) report.notes.push_back("canonical form needs offset-0 rows");
    }
    if (report.origin_interior && !all_integral_vertices(enumerate_vertices(p)))
        report.notes.push_back("P has non-integer vertices");

    report.agree = report.reflexive == report.both_semi_reflexive &&
                   report.reflexive == report.matrix_form;
    if (!report.agree) report.notes.push_back("reflexivity readings disagree");
    return report;
}

IntVector cone_deep_point(const std::vector<RatVector>& generators, const Rational& delta) {
    if (delta <= 0) throw error("cone_deep_point: delta must be positive");
    if (generators.empty()) throw error("cone_deep_point: no generators");
    const std::size_t d = generators.front().size();
    for (const RatVector& g : generators)
        if (g.size() != d) throw dimension_error("cone_deep_point: generator length mismatch");
    RatMatrix gen_rows(generators.size(), d);
    for (std::size_t i = 0; i < generators.size(); ++i)
        for (std::size_t j = 0; j < d; ++j) gen_rows.at(i, j) = generators[i][j];
    if (rank(gen_rows) != static_cast<int>(d))
        throw error("cone_deep_point: cone is not full-dimensional");

    // Facet normals: for every (d-1)-subset spanning a hyperplane, the
    // normal direction with every generator on its nonnegative side.
    std::set<IntVector> normals;
    std::vector<std::size_t> idx(d - 1);
    const auto try_subset = [&](const std::vector<std::size_t>& subset) {
        RatMatrix sys(d, d);
        RatVector rhs(d, Rational(0));
        for (std::size_t r = 0; r < subset.size(); ++r)
            for (std::size_t c = 0; c < d; ++c) sys.at(r, c) = generators[subset[r]][c];
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t c = 0; c < d; ++c) sys.at(d - 1, c) = c == j ? 1 : 0;
            rhs[d - 1] = 1;
            auto n = solve_linear_system(sys, rhs);
            if (!n) continue;
            bool nonneg = true, nonpos = true;
            for (const RatVector& g : generators) {
                Rational side = dot(*n, g);
                nonneg = nonneg && side >= 0;
                nonpos = nonpos && side <= 0;
            }
            if (nonneg)
                normals.insert(primitive_integer_vector(*n));
            else if (nonpos) {
                RatVector flipped(d);
                for (std::size_t c = 0; c < d; ++c) flipped[c] = -(*n)[c];
                normals.insert(primitive_integer_vector(flipped));
            }
            return;
        }
    };
    // All (d-1)-subsets, iterated directly to keep the helper local.
    if (d == 1) {
        try_subset({});
    } else {
        for (std::size_t i = 0; i < d - 1; ++i) idx[i] = i;
        while (true) {
            try_subset(idx);
            std::size_t i = d - 1;
            while (i > 0 && idx[i - 1] == generators.size() - (d - 1) + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < d - 1; ++j) idx[j] = idx[j - 1] + 1;
        }
    }

    RatVector x0(d, Rational(0));
    for (const RatVector& g : generators)
        for (std::size_t j = 0; j < d; ++j) x0[j] += g[j];

    // Smallest integer multiple lambda of the denominator clearing factor
    // with lambda^2 * eps^2 > delta^2, where eps is the distance from x0 to
    // the nearest facet hyperplane.
    Int clear = 1;
    for (const Rational& e : x0) clear = boost::multiprecision::lcm(clear, denominator(e));
    Rational lambda(clear);
    if (!normals.empty()) {
        std::optional<Rational> eps2;
        for (const IntVector& n : normals) {
            Rational num = dot(n, x0);
            num *= num;
            Rational den(dot(n, n));
            Rational dist2 = num / den;
            if (!eps2 || dist2 < *eps2) eps2 = dist2;
        }
        assert(*eps2 > 0);  // x0 is interior: some generator is off each facet
        Rational q = delta * delta / (Rational(clear) * Rational(clear) * *eps2);
        Int m = isqrt(floor_int(q)) + 1;
        lambda = Rational(clear * m);
    }

    IntVector x(d);
    for (std::size_t j = 0; j < d; ++j) {
        Rational e = lambda * x0[j];
        assert(is_integer(e));
        x[j] = numerator(e);
    }
    for (const IntVector& n : normals) {
        Int side = dot(n, x);
        if (side < 0 || Rational(side * side) < delta * delta * Rational(dot(n, n)))
            throw error("cone_deep_point: verification failed");
    }
    return x;
}

StepFunction interior_step_function(const HRep& p, const Rational& s_max) {
    if (p.empty) return step_function(p, s_max, true);
    return relative_interior_step_function(p, s_max);
}

Classification classify(const HRep& p, const Rational& s_max) {
    Classification c;
    const std::size_t d = static_cast<std::size_t>(p.dim);
    c.origin_in_p = !p.empty && contains(p, RatVector(d, Rational(0)), false);
    c.full_dim = !p.empty && affine_dimension(p) == p.dim;

    StructuralResult st = is_semi_reflexive_structural(p);
    c.semi_reflexive_structural = st.semi_reflexive;
    c.canonical_hrep = std::move(st.canonical);
    if (!p.empty) {
        if (s_max < 2) throw error("classify: s_max must be at least 2");
        StepFunction step = step_function(p, s_max, false);
        PropertyResult floor = floor_property(step);
        c.semi_reflexive_numeric = NumericCheck{floor.holds, s_max, floor.witness};
        c.drop_points = drop_points(step);
    }
    c.reflexive = is_reflexive(p);

    if (p.empty) {
        c.notes.push_back("empty polytope: numeric check skipped");
    } else {
        if (!c.origin_in_p) c.notes.push_back("origin lies outside P");
        if (!c.full_dim && c.origin_in_p) {
            if (affine_dimension(p) == 0)
                c.notes.push_back("point polytope {0}");
            else
                c.notes.push_back("lower-dimensional: classified through a unimodular projection");
        }
    }
    return c;
}

}  // namespace semireflex
