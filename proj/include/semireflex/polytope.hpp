#pragma once

#include "semireflex/linalg.hpp"
#include "semireflex/rational.hpp"

#include <utility>
#include <vector>

namespace semireflex {

// Closed half-space { x : <a, x> <= b }.
struct HalfSpace {
    RatVector a;
    Rational b;
};

// Intersection of half-spaces. Instances from make_hrep are validated:
// bounded, and nonempty unless `empty` is set (the inequalities are kept
// either way). polar_dual returns a raw HRep that may describe an unbounded
// set; run is_bounded before treating it as a polytope.
struct HRep {
    int dim = 0;
    std::vector<HalfSpace> halfspaces;
    bool empty = false;
};

// Vertex set, lexicographically sorted and duplicate-free.
struct VRep {
    int dim = 0;
    std::vector<RatVector> vertices;
};

// Validating constructor. Throws dimension_error on shape mismatch or a zero
// normal, unbounded_error when the recession cone is nontrivial; an
// infeasible system yields the empty flag, not an error.
HRep make_hrep(int dim, std::vector<HalfSpace> halfspaces);

// True iff the recession cone { x : <a_i, x> <= 0 for all i } is {0},
// decided by exact Fourier-Motzkin elimination.
bool is_bounded(const HRep& p);

// Exact vertex set by solving every dim-subset of tight constraints and
// keeping feasible unique solutions. Empty input gives an empty VRep.
VRep enumerate_vertices(const HRep& p);

// Facet-defining inequalities only (tight vertex set of affine rank dim-1),
// one per facet, each scaled to a primitive integer normal, in first-seen
// input order. Requires a full-dimensional bounded polytope.
HRep minimal_facets(const HRep& p);

// Dimension of the affine hull of the vertex set.
int affine_dimension(const HRep& p);

// For a lower-dimensional P containing the origin: a full-dimensional
// polytope Q in dimension aff-dim(P) with the same lattice point counts in
// every dilation, obtained from a unimodular coordinate change that maps the
// span of P onto the leading coordinate subspace.
HRep lattice_project(const HRep& p);

// { x : <v, x> <= 1 for every vertex v }. Zero vertices contribute nothing.
// The result is bounded iff the origin is interior to the source polytope,
// which the caller must check.
HRep polar_dual(const VRep& v);

// Membership test; strict=true tests the topological interior.
bool contains(const HRep& p, const RatVector& x, bool strict);

// (a, b) rescaled by the unique positive factor that makes a primitive
// integral.
std::pair<IntVector, Rational> canonical_inequality(const RatVector& a, const Rational& b);

}  // namespace semireflex
