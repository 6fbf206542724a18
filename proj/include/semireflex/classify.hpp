#pragma once

#include "semireflex/ehrhart.hpp"

#include <optional>
#include <string>
#include <vector>

namespace semireflex {

// Outcome of the representation-based test. When semi_reflexive is true the
// canonical form is a minimal facet description with every offset in {0, 1}
// and an integer normal on every offset-1 row; for a lower-dimensional input
// it lives in the projected dimension.
struct StructuralResult {
    bool semi_reflexive = false;
    std::optional<HRep> canonical;
};

// Floor-property check of the counting function, valid on [0, s_max] only.
struct NumericCheck {
    bool holds = false;
    Rational s_max;
    std::optional<Rational> witness;
};

struct Classification {
    bool origin_in_p = false;
    bool full_dim = false;
    bool semi_reflexive_structural = false;
    std::optional<HRep> canonical_hrep;
    std::optional<NumericCheck> semi_reflexive_numeric;
    std::vector<Rational> drop_points;  // decreases of the counter in (0, s_max)
    bool reflexive = false;
    std::vector<std::string> notes;
};

// Three equivalent readings of reflexivity, evaluated independently. When
// the origin is not strictly interior all three are false and the report
// notes why; the predicates still agree.
struct DualityReport {
    bool origin_interior = false;
    bool reflexive = false;             // integer vertices on both sides
    bool both_semi_reflexive = false;   // P and its polar dual pass the structural test
    bool matrix_form = false;           // A x <= 1 with integer A, integer vertices
    bool agree = false;
    std::vector<std::string> notes;
};

// Decides whether P can be written with all offsets in {0, 1} and integer
// normals on the offset-1 rows: false when the origin is outside; a point
// polytope passes vacuously; lower-dimensional inputs are projected first;
// otherwise the canonical minimal facet form is normalized and inspected.
StructuralResult is_semi_reflexive_structural(const HRep& p);

// Semi-decision on [0, s_max] via the floor property of the step function.
NumericCheck is_semi_reflexive_numeric(const HRep& p, const Rational& s_max);

// Integer vertices, origin strictly interior, and integer vertices of the
// polar dual.
bool is_reflexive(const HRep& p);

DualityReport check_reflexive_duality(const HRep& p);

// Constructive deep point: an integer point of the cone spanned by the
// generators whose distance to every facet hyperplane exceeds delta,
// verified in squared form. Generators must span the full space.
IntVector cone_deep_point(const std::vector<RatVector>& generators, const Rational& delta);

// Counting function of the relative interior of sP, for any bounded P;
// matches strict ambient counting when P is full-dimensional and is
// constant 0 for an empty P.
StepFunction interior_step_function(const HRep& p, const Rational& s_max);

// Full report over one polytope; numeric check skipped for empty inputs.
Classification classify(const HRep& p, const Rational& s_max);

}  // namespace semireflex
