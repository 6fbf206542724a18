#pragma once

#include "semireflex/polytope.hpp"

#include <optional>
#include <vector>

namespace semireflex {

// The set { s > 0 : x lies in sP } (or in the interior of sP) for one
// integer point x. Always a single interval, clipped to the positive axis,
// so lo >= 0 and lo == 0 is always open; hi absent means unbounded above.
struct MembershipInterval {
    IntVector point;
    bool empty = false;
    Rational lo = 0;
    bool lo_closed = false;
    std::optional<Rational> hi;
    bool hi_closed = false;
};

struct Piece {
    Rational lo;
    bool lo_closed;
    Rational hi;
    bool hi_closed;
    long value;

    friend bool operator==(const Piece&, const Piece&) = default;
};

// Exact dilation counter s -> #(sP intersect Z^d) on [0, s_max]: the pieces
// partition the window, endpoints carry explicit closedness, and adjacent
// pieces have distinct values.
struct StepFunction {
    Rational s_max;
    std::vector<Piece> pieces;

    friend bool operator==(const StepFunction&, const StepFunction&) = default;
};

struct PropertyResult {
    bool holds = false;
    std::optional<Rational> witness;
};

// Per-constraint rays: b > 0 gives s >= <a,x>/b, b < 0 gives s <= <a,x>/b,
// b = 0 is an s-independent sign condition (strict mode uses strict
// inequalities throughout).
MembershipInterval membership_interval(const HRep& p, const IntVector& x, bool strict);

// Sweeps the membership intervals of every candidate integer point in the
// bounding box of conv({0} union s_max*P). The value at s = 0 is 1 for the
// non-strict counter and 0 for the strict one (0 for an empty polytope).
StepFunction step_function(const HRep& p, const Rational& s_max, bool strict);

// Counter of the relative interior of sP. Rows that hold with equality on
// all of P track the scaled affine hull, so a point meets one at a single
// dilation only; the remaining rows count strictly. Coincides with the
// strict counter when P is full-dimensional.
StepFunction relative_interior_step_function(const HRep& p, const Rational& s_max);

// Pointwise count, evaluated directly from the inequalities.
long count(const HRep& p, const Rational& s, bool strict);

// Value of the step function at a point of [0, s_max].
long value_at(const StepFunction& f, const Rational& s);

// All s in (0, s_max) where the value immediately after s is smaller than
// the value at s, in increasing order.
std::vector<Rational> drop_points(const StepFunction& f);

// L(s) = L(floor(s)): constancy on every window [k, k+1) clipped to
// [0, s_max]. On failure the witness is the smallest violating s when the
// violating set has a minimum, else the midpoint of its first open run.
PropertyResult floor_property(const StepFunction& f);

// Interior variant L(s) = L(ceil(s)): constancy on every (k-1, k] clipped
// to (0, s_max]; the value at s = 0 is exempt.
PropertyResult ceil_property(const StepFunction& f);

}  // namespace semireflex
