#include "semireflex/ehrhart.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace semireflex {

namespace {

void tighten_lo(MembershipInterval& iv, const Rational& v, bool closed) {
    if (v > iv.lo) {
        iv.lo = v;
        iv.lo_closed = closed;
    } else if (v == iv.lo) {
        iv.lo_closed = iv.lo_closed && closed;
    }
}

void tighten_hi(MembershipInterval& iv, const Rational& v, bool closed) {
    if (!iv.hi || v < *iv.hi) {
        iv.hi = v;
        iv.hi_closed = closed;
    } else if (v == *iv.hi) {
        iv.hi_closed = iv.hi_closed && closed;
    }
}

MembershipInterval canonical_empty(IntVector point) {
    MembershipInterval iv;
    iv.point = std::move(point);
    iv.empty = true;
    return iv;
}

// One endpoint with closedness; used to intersect pieces with unit windows.
struct Bound {
    Rational value;
    bool closed;
};

struct Slice {
    Bound lo, hi;
    bool empty;
};

Slice intersect(const Bound& wlo, const Bound& whi, const Piece& piece) {
    Bound lo = wlo, hi = whi;
    if (piece.lo > lo.value)
        lo = {piece.lo, piece.lo_closed};
    else if (piece.lo == lo.value)
        lo.closed = lo.closed && piece.lo_closed;
    if (piece.hi < hi.value)
        hi = {piece.hi, piece.hi_closed};
    else if (piece.hi == hi.value)
        hi.closed = hi.closed && piece.hi_closed;
    bool empty = lo.value > hi.value || (lo.value == hi.value && !(lo.closed && hi.closed));
    return {lo, hi, empty};
}

// Shared scan for the two window properties. Windows are [k, k+1) anchored
// at their left end for the floor check and (k-1, k] anchored at the right
// end for the ceiling check, both clipped to the function's domain.
PropertyResult window_property(const StepFunction& f, bool floor_windows) {
    for (Int k = 0;; ++k) {
        Bound wlo{Rational(0), false}, whi{Rational(0), false};
        Rational ref_point;
        if (floor_windows) {
            if (Rational(k) > f.s_max) break;
            wlo = {Rational(k), true};
            ref_point = Rational(k);
            if (Rational(k + 1) <= f.s_max)
                whi = {Rational(k + 1), false};
            else
                whi = {f.s_max, true};
        } else {
            if (k == 0) continue;  // the s = 0 value is exempt
            if (Rational(k - 1) >= f.s_max) break;
            wlo = {Rational(k - 1), false};
            if (Rational(k) <= f.s_max) {
                whi = {Rational(k), true};
                ref_point = Rational(k);
            } else {
                whi = {f.s_max, true};
                ref_point = f.s_max;
            }
        }
        long ref = value_at(f, ref_point);
        for (const Piece& piece : f.pieces) {
            if (piece.value == ref) continue;
            Slice s = intersect(wlo, whi, piece);
            if (s.empty) continue;
            Rational witness =
                s.lo.closed ? s.lo.value : (s.lo.value + s.hi.value) / 2;
            return {false, witness};
        }
    }
    return {true, std::nullopt};
}

}  // namespace

MembershipInterval membership_interval(const HRep& p, const IntVector& x, bool strict) {
    if (x.size() != static_cast<std::size_t>(p.dim))
        throw dimension_error("membership_interval: point dimension mismatch");
    MembershipInterval iv;
    iv.point = x;
    for (const HalfSpace& h : p.halfspaces) {
        Rational t = dot(x, h.a);
        if (h.b > 0)
            tighten_lo(iv, t / h.b, !strict);
        else if (h.b < 0)
            tighten_hi(iv, t / h.b, !strict);
        else if (strict ? !(t < 0) : !(t <= 0))
            return canonical_empty(std::move(iv.point));
    }
    if (iv.hi) {
        if (iv.lo > *iv.hi || (iv.lo == *iv.hi && !(iv.lo_closed && iv.hi_closed)))
            return canonical_empty(std::move(iv.point));
    }
    return iv;
}

namespace {

// Core sweep shared by the boundary and relative-interior counting
// functions. Rows flagged implicit hold with equality on all of P, so a
// candidate point x satisfies one only at the single dilation s with
// <a,x> = s*b (no s at all when b = 0 and <a,x> != 0).
StepFunction build_step_function(const HRep& p, const Rational& s_max, bool strict,
                                 const std::vector<bool>* implicit) {
    if (s_max <= 0) throw error("step_function: s_max must be positive");
    if (!is_bounded(p)) throw unbounded_error("step_function: unbounded set");
    const std::size_t d = static_cast<std::size_t>(p.dim);

    // Collect membership intervals of every candidate point together with
    // the set of breakpoints they induce inside [0, s_max].
    std::set<Rational> cut_set{Rational(0), s_max};
    std::vector<MembershipInterval> intervals;
    if (!p.empty) {
        VRep v = enumerate_vertices(p);
        std::vector<Int> lo(d), hi(d);
        for (std::size_t j = 0; j < d; ++j) {
            Rational mn = 0, mx = 0;
            for (const RatVector& w : v.vertices) {
                mn = std::min(mn, w[j]);
                mx = std::max(mx, w[j]);
            }
            lo[j] = floor_int(s_max * mn);
            hi[j] = ceil_int(s_max * mx);
        }

        // Odometer scan with running constraint values; the innermost
        // coordinate only needs an increment per step.
        const std::size_t m = p.halfspaces.size();
        std::vector<Int> x = lo;
        std::vector<Rational> t(m);
        const auto recompute = [&] {
            for (std::size_t i = 0; i < m; ++i) t[i] = dot(x, p.halfspaces[i].a);
        };
        recompute();
        while (true) {
            MembershipInterval iv;
            iv.point = x;
            for (std::size_t i = 0; i < m && !iv.empty; ++i) {
                const Rational& b = p.halfspaces[i].b;
                if (implicit && (*implicit)[i]) {
                    if (b == 0) {
                        if (t[i] != 0) iv.empty = true;
                    } else {
                        Rational pin = t[i] / b;
                        tighten_lo(iv, pin, true);
                        tighten_hi(iv, pin, true);
                    }
                } else if (b > 0)
                    tighten_lo(iv, t[i] / b, !strict);
                else if (b < 0)
                    tighten_hi(iv, t[i] / b, !strict);
                else if (strict ? !(t[i] < 0) : !(t[i] <= 0))
                    iv.empty = true;
            }
            if (iv.hi && (iv.lo > *iv.hi ||
                          (iv.lo == *iv.hi && !(iv.lo_closed && iv.hi_closed))))
                iv.empty = true;
            if (!iv.empty && iv.lo <= s_max && !(iv.lo == s_max && !iv.lo_closed)) {
                cut_set.insert(iv.lo);
                if (iv.hi && *iv.hi < s_max) cut_set.insert(*iv.hi);
                intervals.push_back(std::move(iv));
            }

            std::size_t j = 0;
            while (j < d && x[j] == hi[j]) {
                x[j] = lo[j];
                ++j;
            }
            if (j == d) break;
            ++x[j];
            if (j == 0) {
                for (std::size_t i = 0; i < m; ++i) t[i] += p.halfspaces[i].a[0];
            } else {
                recompute();
            }
        }
    }

    // Elementary slots over the cuts b_0 < ... < b_K: even slot 2i is the
    // singleton {b_i}, odd slot 2i+1 the open interval (b_i, b_{i+1}).
    std::vector<Rational> cuts(cut_set.begin(), cut_set.end());
    const std::size_t K = cuts.size() - 1;
    const auto index_of = [&](const Rational& v) {
        return static_cast<std::size_t>(
            std::lower_bound(cuts.begin(), cuts.end(), v) - cuts.begin());
    };
    std::vector<long> diff(2 * K + 2, 0);
    for (const MembershipInterval& iv : intervals) {
        std::size_t start;
        {
            std::size_t i = index_of(iv.lo);
            start = iv.lo_closed ? 2 * i : 2 * i + 1;
        }
        std::size_t end;
        if (!iv.hi || *iv.hi > s_max)
            end = 2 * K;
        else {
            std::size_t j = index_of(*iv.hi);
            end = iv.hi_closed ? 2 * j : 2 * j - 1;
        }
        if (start > end) continue;
        ++diff[start];
        --diff[end + 1];
    }
    std::vector<long> value(2 * K + 1);
    long running = 0;
    for (std::size_t slot = 0; slot <= 2 * K; ++slot) {
        running += diff[slot];
        value[slot] = running;
    }
    value[0] = (strict || p.empty) ? 0 : 1;  // the dilate 0*P is the single point 0

    StepFunction f;
    f.s_max = s_max;
    std::size_t slot = 0;
    while (slot <= 2 * K) {
        std::size_t last = slot;
        while (last + 1 <= 2 * K && value[last + 1] == value[slot]) ++last;
        Piece piece;
        piece.value = value[slot];
        piece.lo = cuts[slot / 2];
        piece.lo_closed = slot % 2 == 0;
        piece.hi = cuts[(last + 1) / 2];
        piece.hi_closed = last % 2 == 0;
        f.pieces.push_back(std::move(piece));
        slot = last + 1;
    }
    return f;
}

}  // namespace

StepFunction step_function(const HRep& p, const Rational& s_max, bool strict) {
    return build_step_function(p, s_max, strict, nullptr);
}

StepFunction relative_interior_step_function(const HRep& p, const Rational& s_max) {
    if (p.empty) return build_step_function(p, s_max, true, nullptr);
    VRep v = enumerate_vertices(p);
    std::vector<bool> implicit(p.halfspaces.size());
    for (std::size_t i = 0; i < p.halfspaces.size(); ++i) {
        bool tight_everywhere = true;
        for (const RatVector& w : v.vertices)
            tight_everywhere =
                tight_everywhere && dot(w, p.halfspaces[i].a) == p.halfspaces[i].b;
        implicit[i] = tight_everywhere;
    }
    return build_step_function(p, s_max, true, &implicit);
}

long count(const HRep& p, const Rational& s, bool strict) {
    if (s < 0) throw error("count: negative dilation");
    if (s == 0 || p.empty) return (strict || p.empty) ? 0 : 1;
    if (!is_bounded(p)) throw unbounded_error("count: unbounded set");
    const std::size_t d = static_cast<std::size_t>(p.dim);
    VRep v = enumerate_vertices(p);
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
    std::vector<Rational> rhs(p.halfspaces.size());
    for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] = s * p.halfspaces[i].b;
    long result = 0;
    std::vector<Int> x = lo;
    while (true) {
        bool inside = true;
        for (std::size_t i = 0; i < p.halfspaces.size() && inside; ++i) {
            Rational lhs = dot(x, p.halfspaces[i].a);
            inside = strict ? lhs < rhs[i] : lhs <= rhs[i];
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

long value_at(const StepFunction& f, const Rational& s) {
    for (const Piece& piece : f.pieces) {
        bool above = piece.lo < s || (piece.lo == s && piece.lo_closed);
        bool below = s < piece.hi || (s == piece.hi && piece.hi_closed);
        if (above && below) return piece.value;
    }
    throw error("value_at: argument outside [0, s_max]");
}

std::vector<Rational> drop_points(const StepFunction& f) {
    std::vector<Rational> drops;
    for (std::size_t i = 0; i + 1 < f.pieces.size(); ++i) {
        // A decrease is visible at s0 only when s0 still belongs to the
        // higher piece, i.e. the boundary is closed on the left side.
        if (!f.pieces[i].hi_closed) continue;
        if (f.pieces[i + 1].value >= f.pieces[i].value) continue;
        if (f.pieces[i].hi > 0) drops.push_back(f.pieces[i].hi);
    }
    return drops;
}

PropertyResult floor_property(const StepFunction& f) { return window_property(f, true); }

PropertyResult ceil_property(const StepFunction& f) { return window_property(f, false); }

}  // namespace semireflex
