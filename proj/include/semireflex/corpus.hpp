#pragma once

#include "semireflex/classify.hpp"
#include "semireflex/families.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace semireflex {

// Shape of the seeded random corpus. Normal entries are drawn from
// [-bound, bound], offsets from the rationals in [-2, 2] with denominator
// at most 3; the mixture weights split items between the
// semi-reflexive-by-construction recipe (b in {0,1}) and the general one.
struct CorpusConfig {
    int count = 200;
    int dim_min = 2;
    int dim_max = 3;
    int bound = 4;
    std::uint64_t seed = 42;
    int structured_weight = 1;
    int general_weight = 3;
};

struct CorpusItem {
    std::string id;
    HRep polytope;
};

// Seeded generator with explicit draw helpers. std::mt19937_64 is fully
// specified; the distribution adapters of the standard library are not, so
// the mapping to ranges is done here.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t raw() { return engine_(); }

    // Uniform over 0..n-1 by rejection.
    std::uint64_t below(std::uint64_t n);

    // Uniform over lo..hi inclusive.
    long range(long lo, long hi);

private:
    std::mt19937_64 engine_;
};

// One random bounded nonempty polytope. The structured recipe keeps b in
// {0,1} with integer normals (semi-reflexive by construction); the general
// recipe draws rational offsets and lands on either side.
HRep random_polytope(Rng& rng, int dim, int bound, bool structured);

// Random polytope with integer vertices and the origin strictly interior:
// the convex hull of scattered integer points containing +-c_i e_i, with
// its facet description recovered through the double polar.
HRep random_integer_vertex_polytope(Rng& rng, int dim, int bound);

std::vector<CorpusItem> build_random_corpus(const CorpusConfig& config);

// Every generator-family member the invariant suite checks: cubes,
// simplices and cross-polytopes through dimension 4, order and chain
// polytopes of every poset on up to 4 elements, and the K4 quasi-metric
// polytope.
std::vector<CorpusItem> family_corpus();

// All strict partial orders on {1..n} as explicit relations; there are
// 1, 3, 19 and 219 of them for n = 1..4 (larger n is rejected, the
// enumeration scans all subsets of ordered pairs).
std::vector<Poset> all_posets(int n);

// Window ladder for the one-sided retries below: s_max first, then repeated
// doublings for as long as the candidate-point estimate from the vertex
// bounding box stays within a fixed budget, never past 256 * s_max. Thin
// polytopes, whose lattice activity starts late, are exactly the ones whose
// boxes stay small, so the ladder reaches far for them and stays short for
// bulky ones.
std::vector<Rational> retry_windows(const HRep& p, const Rational& s_max);

struct TheoremReport {
    std::string text;
    int failures = 0;
};

// Invariant suite: per item, structural vs floor-property agreement,
// structural vs ceiling of the interior counter, agreement of the
// reflexivity readings when the origin is interior, and for items with the
// origin outside a forced drop plus floor failure. Verdicts that a finite
// window can only miss in one direction (a drop not reached yet, a floor or
// interior ceiling property still vacuously holding) are retried on the
// retry_windows ladder, and the report says so. The config form appends the
// family corpus and checks its
// structural-true rate. Items are evaluated independently (threads = 0 picks
// a worker per hardware thread) and the report is assembled in sorted id
// order, so the text is a pure function of the inputs.
TheoremReport check_theorems(const CorpusConfig& config, const Rational& s_max,
                             int threads = 0);
TheoremReport check_theorems(const std::vector<CorpusItem>& items, const Rational& s_max,
                             int threads = 0);

}  // namespace semireflex
