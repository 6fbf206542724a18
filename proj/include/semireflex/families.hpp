#pragma once

#include "semireflex/polytope.hpp"

#include <string>
#include <utility>
#include <vector>

namespace semireflex {

// Strict partial order on the elements 1..n, given by cover relations. The
// cover list may contain transitively implied pairs; only the closure
// matters, and it must be cycle-free.
struct Poset {
    int n = 0;
    std::vector<std::pair<int, int>> covers;
};

// Graph with edges identified with the coordinates 1..d, in input order.
// Every vertex must have degree 1 or 3.
struct CubicGraph {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;
};

enum class Family { cube, simplex, cross, order, chain, quasimetric };

// Parameters for one generated polytope: dim drives cube, simplex and
// cross; poset drives order and chain; graph drives quasimetric.
struct FamilySpec {
    Family family = Family::cube;
    int dim = 0;
    Poset poset;
    CubicGraph graph;
};

// Throw on out-of-range elements, self-relations, or a cycle in the closure.
void validate_poset(const Poset& p);

// Throw on out-of-range endpoints, loops, or a vertex of degree other than
// 1 or 3.
void validate_graph(const CubicGraph& g);

// All maximal chains, each listed bottom-up, in lexicographic order.
std::vector<std::vector<int>> maximal_chains(const Poset& p);

HRep generate(const FamilySpec& spec);

// Poset file: a line "n=<k>", then lines "i<j". Graph file: a line
// "vertices=<k>", then lines "u-v"; edges are numbered 1.. in file order.
// '#' starts a comment; blank lines are skipped. Parse errors carry the
// 1-based line number.
Poset parse_poset(const std::string& text);
CubicGraph parse_graph(const std::string& text);

}  // namespace semireflex
