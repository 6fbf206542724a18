#include "semireflex/families.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace semireflex {

namespace {

// Reachability matrix of the cover digraph, indexed from 0.
std::vector<std::vector<bool>> transitive_closure(const Poset& p) {
    const std::size_t n = static_cast<std::size_t>(p.n);
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (const auto& [i, j] : p.covers)
        reach[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (reach[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (reach[k][j]) reach[i][j] = true;
    return reach;
}

HalfSpace unit_row(int d, int i, int sign, Rational b) {
    RatVector a(static_cast<std::size_t>(d), Rational(0));
    a[static_cast<std::size_t>(i)] = sign;
    return {std::move(a), std::move(b)};
}

HRep generate_cube(int d) {
    std::vector<HalfSpace> rows;
    for (int i = 0; i < d; ++i) rows.push_back(unit_row(d, i, -1, 0));
    for (int i = 0; i < d; ++i) rows.push_back(unit_row(d, i, 1, 1));
    return make_hrep(d, std::move(rows));
}

HRep generate_simplex(int d) {
    std::vector<HalfSpace> rows;
    for (int i = 0; i < d; ++i) rows.push_back(unit_row(d, i, -1, 0));
    rows.push_back({RatVector(static_cast<std::size_t>(d), Rational(1)), Rational(1)});
    return make_hrep(d, std::move(rows));
}

HRep generate_cross(int d) {
    std::vector<HalfSpace> rows;
    for (long mask = 0; mask < (1L << d); ++mask) {
        RatVector a(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) a[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? 1 : -1;
        rows.push_back({std::move(a), Rational(1)});
    }
    return make_hrep(d, std::move(rows));
}

HRep generate_order(const Poset& p) {
    validate_poset(p);
    std::vector<HalfSpace> rows;
    for (int i = 0; i < p.n; ++i) {
        rows.push_back(unit_row(p.n, i, -1, 0));
        rows.push_back(unit_row(p.n, i, 1, 1));
    }
    std::set<std::pair<int, int>> covers(p.covers.begin(), p.covers.end());
    for (const auto& [i, j] : covers) {
        RatVector a(static_cast<std::size_t>(p.n), Rational(0));
        a[static_cast<std::size_t>(i - 1)] = 1;
        a[static_cast<std::size_t>(j - 1)] = -1;
        rows.push_back({std::move(a), Rational(0)});
    }
    return make_hrep(p.n, std::move(rows));
}

HRep generate_chain(const Poset& p) {
    std::vector<HalfSpace> rows;
    for (int i = 0; i < p.n; ++i) rows.push_back(unit_row(p.n, i, -1, 0));
    for (const std::vector<int>& chain : maximal_chains(p)) {
        RatVector a(static_cast<std::size_t>(p.n), Rational(0));
        for (int e : chain) a[static_cast<std::size_t>(e - 1)] = 1;
        rows.push_back({std::move(a), Rational(1)});
    }
    return make_hrep(p.n, std::move(rows));
}

HRep generate_quasimetric(const CubicGraph& g) {
    validate_graph(g);
    const int d = static_cast<int>(g.edges.size());
    std::vector<std::vector<int>> incident(static_cast<std::size_t>(g.vertices) + 1);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        incident[static_cast<std::size_t>(g.edges[e].first)].push_back(static_cast<int>(e));
        incident[static_cast<std::size_t>(g.edges[e].second)].push_back(static_cast<int>(e));
    }
    std::vector<HalfSpace> rows;
    for (int v = 1; v <= g.vertices; ++v) {
        const std::vector<int>& inc = incident[static_cast<std::size_t>(v)];
        if (inc.size() != 3) continue;
        for (int pick = 0; pick < 3; ++pick) {
            RatVector a(static_cast<std::size_t>(d), Rational(0));
            for (int t = 0; t < 3; ++t)
                a[static_cast<std::size_t>(inc[static_cast<std::size_t>(t)])] =
                    t == pick ? 1 : -1;
            rows.push_back({std::move(a), Rational(0)});
        }
        RatVector a(static_cast<std::size_t>(d), Rational(0));
        for (int e : inc) a[static_cast<std::size_t>(e)] = 1;
        rows.push_back({std::move(a), Rational(1)});
    }
    if (rows.empty())
        throw unbounded_error("quasimetric polytope: no degree-3 vertex, nothing bounds it");
    return make_hrep(d, std::move(rows));
}

}  // namespace

void validate_poset(const Poset& p) {
    if (p.n < 1) throw error("poset: element count must be positive");
    for (const auto& [i, j] : p.covers) {
        if (i < 1 || i > p.n || j < 1 || j > p.n)
            throw error("poset: relation element out of range 1..n");
        if (i == j) throw error("poset: relation i<i is not irreflexive");
    }
    auto reach = transitive_closure(p);
    for (int i = 0; i < p.n; ++i)
        if (reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)])
            throw error("poset: relation has a cycle through element " + std::to_string(i + 1));
}

void validate_graph(const CubicGraph& g) {
    if (g.vertices < 1) throw error("graph: vertex count must be positive");
    std::vector<int> degree(static_cast<std::size_t>(g.vertices) + 1, 0);
    for (const auto& [u, v] : g.edges) {
        if (u < 1 || u > g.vertices || v < 1 || v > g.vertices)
            throw error("graph: edge endpoint out of range 1..vertices");
        if (u == v) throw error("graph: loops are not allowed");
        ++degree[static_cast<std::size_t>(u)];
        ++degree[static_cast<std::size_t>(v)];
    }
    for (int v = 1; v <= g.vertices; ++v)
        if (degree[static_cast<std::size_t>(v)] != 1 && degree[static_cast<std::size_t>(v)] != 3)
            throw error("graph: vertex " + std::to_string(v) + " has degree " +
                        std::to_string(degree[static_cast<std::size_t>(v)]) +
                        ", but every vertex must have degree 1 or 3");
}

std::vector<std::vector<int>> maximal_chains(const Poset& p) {
    validate_poset(p);
    const std::size_t n = static_cast<std::size_t>(p.n);
    auto reach = transitive_closure(p);
    // Covers of the closure: i < j with nothing strictly between. Walking
    // those from the minimal elements yields exactly the maximal chains.
    std::vector<std::vector<int>> next(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!reach[i][j]) continue;
            bool direct = true;
            for (std::size_t k = 0; k < n && direct; ++k)
                direct = !(reach[i][k] && reach[k][j]);
            if (direct) next[i].push_back(static_cast<int>(j) + 1);
        }
    std::vector<std::vector<int>> chains;
    std::vector<int> path;
    auto descend = [&](auto&& self, int e) -> void {
        path.push_back(e);
        const std::vector<int>& succ = next[static_cast<std::size_t>(e - 1)];
        if (succ.empty())
            chains.push_back(path);
        else
            for (int s : succ) self(self, s);
        path.pop_back();
    };
    for (std::size_t i = 0; i < n; ++i) {
        bool minimal = true;
        for (std::size_t k = 0; k < n && minimal; ++k) minimal = !reach[k][i];
        if (minimal) descend(descend, static_cast<int>(i) + 1);
    }
    return chains;
}

HRep generate(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::cube:
        case Family::simplex:
        case Family::cross:
            if (spec.dim < 1) throw error("generate: dimension must be positive");
            if (spec.family == Family::cube) return generate_cube(spec.dim);
            if (spec.family == Family::simplex) return generate_simplex(spec.dim);
            return generate_cross(spec.dim);
        case Family::order:
            return generate_order(spec.poset);
        case Family::chain:
            return generate_chain(spec.poset);
        case Family::quasimetric:
            return generate_quasimetric(spec.graph);
    }
    throw error("generate: unknown family");
}

namespace {

// Strips a '#' comment and surrounding whitespace; empty result means the
// line carries nothing.
std::string significant(const std::string& line) {
    std::string s = line.substr(0, line.find('#'));
    const char* ws = " \t\r";
    std::size_t b = s.find_first_not_of(ws);
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

[[noreturn]] void fail_line(std::size_t line_no, const std::string& what) {
    throw parse_error("line " + std::to_string(line_no) + ": " + what);
}

int parse_int(const std::string& token, std::size_t line_no) {
    try {
        std::size_t used = 0;
        int value = std::stoi(token, &used);
        if (used != token.size()) fail_line(line_no, "trailing characters after number");
        return value;
    } catch (const parse_error&) {
        throw;
    } catch (const std::exception&) {
        fail_line(line_no, "expected a number, got '" + token + "'");
    }
}

// Shared reader: a "<keyword>=<count>" header line, then "<i><sep><j>" pair
// lines. Returns the count and the pairs with their line numbers.
struct PairFile {
    int count = 0;
    std::vector<std::pair<int, int>> pairs;
};

PairFile parse_pair_file(const std::string& text, const std::string& keyword, char sep) {
    PairFile out;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::string s = significant(line);
        if (s.empty()) continue;
        if (!have_header) {
            std::size_t eq = s.find('=');
            if (eq == std::string::npos || significant(s.substr(0, eq)) != keyword)
                fail_line(line_no, "expected '" + keyword + "=<count>'");
            out.count = parse_int(significant(s.substr(eq + 1)), line_no);
            have_header = true;
            continue;
        }
        std::size_t at = s.find(sep);
        if (at == std::string::npos)
            fail_line(line_no, std::string("expected '<i>") + sep + "<j>'");
        int i = parse_int(significant(s.substr(0, at)), line_no);
        int j = parse_int(significant(s.substr(at + 1)), line_no);
        out.pairs.emplace_back(i, j);
    }
    if (!have_header) throw parse_error("missing '" + keyword + "=<count>' line");
    return out;
}

}  // namespace

Poset parse_poset(const std::string& text) {
    PairFile f = parse_pair_file(text, "n", '<');
    Poset p{f.count, std::move(f.pairs)};
    validate_poset(p);
    return p;
}

CubicGraph parse_graph(const std::string& text) {
    PairFile f = parse_pair_file(text, "vertices", '-');
    CubicGraph g{f.count, std::move(f.pairs)};
    validate_graph(g);
    return g;
}

}  // namespace semireflex
