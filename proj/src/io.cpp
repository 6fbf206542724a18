#include "semireflex/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace semireflex {

namespace {

Json rational_array(const RatVector& v) {
    Json a = Json::array();
    for (const Rational& e : v) a.push_back(to_string(e));
    return a;
}

Rational rational_field(const Json& j, const std::string& where) {
    if (!j.is_string())
        throw parse_error(where + ": expected a rational as a string");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const parse_error& e) {
        throw parse_error(where + ": " + e.what());
    }
}

// Pixel position of a rational data coordinate, rounded once at the end.
Int pixel(const Rational& value, const Rational& lo, const Rational& hi, Int out_lo,
          Int out_hi) {
    Rational span = hi - lo;
    if (span == 0) return out_lo;
    return round_int(Rational(out_lo) + (value - lo) / span * Rational(out_hi - out_lo));
}

std::string num(const Int& v) { return v.str(); }

}  // namespace

std::string to_json_text(const Json& j) { return j.dump(2) + "\n"; }

Json polytope_to_json(const HRep& p) {
    Json j;
    j["dim"] = p.dim;
    Json rows = Json::array();
    for (const HalfSpace& h : p.halfspaces)
        rows.push_back({{"a", rational_array(h.a)}, {"b", to_string(h.b)}});
    j["inequalities"] = std::move(rows);
    return j;
}

Json polytope_to_json(const HRep& p, const VRep& vertices) {
    Json j = polytope_to_json(p);
    Json pts = Json::array();
    for (const RatVector& v : vertices.vertices) pts.push_back(rational_array(v));
    j["vertices"] = std::move(pts);
    return j;
}

HRep polytope_from_json(const Json& j) {
    if (!j.is_object()) throw parse_error("polytope: expected a JSON object");
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw parse_error("polytope: missing integer field 'dim'");
    const int dim = j["dim"].get<int>();
    if (dim < 1) throw parse_error("polytope: 'dim' must be positive");
    if (!j.contains("inequalities") || !j["inequalities"].is_array())
        throw parse_error("polytope: missing array field 'inequalities'");
    std::vector<HalfSpace> rows;
    std::size_t index = 0;
    for (const Json& row : j["inequalities"]) {
        const std::string where = "inequalities[" + std::to_string(index) + "]";
        if (!row.is_object() || !row.contains("a") || !row.contains("b") ||
            !row["a"].is_array())
            throw parse_error(where + ": expected {\"a\": [...], \"b\": ...}");
        RatVector a;
        for (const Json& e : row["a"]) a.push_back(rational_field(e, where + ".a"));
        rows.push_back({std::move(a), rational_field(row["b"], where + ".b")});
        ++index;
    }
    return make_hrep(dim, std::move(rows));
}

Json vertices_to_json(const VRep& v) {
    Json j;
    j["dim"] = v.dim;
    Json pts = Json::array();
    for (const RatVector& w : v.vertices) pts.push_back(rational_array(w));
    j["vertices"] = std::move(pts);
    return j;
}

std::string step_to_csv(const StepFunction& f) {
    std::ostringstream out;
    out << "lo,lo_closed,hi,hi_closed,value\n";
    for (const Piece& p : f.pieces)
        out << to_string(p.lo) << ',' << (p.lo_closed ? "true" : "false") << ','
            << to_string(p.hi) << ',' << (p.hi_closed ? "true" : "false") << ',' << p.value
            << '\n';
    return out.str();
}

Json step_to_json(const StepFunction& f) {
    Json j;
    j["s_max"] = to_string(f.s_max);
    Json pieces = Json::array();
    for (const Piece& p : f.pieces)
        pieces.push_back({{"lo", to_string(p.lo)},
                          {"lo_closed", p.lo_closed},
                          {"hi", to_string(p.hi)},
                          {"hi_closed", p.hi_closed},
                          {"value", p.value}});
    j["pieces"] = std::move(pieces);
    Json drops = Json::array();
    for (const Rational& s : drop_points(f)) drops.push_back(to_string(s));
    j["drop_points"] = std::move(drops);
    return j;
}

std::string step_to_svg(const StepFunction& f) {
    // Fixed canvas; the plot area spans x 60..780, y 420 down to 40.
    const Int x0 = 60, x1 = 780, y0 = 420, y1 = 40;
    long vmax = 1;
    for (const Piece& p : f.pieces) vmax = std::max(vmax, p.value);
    const Rational vlo = 0, vhi = vmax;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"480\" "
           "viewBox=\"0 0 800 480\">\n";
    out << "  <rect width=\"800\" height=\"480\" fill=\"white\"/>\n";
    out << "  <line x1=\"" << num(x0) << "\" y1=\"" << num(y0) << "\" x2=\"" << num(x1)
        << "\" y2=\"" << num(y0) << "\" stroke=\"black\"/>\n";
    out << "  <line x1=\"" << num(x0) << "\" y1=\"" << num(y0) << "\" x2=\"" << num(x0)
        << "\" y2=\"" << num(y1) << "\" stroke=\"black\"/>\n";

    // Value gridline labels.
    std::set<long> values;
    for (const Piece& p : f.pieces) values.insert(p.value);
    for (long v : values) {
        Int y = pixel(Rational(v), vlo, vhi, y0, y1);
        out << "  <text x=\"" << num(x0 - 8) << "\" y=\"" << num(y + 4)
            << "\" font-size=\"12\" text-anchor=\"end\">" << v << "</text>\n";
    }

    // Breakpoint ticks and labels.
    std::set<Rational> cuts;
    for (const Piece& p : f.pieces) cuts.insert(p.lo);
    cuts.insert(f.s_max);
    for (const Rational& c : cuts) {
        Int x = pixel(c, 0, f.s_max, x0, x1);
        out << "  <line x1=\"" << num(x) << "\" y1=\"" << num(y0) << "\" x2=\"" << num(x)
            << "\" y2=\"" << num(y0 + 6) << "\" stroke=\"black\"/>\n";
        out << "  <text x=\"" << num(x) << "\" y=\"" << num(y0 + 20)
            << "\" font-size=\"12\" text-anchor=\"middle\">" << to_string(c) << "</text>\n";
    }

    // One horizontal segment per piece with endpoint markers: filled when
    // the endpoint is included, hollow when not. Zero-length pieces are a
    // single filled dot.
    for (const Piece& p : f.pieces) {
        Int xa = pixel(p.lo, 0, f.s_max, x0, x1);
        Int xb = pixel(p.hi, 0, f.s_max, x0, x1);
        Int y = pixel(Rational(p.value), vlo, vhi, y0, y1);
        if (p.lo != p.hi)
            out << "  <line x1=\"" << num(xa) << "\" y1=\"" << num(y) << "\" x2=\"" << num(xb)
                << "\" y2=\"" << num(y) << "\" stroke=\"steelblue\" stroke-width=\"2\"/>\n";
        out << "  <circle cx=\"" << num(xa) << "\" cy=\"" << num(y) << "\" r=\"3\" fill=\""
            << (p.lo_closed ? "steelblue" : "white") << "\" stroke=\"steelblue\"/>\n";
        if (p.lo != p.hi)
            out << "  <circle cx=\"" << num(xb) << "\" cy=\"" << num(y) << "\" r=\"3\" fill=\""
                << (p.hi_closed ? "steelblue" : "white") << "\" stroke=\"steelblue\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

Json classification_to_json(const Classification& c) {
    Json j;
    j["origin_in_p"] = c.origin_in_p;
    j["full_dim"] = c.full_dim;
    j["semi_reflexive_structural"] = c.semi_reflexive_structural;
    j["canonical_hrep"] = c.canonical_hrep ? polytope_to_json(*c.canonical_hrep) : Json();
    if (c.semi_reflexive_numeric) {
        const NumericCheck& n = *c.semi_reflexive_numeric;
        Json nj;
        nj["holds"] = n.holds;
        nj["s_max"] = to_string(n.s_max);
        nj["witness"] = n.witness ? Json(to_string(*n.witness)) : Json();
        j["semi_reflexive_numeric"] = std::move(nj);
    } else {
        j["semi_reflexive_numeric"] = Json();
    }
    j["drop_points"] = rational_array(c.drop_points);
    j["reflexive"] = c.reflexive;
    j["notes"] = c.notes;
    return j;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error("cannot write file: " + path);
    out << content;
    if (!out) throw error("write failed: " + path);
}

}  // namespace semireflex
