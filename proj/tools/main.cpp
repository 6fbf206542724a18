#include "semireflex/corpus.hpp"
#include "semireflex/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace semireflex;

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty())
        std::cout << text;
    else
        write_text_file(out_path, text);
}

HRep load_polytope(const std::string& path) {
    Json j;
    try {
        j = Json::parse(read_text_file(path));
    } catch (const Json::exception& e) {
        throw parse_error(path + ": " + e.what());
    }
    return polytope_from_json(j);
}

long parse_long(const std::string& text, const std::string& what) {
    std::size_t used = 0;
    long value = 0;
    try {
        value = std::stol(text, &used);
    } catch (const std::exception&) {
        throw parse_error(what + ": expected an integer, got \"" + text + "\"");
    }
    if (used != text.size())
        throw parse_error(what + ": expected an integer, got \"" + text + "\"");
    return value;
}

// Worker cap from the optional SEMIREFLEX_THREADS variable; 0 = pick one
// worker per hardware thread.
int threads_from_env() {
    const char* raw = std::getenv("SEMIREFLEX_THREADS");
    if (!raw) return 0;
    long value = parse_long(raw, "SEMIREFLEX_THREADS");
    if (value < 1) throw parse_error("SEMIREFLEX_THREADS: must be a positive integer");
    return static_cast<int>(value);
}

Rational positive_smax(const std::string& text) {
    Rational s = parse_rational(text);
    if (s <= 0) throw parse_error("--smax must be positive");
    return s;
}

int run_generate(const std::string& family, const std::string& arg, const std::string& out) {
    FamilySpec spec;
    if (family == "cube" || family == "simplex" || family == "cross") {
        spec.family = family == "cube"     ? Family::cube
                      : family == "simplex" ? Family::simplex
                                             : Family::cross;
        long dim = parse_long(arg, "dimension");
        if (dim < 1) throw parse_error("dimension: must be at least 1");
        spec.dim = static_cast<int>(dim);
    } else if (family == "order" || family == "chain") {
        spec.family = family == "order" ? Family::order : Family::chain;
        spec.poset = parse_poset(read_text_file(arg));
    } else {
        spec.family = Family::quasimetric;
        spec.graph = parse_graph(read_text_file(arg));
    }
    emit(out, to_json_text(polytope_to_json(generate(spec))));
    return 0;
}

int run_ehrhart(const std::string& path, const Rational& s_max, bool interior,
                const std::string& format, const std::string& out) {
    HRep p = load_polytope(path);
    StepFunction f = interior ? interior_step_function(p, s_max) : step_function(p, s_max, false);
    if (format == "csv")
        emit(out, step_to_csv(f));
    else if (format == "svg")
        emit(out, step_to_svg(f));
    else
        emit(out, to_json_text(step_to_json(f)));
    return 0;
}

int run_classify(const std::string& path, const Rational& s_max, const std::string& out) {
    HRep p = load_polytope(path);
    Classification c = classify(p, s_max);
    emit(out, to_json_text(classification_to_json(c)));
    if (c.semi_reflexive_numeric &&
        c.semi_reflexive_numeric->holds != c.semi_reflexive_structural) {
        const NumericCheck& n = *c.semi_reflexive_numeric;
        std::cerr << "defect: the structural and numeric verdicts disagree\n"
                  << "  structural: " << (c.semi_reflexive_structural ? "true" : "false") << "\n"
                  << "  floor property on [0, " << to_string(n.s_max)
                  << "]: " << (n.holds ? "true" : "false");
        if (n.witness) std::cerr << ", witness " << to_string(*n.witness);
        std::cerr << "\n";
        return 3;
    }
    return 0;
}

int run_dual(const std::string& path, const std::string& out) {
    HRep p = load_polytope(path);
    if (!contains(p, RatVector(static_cast<std::size_t>(p.dim), Rational(0)), true))
        throw error("dual: the origin is not strictly interior, so the polar dual is unbounded");
    HRep d = make_hrep(p.dim, polar_dual(enumerate_vertices(p)).halfspaces);
    emit(out, to_json_text(polytope_to_json(d, enumerate_vertices(d))));
    return 0;
}

int run_vertices(const std::string& path, const std::string& out) {
    emit(out, to_json_text(vertices_to_json(enumerate_vertices(load_polytope(path)))));
    return 0;
}

CorpusConfig config_from_file(const std::string& path) {
    Json j;
    try {
        j = Json::parse(read_text_file(path));
    } catch (const Json::exception& e) {
        throw parse_error(path + ": " + e.what());
    }
    if (!j.is_object()) throw parse_error(path + ": corpus config must be a JSON object");
    CorpusConfig config;
    for (const auto& [key, value] : j.items()) {
        if (!value.is_number_integer())
            throw parse_error(path + ": \"" + key + "\" must be an integer");
        if (key == "count")
            config.count = value.get<int>();
        else if (key == "dim_min")
            config.dim_min = value.get<int>();
        else if (key == "dim_max")
            config.dim_max = value.get<int>();
        else if (key == "bound")
            config.bound = value.get<int>();
        else if (key == "seed")
            config.seed = value.get<std::uint64_t>();
        else if (key == "structured_weight")
            config.structured_weight = value.get<int>();
        else if (key == "general_weight")
            config.general_weight = value.get<int>();
        else
            throw parse_error(path + ": unknown corpus key \"" + key + "\"");
    }
    return config;
}

std::vector<CorpusItem> items_from_dir(const std::string& dir) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw error("check-theorems: no .json files in " + dir);
    std::vector<CorpusItem> items;
    items.reserve(files.size());
    for (const auto& file : files) items.push_back({file.stem().string(), load_polytope(file.string())});
    return items;
}

int run_check_theorems(const std::string& corpus_path, const std::string& dir,
                       bool seed_given, std::uint64_t seed, const Rational& s_max,
                       const std::string& out) {
    int threads = threads_from_env();
    TheoremReport report;
    if (!dir.empty()) {
        report = check_theorems(items_from_dir(dir), s_max, threads);
    } else {
        CorpusConfig config;
        if (!corpus_path.empty()) config = config_from_file(corpus_path);
        if (seed_given) config.seed = seed;
        report = check_theorems(config, s_max, threads);
    }
    emit(out, report.text);
    return report.failures == 0 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact dilation counting and semi-reflexivity analysis of rational polytopes"};
    app.require_subcommand(1);

    std::string out_path;
    std::uint64_t seed = 0;
    std::string smax_text = "6";
    app.add_option("--out", out_path, "Write output to this file instead of stdout");
    CLI::Option* seed_opt = app.add_option("--seed", seed, "Random corpus seed");
    app.add_option("--smax", smax_text, "Right end of the dilation window (rational)");

    auto* generate_cmd =
        app.add_subcommand("generate", "Write a generator-family polytope as JSON");
    generate_cmd->fallthrough();
    std::string family, family_arg;
    generate_cmd
        ->add_option("family", family, "cube | simplex | cross | order | chain | quasimetric")
        ->required()
        ->check(CLI::IsMember({"cube", "simplex", "cross", "order", "chain", "quasimetric"}));
    generate_cmd->add_option("arg", family_arg, "Dimension, poset file, or graph file")
        ->required();

    auto* ehrhart_cmd =
        app.add_subcommand("ehrhart", "Dilation counting function of a polytope");
    ehrhart_cmd->fallthrough();
    std::string ehrhart_path, format = "json";
    bool interior = false;
    ehrhart_cmd->add_option("polytope", ehrhart_path, "Polytope JSON file")->required();
    ehrhart_cmd->add_flag("--interior", interior, "Count the relative interior instead");
    ehrhart_cmd->add_option("--format", format, "csv | json | svg")
        ->check(CLI::IsMember({"csv", "json", "svg"}));

    auto* classify_cmd =
        app.add_subcommand("classify", "Semi-reflexivity and reflexivity report");
    classify_cmd->fallthrough();
    std::string classify_path;
    classify_cmd->add_option("polytope", classify_path, "Polytope JSON file")->required();

    auto* dual_cmd = app.add_subcommand("dual", "Polar dual of a polytope with 0 interior");
    dual_cmd->fallthrough();
    std::string dual_path;
    dual_cmd->add_option("polytope", dual_path, "Polytope JSON file")->required();

    auto* vertices_cmd = app.add_subcommand("vertices", "Exact vertex enumeration");
    vertices_cmd->fallthrough();
    std::string vertices_path;
    vertices_cmd->add_option("polytope", vertices_path, "Polytope JSON file")->required();

    auto* check_cmd =
        app.add_subcommand("check-theorems", "Invariant suite over a polytope corpus");
    check_cmd->fallthrough();
    std::string corpus_path, dir_path;
    check_cmd->add_option("--corpus", corpus_path, "Corpus config JSON file");
    check_cmd->add_option("--dir", dir_path, "Directory of polytope JSON files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (generate_cmd->parsed()) return run_generate(family, family_arg, out_path);
        Rational s_max = positive_smax(smax_text);
        if (ehrhart_cmd->parsed())
            return run_ehrhart(ehrhart_path, s_max, interior, format, out_path);
        if (classify_cmd->parsed()) return run_classify(classify_path, s_max, out_path);
        if (dual_cmd->parsed()) return run_dual(dual_path, out_path);
        if (vertices_cmd->parsed()) return run_vertices(vertices_path, out_path);
        if (check_cmd->parsed()) {
            if (!corpus_path.empty() && !dir_path.empty())
                throw parse_error("check-theorems: --corpus and --dir are mutually exclusive");
            return run_check_theorems(corpus_path, dir_path, seed_opt->count() > 0, seed,
                                      s_max, out_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
