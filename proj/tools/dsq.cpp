#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "dsq/graph.hpp"
#include "dsq/graph6.hpp"
#include "dsq/invariants.hpp"
#include "dsq/jacobi.hpp"
#include "dsq/matrix.hpp"
#include "dsq/motifs.hpp"
#include "dsq/poly.hpp"
#include "dsq/search.hpp"
#include "dsq/tchain.hpp"
#include "dsq/trees.hpp"
#include "dsq/verify.hpp"
#include "dsq/walks.hpp"

namespace {

using dsq::Graph;

Graph resolve_graph(const std::string& g6, const std::string& family, int n) {
    if (!g6.empty()) return dsq::graph6_decode(g6);
    if (family.empty())
        throw CLI::ValidationError("input", "provide --g6 or --family together with --n");
    auto fam = dsq::family_from_string(family);
    if (!fam) throw CLI::ValidationError("--family", "unknown family: " + family);
    return dsq::build(*fam, n);
}

dsq::MatrixKind matrix_kind(const std::string& name) {
    if (name == "laplacian") return dsq::MatrixKind::laplacian;
    if (name == "adjacency") return dsq::MatrixKind::adjacency;
    throw CLI::ValidationError("--matrix", "expected laplacian or adjacency");
}

// g6:<record> or <family>:<size>; a chain search reads the family form as
// the chain whose witness tree is the built graph
std::optional<Graph> resolve_target(const std::string& text, dsq::SearchClass klass) {
    if (text.empty()) return std::nullopt;
    if (text.rfind("g6:", 0) == 0) return dsq::graph6_decode(text.substr(3));
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError("--target", "expected <family>:<size> or g6:<record>");
    auto fam = dsq::family_from_string(text.substr(0, colon));
    if (!fam) throw CLI::ValidationError("--target", "unknown family: " + text.substr(0, colon));
    int size = 0;
    try {
        size = std::stoi(text.substr(colon + 1));
    } catch (const std::exception&) {
        throw CLI::ValidationError("--target", "bad size in " + text);
    }
    Graph built = dsq::build(*fam, size);
    if (klass == dsq::SearchClass::triangle_chains) return dsq::tree_to_chain(built);
    return built;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
    if (!out) throw std::runtime_error("short write to " + path);
}

std::string coeff_list(const dsq::IntPolynomial& p) {
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        if (!out.empty()) out += ' ';
        out += p.c[i].get_str();
    }
    return out;
}

int cmd_spectrum(const std::string& g6, const std::string& family, int n,
                 const std::string& matrix, const std::string& json_path) {
    Graph g = resolve_graph(g6, family, n);
    auto kind = matrix_kind(matrix);
    auto poly = dsq::char_poly(dsq::matrix_of(g, kind));
    auto numeric = dsq::eigenvalues_float(dsq::matrix_of(g, kind));

    std::cout << "graph: " << dsq::graph6_encode(g) << "  n=" << g.order()
              << " m=" << g.size() << "\n";
    std::cout << "matrix: " << matrix << "\n";
    std::cout << "char poly: " << poly.to_string() << "\n";
    std::cout << "coefficients (leading first): " << coeff_list(poly) << "\n";
    std::cout << "eigenvalues (numeric): " << std::setprecision(6);
    for (double v : numeric.values) std::cout << v << ' ';
    std::cout << "\n";

    if (!json_path.empty()) {
        nlohmann::json j;
        j["command"] = "spectrum";
        j["g6"] = dsq::graph6_encode(g);
        j["matrix"] = matrix;
        j["poly"] = poly.to_string();
        nlohmann::json coeffs = nlohmann::json::array();
        for (int i = poly.degree(); i >= 0; --i) coeffs.push_back(poly.c[i].get_str());
        j["coefficients"] = std::move(coeffs);
        j["eigenvalues"] = numeric.values;
        j["version"] = dsq::kVersion;
        write_text_file(json_path, j.dump(2) + "\n");
    }
    return 0;
}

int cmd_invariants(const std::string& g6, const std::string& family, int n,
                   const std::string& json_path) {
    Graph g = resolve_graph(g6, family, n);
    auto poly = dsq::char_poly(dsq::matrix_of(g, dsq::MatrixKind::laplacian));
    auto inv = dsq::derive_basic_invariants(poly);
    mpz_class triangles(static_cast<long>(dsq::triangle_count(g)));
    auto moments = dsq::degree_moment_sums(poly, triangles);

    std::cout << "graph: " << dsq::graph6_encode(g) << "\n";
    std::cout << "from the Laplacian characteristic polynomial:\n";
    std::cout << "  vertices: " << inv.n << "\n";
    std::cout << "  edges: " << inv.m.get_str() << "\n";
    std::cout << "  components: " << inv.components << "\n";
    std::cout << "  spanning trees: " << inv.spanning_trees.get_str() << "\n";
    std::cout << "  degree sums (d, d^2, d^3): " << moments.s1.get_str() << ", "
              << moments.s2.get_str() << ", " << moments.s3.get_str()
              << "  (triangle count " << triangles.get_str() << ")\n";

    nlohmann::json j;
    j["command"] = "invariants";
    j["g6"] = dsq::graph6_encode(g);
    j["n"] = inv.n;
    j["m"] = inv.m.get_str();
    j["components"] = inv.components;
    j["spanning_trees"] = inv.spanning_trees.get_str();
    j["s1"] = moments.s1.get_str();
    j["s2"] = moments.s2.get_str();
    j["s3"] = moments.s3.get_str();
    j["triangles"] = triangles.get_str();

    if (g.size() > 0) {
        auto bounds = dsq::check_spectral_bounds(g);
        std::cout << "  largest eigenvalue: " << std::setprecision(6) << bounds.mu1
                  << "  (bounds " << bounds.lower << " < mu1 <= " << bounds.upper
                  << ", " << (bounds.ok ? "ok" : "VIOLATED") << ")\n";
        j["mu1"] = bounds.mu1;
        j["bound_lower"] = bounds.lower;
        j["bound_upper"] = bounds.upper;
        j["bounds_ok"] = bounds.ok;
    }

    if (g.max_degree() <= 5) {
        bool isolated = false;
        for (int v = 0; v < g.order(); ++v)
            if (g.degree(v) == 0) isolated = true;
        auto sols = dsq::solve_degree_distribution(inv.n, inv.m, moments.s2, moments.s3, 5,
                                                   isolated);
        std::cout << "  degree distributions matching the moments:\n";
        nlohmann::json jsols = nlohmann::json::array();
        for (const auto& s : sols) {
            std::cout << "   ";
            for (int d = 0; d <= 5; ++d)
                if (s.count[d] > 0) std::cout << " n" << d << "=" << s.count[d];
            std::cout << "\n";
            jsols.push_back(s.count);
        }
        j["degree_distributions"] = std::move(jsols);
    } else {
        std::cout << "  degree solver skipped (degree above 5 present)\n";
    }

    j["version"] = dsq::kVersion;
    if (!json_path.empty()) write_text_file(json_path, j.dump(2) + "\n");
    return 0;
}

int cmd_census(int t, const std::string& g6, const std::string& json_path) {
    std::vector<Graph> chains;
    if (!g6.empty()) {
        chains.push_back(dsq::graph6_decode(g6));
    } else if (t >= 1) {
        for (const Graph& tree : dsq::all_trees(t, 3))
            chains.push_back(dsq::tree_to_chain(tree));
    } else {
        throw CLI::ValidationError("census", "provide --t or --g6");
    }

    nlohmann::json rows = nlohmann::json::array();
    std::cout << "chain            profile(t,t1,t2,t3)   counts per motif\n";
    for (const Graph& chain : chains) {
        auto census = dsq::census_of(chain);
        std::string code = dsq::graph6_encode(chain);
        std::cout << std::left << std::setw(16) << code << " (" << census.profile.t << ", "
                  << census.profile.t1 << ", " << census.profile.t2 << ", " << census.profile.t3
                  << ")";
        std::cout << std::string(10, ' ');
        for (std::size_t i = 0; i < 5; ++i)
            std::cout << dsq::motif_name(dsq::kAllMotifs[i]) << "=" << census.counted[i] << ' ';
        std::cout << "\n";
        nlohmann::json row;
        row["g6"] = code;
        row["profile"] = {census.profile.t, census.profile.t1, census.profile.t2,
                          census.profile.t3};
        row["counts"] = census.counted;
        rows.push_back(std::move(row));
    }
    std::cout << chains.size() << " chain(s), every count matching its closed form\n";

    if (!json_path.empty()) {
        nlohmann::json j;
        j["command"] = "census";
        j["chains"] = std::move(rows);
        j["version"] = dsq::kVersion;
        write_text_file(json_path, j.dump(2) + "\n");
    }
    return 0;
}

int cmd_verify(const std::string& suite, std::optional<int> cap, const std::string& json_path) {
    auto results = dsq::run_verification_suite(suite, cap);
    int failed = 0;
    for (const auto& r : results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.check << "  expected=" << r.expected
                  << "  actual=" << r.actual;
        if (!r.witness_g6.empty()) std::cout << "  witness=" << r.witness_g6;
        std::cout << "\n";
        if (!r.pass) ++failed;
    }
    std::cout << "suite " << suite << ": " << (results.size() - failed) << "/" << results.size()
              << " checks passed\n";
    if (!json_path.empty())
        write_text_file(json_path, dsq::suite_results_to_json(suite, results) + "\n");
    return failed == 0 ? 0 : 1;
}

int cmd_search(const std::string& klass, std::optional<int> n, std::optional<int> t,
               const std::string& matrix, const std::string& target, int workers,
               const std::string& json_path, const std::string& csv_path, bool skip_bad,
               bool all_witnesses) {
    dsq::SearchSpec spec;
    if (klass == "trees") {
        spec.klass = dsq::SearchClass::trees;
        if (!n) throw CLI::ValidationError("--n", "tree searches need --n");
        if (t) throw CLI::ValidationError("--t", "--t only applies to --class tchains");
        spec.n = *n;
    } else if (klass == "tchains") {
        spec.klass = dsq::SearchClass::triangle_chains;
        if (!t) throw CLI::ValidationError("--t", "chain searches need --t");
        if (n) throw CLI::ValidationError("--n", "chain searches take --t, not --n");
        spec.n = *t;
    } else if (klass.rfind("g6:", 0) == 0) {
        spec.klass = dsq::SearchClass::graph6_file;
        spec.path = klass.substr(3);
        if (spec.path.empty()) throw CLI::ValidationError("--class", "empty g6 path");
    } else {
        throw CLI::ValidationError("--class", "expected trees, tchains or g6:<path>");
    }
    spec.matrix = matrix_kind(matrix);
    spec.target = resolve_target(target, spec.klass);
    spec.workers = workers;
    spec.skip_bad = skip_bad;
    spec.keep_all_witnesses = all_witnesses;

    auto report = dsq::run_cospectral_search(spec);

    std::cout << "class: " << report.klass << (report.n > 0 ? " " + std::to_string(report.n) : "")
              << "  matrix: " << report.matrix << "  workers: " << report.workers << "\n";
    std::cout << "scanned: " << report.scanned << "  classes: " << report.classes.size() << "\n";
    long long nontrivial = 0;
    for (const auto& c : report.classes)
        if (c.size > 1) ++nontrivial;
    std::cout << "classes with more than one member: " << nontrivial << "\n";
    if (report.has_target) {
        std::cout << "target " << report.target_g6 << ": class size " << report.target_class_size;
        if (report.target_mates.empty()) {
            std::cout << ", no cospectral mates\n";
        } else {
            std::cout << ", mates:";
            for (const auto& m : report.target_mates) std::cout << ' ' << m;
            std::cout << "\n";
        }
    }
    for (const auto& e : report.errors) std::cout << "skipped " << e << "\n";
    std::cout << "elapsed: " << report.elapsed_ms << " ms\n";

    if (!json_path.empty()) write_text_file(json_path, dsq::report_to_json(report) + "\n");
    if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        if (!out) throw std::runtime_error("cannot open " + csv_path + " for writing");
        dsq::report_to_csv(report, out);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact spectral toolkit: graph families, characteristic polynomials, "
                 "walk censuses and cospectral-mate searches"};
    app.require_subcommand(1);
    int exit_code = 0;

    auto* build_cmd = app.add_subcommand("build", "emit a family graph as graph6");
    std::string b_family;
    int b_n = 0;
    bool b_chain = false;
    build_cmd->add_option("--family", b_family, "path, cycle, star, triangle, centipede, empty, complete")
        ->required();
    build_cmd->add_option("--n", b_n, "graph size parameter")->required();
    build_cmd->add_flag("--chain", b_chain, "emit the triangle chain whose witness tree is the built graph");
    build_cmd->callback([&] {
        Graph g = resolve_graph("", b_family, b_n);
        if (b_chain) g = dsq::tree_to_chain(g);
        std::cout << dsq::graph6_encode(g) << "\n";
    });

    auto* spectrum_cmd = app.add_subcommand("spectrum", "exact characteristic polynomial");
    std::string s_g6, s_family, s_matrix = "laplacian", s_json;
    int s_n = 0;
    spectrum_cmd->add_option("--g6", s_g6, "graph6 record");
    spectrum_cmd->add_option("--family", s_family, "family name, with --n");
    spectrum_cmd->add_option("--n", s_n, "family size");
    spectrum_cmd->add_option("--matrix", s_matrix, "laplacian or adjacency");
    spectrum_cmd->add_option("--json", s_json, "write a JSON report here");
    spectrum_cmd->callback([&] { exit_code = cmd_spectrum(s_g6, s_family, s_n, s_matrix, s_json); });

    auto* inv_cmd = app.add_subcommand("invariants", "spectrum-derived invariants");
    std::string i_g6, i_family, i_json;
    int i_n = 0;
    inv_cmd->add_option("--g6", i_g6, "graph6 record");
    inv_cmd->add_option("--family", i_family, "family name, with --n");
    inv_cmd->add_option("--n", i_n, "family size");
    inv_cmd->add_option("--json", i_json, "write a JSON report here");
    inv_cmd->callback([&] { exit_code = cmd_invariants(i_g6, i_family, i_n, i_json); });

    auto* census_cmd = app.add_subcommand("census", "motif census of triangle chains");
    std::string c_g6, c_json;
    int c_t = 0;
    census_cmd->add_option("--t", c_t, "census every chain with t triangles");
    census_cmd->add_option("--g6", c_g6, "census one chain given as graph6");
    census_cmd->add_option("--json", c_json, "write a JSON report here");
    census_cmd->callback([&] { exit_code = cmd_census(c_t, c_g6, c_json); });

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    std::string v_suite, v_json;
    int v_cap = -1;
    std::string suite_help = "one of:";
    for (const auto& name : dsq::verification_suite_names()) suite_help += " " + name;
    verify_cmd->add_option("suite", v_suite, suite_help)->required();
    verify_cmd->add_option("--cap", v_cap, "override the suite's main size parameter");
    verify_cmd->add_option("--json", v_json, "write a JSON report here");
    verify_cmd->callback([&] {
        std::optional<int> cap;
        if (v_cap >= 0) cap = v_cap;
        exit_code = cmd_verify(v_suite, cap, v_json);
    });

    auto* search_cmd = app.add_subcommand("search", "group a graph class by exact char poly");
    std::string se_class = "trees", se_matrix = "laplacian", se_target, se_json, se_csv;
    std::optional<int> se_n, se_t;
    int se_workers = 4;
    bool se_skip_bad = false, se_all_witnesses = false;
    search_cmd->add_option("--class", se_class, "trees, tchains or g6:<path>");
    search_cmd->add_option("--n", se_n, "vertex count (trees)");
    search_cmd->add_option("--t", se_t, "triangle count (tchains)");
    search_cmd->add_option("--matrix", se_matrix, "laplacian or adjacency");
    search_cmd->add_option("--target", se_target, "<family>:<size> or g6:<record>");
    search_cmd->add_option("--workers", se_workers, "parallel workers")->check(CLI::Range(1, 64));
    search_cmd->add_option("--json", se_json, "write the full report here");
    search_cmd->add_option("--csv", se_csv, "write (fingerprint hash, class size) rows here");
    search_cmd->add_flag("--skip-bad", se_skip_bad, "tolerate malformed graph6 records");
    search_cmd->add_flag("--all-witnesses", se_all_witnesses,
                         "keep every witness instead of the two earliest per class");
    search_cmd->callback([&] {
        exit_code = cmd_search(se_class, se_n, se_t, se_matrix, se_target, se_workers, se_json,
                               se_csv, se_skip_bad, se_all_witnesses);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
