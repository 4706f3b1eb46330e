// Acceptance gate: one line per criterion. A criterion that needs an input
// this checkout does not ship (the external all-connected stream) reports
// SKIP and does not gate. Exit code is the number of failing criteria.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "dsq/graph.hpp"
#include "dsq/graph6.hpp"
#include "dsq/matrix.hpp"
#include "dsq/search.hpp"
#include "dsq/tchain.hpp"
#include "dsq/verify.hpp"

namespace {

struct Outcome {
    enum Kind { pass, fail, skip } kind = fail;
    std::string detail;
};

Outcome from_results(const std::vector<dsq::SuiteResult>& results) {
    int bad = 0;
    std::string first;
    for (const auto& r : results)
        if (!r.pass) {
            if (first.empty()) first = r.check + " expected " + r.expected + " got " + r.actual;
            ++bad;
        }
    if (bad == 0)
        return {Outcome::pass, std::to_string(results.size()) + " checks"};
    return {Outcome::fail, std::to_string(bad) + " of " + std::to_string(results.size()) +
                               " checks failed; first: " + first};
}

Outcome suite(const std::string& name, std::optional<int> cap = std::nullopt) {
    return from_results(dsq::run_verification_suite(name, cap));
}

Outcome partial_suite(const std::string& name, std::size_t lo, std::size_t hi) {
    auto all = dsq::run_verification_suite(name);
    std::vector<dsq::SuiteResult> slice(all.begin() + lo, all.begin() + hi);
    return from_results(slice);
}

Outcome chain_targets() {
    for (int t = 2; t <= 10; ++t) {
        dsq::SearchSpec spec;
        spec.klass = dsq::SearchClass::triangle_chains;
        spec.n = t;
        spec.matrix = dsq::MatrixKind::adjacency;
        spec.target = dsq::tree_to_chain(dsq::build(dsq::Family::path, t));
        auto report = dsq::run_cospectral_search(spec);
        if (report.target_class_size != 1)
            return {Outcome::fail, "t=" + std::to_string(t) + " class size " +
                                       std::to_string(report.target_class_size)};
    }
    return {Outcome::pass, "path-chain singleton for t=2..10"};
}

Outcome tree_search(int max_n) {
    long long scanned = 0;
    for (int n = 4; n <= max_n; n += 2) {
        dsq::SearchSpec spec;
        spec.klass = dsq::SearchClass::trees;
        spec.n = n;
        spec.target = dsq::build(dsq::Family::centipede, n);
        auto report = dsq::run_cospectral_search(spec);
        scanned += report.scanned;
        if (report.target_class_size != 1 || !report.target_mates.empty())
            return {Outcome::fail, "n=" + std::to_string(n) + " class size " +
                                       std::to_string(report.target_class_size)};
    }
    return {Outcome::pass,
            "singleton for even n<=" + std::to_string(max_n) + ", " +
                std::to_string(scanned) + " trees scanned"};
}

Outcome stream_check() {
    const char* env = std::getenv("DSQ_CONN9_STREAM");
    std::string path = env ? env : "tests/data/connected_le9.g6";
    if (!std::ifstream(path).good())
        return {Outcome::skip, "external stream " + path + " not present; supply it via "
                               "DSQ_CONN9_STREAM to activate this criterion"};
    dsq::SearchSpec spec;
    spec.klass = dsq::SearchClass::graph6_file;
    spec.path = path;
    auto report = dsq::run_cospectral_search(spec);
    for (int n : {4, 6, 8}) {
        auto poly = dsq::char_poly(
            dsq::matrix_of(dsq::build(dsq::Family::centipede, n), dsq::MatrixKind::laplacian));
        std::string fp = dsq::fingerprint_of(poly);
        long long size = 0;
        for (const auto& c : report.classes)
            if (c.fingerprint == fp) size = c.size;
        if (size != 1)
            return {Outcome::fail, "centipede(" + std::to_string(n) + ") class size " +
                                       std::to_string(size) + " in " + path};
    }
    return {Outcome::pass, std::to_string(report.scanned) + " graphs scanned, centipede "
                           "classes all singleton"};
}

int failures = 0;

void run(int id, const std::string& name, Outcome (*fn)(), bool gating = true) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = fn();
    } catch (const std::exception& e) {
        o = {Outcome::fail, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const char* tag = o.kind == Outcome::pass ? "PASS" : o.kind == Outcome::skip ? "SKIP" : "FAIL";
    std::printf("[%2d] %s  %-22s %6.1fs  %s%s\n", id, tag, name.c_str(), secs, o.detail.c_str(),
                gating ? "" : " (non-gating)");
    std::fflush(stdout);
    if (gating && o.kind == Outcome::fail) ++failures;
}

}  // namespace

int main() {
    run(1, "walk table", [] { return partial_suite("walk-table", 0, 5); });
    run(2, "trace equations", [] { return partial_suite("walk-table", 5, 10); });
    run(3, "moment closed form", [] { return suite("walk-formula"); });
    run(4, "walk decomposition", [] { return suite("walk-decomposition"); });
    run(5, "chain class targets", [] { return chain_targets(); });
    run(6, "line shift identity", [] { return suite("line-shift"); });
    run(7, "derived invariants", [] { return suite("invariants"); });
    run(8, "degree pipeline", [] { return suite("degrees"); });
    run(9, "tree search", [] { return tree_search(18); });
    run(10, "all-graphs stream", [] { return stream_check(); });
    run(11, "complement identity", [] { return suite("complement"); });
    run(12, "eigenvalue bounds", [] { return suite("bounds"); });
    run(13, "obstruction dichotomy", [] { return suite("obstruction"); });

    if (std::getenv("DSQ_EXTENDED"))
        run(14, "tree search extended", [] { return tree_search(20); }, false);

    if (failures == 0)
        std::printf("acceptance: all gating criteria pass\n");
    else
        std::printf("acceptance: %d criterion(s) failing\n", failures);
    return failures;
}
