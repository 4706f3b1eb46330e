#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dsq/graph.hpp"

namespace dsq {

struct SuiteResult {
    std::string check;
    bool pass = false;
    std::string expected;
    std::string actual;
    std::string witness_g6;  // set when a failing graph exists

    bool operator==(const SuiteResult&) const = default;
};

// suites: walk-table, walk-formula, walk-decomposition, line-shift, bounds,
// invariants, degrees, obstruction, complement. The optional cap overrides
// the suite's main size parameter (t or n).
std::vector<SuiteResult> run_verification_suite(const std::string& suite,
                                                std::optional<int> cap = std::nullopt);

std::vector<std::string> verification_suite_names();

bool all_pass(const std::vector<SuiteResult>& results);

std::string suite_results_to_json(const std::string& suite,
                                  const std::vector<SuiteResult>& results);

// deterministic seeded corpora used by the property suites
std::vector<Graph> random_connected_corpus(int count, int max_order, unsigned seed);
std::vector<Graph> random_graph_corpus(int count, int max_order, unsigned seed);
std::vector<Graph> random_tree_corpus(int count, int max_order, unsigned seed);

inline constexpr unsigned kCorpusSeed = 424242;

}  // namespace dsq
