#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "dsq/graph.hpp"
#include "dsq/matrix.hpp"

namespace dsq {

inline constexpr const char* kVersion = "dsq 1.0.0";

enum class SearchClass { trees, triangle_chains, graph6_file };

struct SearchSpec {
    SearchClass klass = SearchClass::trees;
    int n = 0;                    // vertex count for trees, triangle count for chains
    std::string path;             // graph6 file input
    MatrixKind matrix = MatrixKind::laplacian;
    std::optional<Graph> target;
    int workers = 4;
    bool skip_bad = false;        // tolerate malformed graph6 records
    bool keep_all_witnesses = false;  // default keeps the two earliest per class
};

struct SearchClassEntry {
    std::string fingerprint;  // characteristic polynomial coefficients, leading first
    long long size = 0;
    std::vector<std::string> witnesses;  // graph6, earliest enumeration indices

    bool operator==(const SearchClassEntry&) const = default;
};

struct SearchReport {
    std::string klass;
    int n = 0;
    std::string matrix;
    int workers = 1;
    long long scanned = 0;
    std::vector<SearchClassEntry> classes;  // sorted by fingerprint string
    bool has_target = false;
    std::string target_g6;
    std::string target_fingerprint;
    long long target_class_size = 0;
    std::vector<std::string> target_mates;  // class witnesses not isomorphic to the target
    std::vector<std::string> errors;
    long long elapsed_ms = 0;
    std::string version;

    bool operator==(const SearchReport&) const = default;
};

SearchReport run_cospectral_search(const SearchSpec& spec);

std::string fingerprint_of(const IntPolynomial& p);
std::string fingerprint_hash(const std::string& fingerprint);  // FNV-1a 64, hex

std::string report_to_json(const SearchReport& report);
SearchReport report_from_json(const std::string& text);
void report_to_csv(const SearchReport& report, std::ostream& out);

}  // namespace dsq
