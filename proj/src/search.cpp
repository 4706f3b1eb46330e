#include "dsq/search.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include <json.hpp>

#include "dsq/canonical.hpp"
#include "dsq/graph6.hpp"
#include "dsq/tchain.hpp"
#include "dsq/trees.hpp"

namespace dsq {

std::string fingerprint_of(const IntPolynomial& p) {
    std::ostringstream os;
    for (int i = p.degree(); i >= 0; --i) {
        os << p.c[i].get_str();
        if (i > 0) os << ",";
    }
    return os.str();
}

std::string fingerprint_hash(const std::string& fingerprint) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : fingerprint) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

namespace {

struct Accum {
    long long size = 0;
    std::vector<std::pair<long long, std::string>> witnesses;  // enumeration index, graph6
};

struct WorkerState {
    std::unordered_map<std::string, Accum> classes;
    std::vector<std::pair<long long, std::string>> errors;  // line number, message
    std::exception_ptr failure;
};

void note(WorkerState& st, const std::string& fp, long long index, const std::string& g6,
          bool keep_all) {
    Accum& acc = st.classes[fp];
    ++acc.size;
    acc.witnesses.push_back({index, g6});
    std::sort(acc.witnesses.begin(), acc.witnesses.end());
    if (!keep_all && acc.witnesses.size() > 2) acc.witnesses.resize(2);
}

std::string matrix_name(MatrixKind kind) {
    return kind == MatrixKind::laplacian ? "laplacian" : "adjacency";
}

std::string class_name(const SearchSpec& spec) {
    switch (spec.klass) {
        case SearchClass::trees: return "trees";
        case SearchClass::triangle_chains: return "tchains";
        case SearchClass::graph6_file: return "g6:" + spec.path;
    }
    return "";
}

}  // namespace

SearchReport run_cospectral_search(const SearchSpec& spec) {
    auto t0 = std::chrono::steady_clock::now();
    if (spec.workers < 1) throw std::invalid_argument("worker count must be positive");
    if (spec.matrix != MatrixKind::laplacian && spec.matrix != MatrixKind::adjacency)
        throw std::invalid_argument("search matrix must be laplacian or adjacency");
    int w = spec.workers;

    // materialized inputs shared read-only by the workers
    std::vector<Graph> chains;
    std::vector<std::pair<long long, std::string>> records;  // line number, bytes
    if (spec.klass == SearchClass::triangle_chains) {
        if (spec.n < 1 || spec.n > 10)
            throw std::invalid_argument("chain search takes 1 to 10 triangles");
        for (auto& t : all_trees(spec.n, 3)) chains.push_back(tree_to_chain(t));
    } else if (spec.klass == SearchClass::graph6_file) {
        std::ifstream in(spec.path, std::ios::binary);
        if (!in) throw std::runtime_error("cannot open " + spec.path);
        std::string line;
        long long lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            records.push_back({lineno, line});
        }
    } else if (spec.n < 1 || spec.n > 20) {
        throw std::invalid_argument("tree search takes 1 to 20 vertices");
    }

    std::vector<WorkerState> states(w);
    auto work = [&](int id) {
        WorkerState& st = states[id];
        try {
            auto classify = [&](long long index, const Graph& g) {
                auto poly = char_poly(matrix_of(g, spec.matrix));
                note(st, fingerprint_of(poly), index, graph6_encode(g), spec.keep_all_witnesses);
            };
            if (spec.klass == SearchClass::trees) {
                TreeStream stream(spec.n);
                long long index = 0;
                while (auto t = stream.next()) {
                    if (index % w == id) classify(index, *t);
                    ++index;
                }
            } else if (spec.klass == SearchClass::triangle_chains) {
                for (long long i = id; i < static_cast<long long>(chains.size()); i += w)
                    classify(i, chains[i]);
            } else {
                for (long long i = id; i < static_cast<long long>(records.size()); i += w) {
                    auto& [lineno, bytes] = records[i];
                    try {
                        classify(i, graph6_decode(bytes));
                    } catch (const Graph6Error& e) {
                        std::ostringstream os;
                        os << "line " << lineno << ": " << e.what();
                        if (!spec.skip_bad) throw std::runtime_error(os.str());
                        st.errors.push_back({lineno, os.str()});
                    }
                }
            }
        } catch (...) {
            st.failure = std::current_exception();
        }
    };
    if (w == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(w);
        for (int id = 0; id < w; ++id) pool.emplace_back(work, id);
        for (auto& th : pool) th.join();
    }
    for (auto& st : states)
        if (st.failure) std::rethrow_exception(st.failure);

    std::map<std::string, Accum> merged;
    std::vector<std::pair<long long, std::string>> errors;
    for (auto& st : states) {
        for (auto& [fp, acc] : st.classes) {
            Accum& into = merged[fp];
            into.size += acc.size;
            into.witnesses.insert(into.witnesses.end(), acc.witnesses.begin(),
                                  acc.witnesses.end());
            std::sort(into.witnesses.begin(), into.witnesses.end());
            if (!spec.keep_all_witnesses && into.witnesses.size() > 2) into.witnesses.resize(2);
        }
        errors.insert(errors.end(), st.errors.begin(), st.errors.end());
    }
    std::sort(errors.begin(), errors.end());

    SearchReport report;
    report.klass = class_name(spec);
    report.n = spec.n;
    report.matrix = matrix_name(spec.matrix);
    report.workers = w;
    report.version = kVersion;
    for (auto& [fp, acc] : merged) {
        SearchClassEntry entry;
        entry.fingerprint = fp;
        entry.size = acc.size;
        for (auto& [idx, g6] : acc.witnesses) entry.witnesses.push_back(g6);
        report.scanned += acc.size;
        report.classes.push_back(std::move(entry));
    }
    for (auto& [line, msg] : errors) report.errors.push_back(msg);

    if (spec.target) {
        report.has_target = true;
        report.target_g6 = graph6_encode(*spec.target);
        report.target_fingerprint =
            fingerprint_of(char_poly(matrix_of(*spec.target, spec.matrix)));
        auto it = merged.find(report.target_fingerprint);
        if (it != merged.end()) {
            report.target_class_size = it->second.size;
            for (auto& [idx, g6] : it->second.witnesses)
                if (!isomorphic(graph6_decode(g6), *spec.target))
                    report.target_mates.push_back(g6);
        }
    }
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
    return report;
}

std::string report_to_json(const SearchReport& r) {
    nlohmann::json j;
    j["class"] = r.klass;
    j["n"] = r.n;
    j["matrix"] = r.matrix;
    j["workers"] = r.workers;
    j["scanned"] = r.scanned;
    j["classes"] = nlohmann::json::array();
    for (auto& c : r.classes)
        j["classes"].push_back({{"fingerprint", c.fingerprint},
                                {"hash", fingerprint_hash(c.fingerprint)},
                                {"size", c.size},
                                {"witnesses", c.witnesses}});
    if (r.has_target) {
        j["target"] = {{"g6", r.target_g6},
                       {"fingerprint", r.target_fingerprint},
                       {"class_size", r.target_class_size},
                       {"mates", r.target_mates}};
    }
    j["errors"] = r.errors;
    j["elapsed_ms"] = r.elapsed_ms;
    j["version"] = r.version;
    return j.dump(2);
}

SearchReport report_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    SearchReport r;
    r.klass = j.at("class").get<std::string>();
    r.n = j.at("n").get<int>();
    r.matrix = j.at("matrix").get<std::string>();
    r.workers = j.at("workers").get<int>();
    r.scanned = j.at("scanned").get<long long>();
    for (auto& c : j.at("classes")) {
        SearchClassEntry entry;
        entry.fingerprint = c.at("fingerprint").get<std::string>();
        entry.size = c.at("size").get<long long>();
        entry.witnesses = c.at("witnesses").get<std::vector<std::string>>();
        r.classes.push_back(std::move(entry));
    }
    if (j.contains("target")) {
        r.has_target = true;
        r.target_g6 = j["target"].at("g6").get<std::string>();
        r.target_fingerprint = j["target"].at("fingerprint").get<std::string>();
        r.target_class_size = j["target"].at("class_size").get<long long>();
        r.target_mates = j["target"].at("mates").get<std::vector<std::string>>();
    }
    r.errors = j.at("errors").get<std::vector<std::string>>();
    r.elapsed_ms = j.at("elapsed_ms").get<long long>();
    r.version = j.at("version").get<std::string>();
    return r;
}

void report_to_csv(const SearchReport& r, std::ostream& out) {
    out << "fingerprint_hash,class_size\n";
    for (auto& c : r.classes) out << fingerprint_hash(c.fingerprint) << "," << c.size << "\n";
}

}  // namespace dsq
