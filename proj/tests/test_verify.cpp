#include <doctest.h>

#include <set>
#include <string>

#include <json.hpp>

#include "dsq/graph.hpp"
#include "dsq/verify.hpp"

TEST_CASE("every suite passes at reduced scale") {
    CHECK(dsq::all_pass(dsq::run_verification_suite("walk-table")));
    CHECK(dsq::all_pass(dsq::run_verification_suite("walk-formula", 4)));
    CHECK(dsq::all_pass(dsq::run_verification_suite("walk-decomposition", 4)));
    CHECK(dsq::all_pass(dsq::run_verification_suite("line-shift", 7)));
    CHECK(dsq::all_pass(dsq::run_verification_suite("bounds", 8)));
    CHECK(dsq::all_pass(dsq::run_verification_suite("invariants")));
    CHECK(dsq::all_pass(dsq::run_verification_suite("degrees", 12)));
    CHECK(dsq::all_pass(dsq::run_verification_suite("obstruction", 10)));
    CHECK(dsq::all_pass(dsq::run_verification_suite("complement", 8)));
}

TEST_CASE("suite inventory and parameter policing") {
    auto names = dsq::verification_suite_names();
    CHECK(names.size() == 9);
    std::set<std::string> unique(names.begin(), names.end());
    CHECK(unique.size() == 9);
    for (const auto& n : names) CHECK(!n.empty());

    CHECK_THROWS(dsq::run_verification_suite("bogus"));
    CHECK_THROWS(dsq::run_verification_suite("walk-formula", 99));
    CHECK_THROWS(dsq::run_verification_suite("walk-formula", 0));
}

TEST_CASE("suite results serialize") {
    auto results = dsq::run_verification_suite("walk-table");
    auto text = dsq::suite_results_to_json("walk-table", results);
    auto j = nlohmann::json::parse(text);
    CHECK(j["suite"] == "walk-table");
    CHECK(j["all_pass"] == true);
    CHECK(j["checks"].size() == results.size());
    CHECK(j["checks"][0]["status"] == "pass");
    CHECK(j["checks"][0].contains("expected"));
    CHECK(j["checks"][0].contains("actual"));
}

TEST_CASE("corpora are deterministic and well formed") {
    auto a = dsq::random_connected_corpus(50, 8, dsq::kCorpusSeed);
    auto b = dsq::random_connected_corpus(50, 8, dsq::kCorpusSeed);
    CHECK(a.size() == 50);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i] == b[i]);
        CHECK(dsq::is_connected(a[i]));
        CHECK(a[i].order() <= 8);
        CHECK(a[i].order() >= 1);
    }
    auto c = dsq::random_connected_corpus(50, 8, dsq::kCorpusSeed + 9);
    bool all_same = true;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == c[i])) all_same = false;
    CHECK(!all_same);

    auto trees = dsq::random_tree_corpus(30, 10, 5);
    for (const auto& t : trees) {
        CHECK(dsq::is_tree(t));
        CHECK(t.order() <= 10);
    }

    auto any = dsq::random_graph_corpus(30, 6, 5);
    CHECK(any.size() == 30);
    for (const auto& g : any) CHECK(g.order() <= 6);
}
