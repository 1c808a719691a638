#include "rigidity/error.hpp"
#include "rigidity/report.hpp"
#include "rigidity/serialize.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace rigidity;
using namespace rigidity::report;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

Options verify_options(int jobs = 1) {
    Options o;
    o.jobs = jobs;
    o.verify = true;
    o.fixtures_dir = RIGIDITY_DATA_DIR;
    return o;
}

} // namespace

TEST_CASE("report for [3,1,2,1,1]") {
    const auto r = build_report({3, 1, 2, 1, 1}, Options{});
    CHECK(r.class_supported);
    REQUIRE(r.members.size() == 2);
    CHECK(r.members[0].weights == gale::Weights{3, 1, 2, 1, 1});
    CHECK(r.members[1].weights == gale::Weights{2, 2, 2, 1, 1});
    CHECK(r.members[0].matrix_count == 21);
    CHECK(r.members[1].matrix_count == 21);
    CHECK(r.members[0].vertices == 18);
    CHECK(r.cross_pairs() == 441);
    CHECK(r.isomorphisms() == 0);
    CHECK(r.verdict == "NOT-B-RIGID C-RIGID-WITHIN-CLASS");
    CHECK(r.exit_status() == 0);
    CHECK_FALSE(r.verified);
}

TEST_CASE("input order decides member names") {
    const auto r = build_report({1, 1, 2, 2, 2}, Options{});
    CHECK(r.canonical == gale::Weights{2, 2, 2, 1, 1});
    CHECK(r.members[0].weights == gale::Weights{2, 2, 2, 1, 1});
    CHECK(r.verdict == "NOT-B-RIGID C-RIGID-WITHIN-CLASS");
}

TEST_CASE("singleton class") {
    const auto r = build_report({1, 1, 1, 1, 1}, Options{});
    CHECK(r.members.size() == 1);
    CHECK(r.members[0].matrix_count == 5);
    CHECK(r.pairs.empty());
    CHECK(r.verdict == "B-RIGID-WITHIN-FAMILY");
}

TEST_CASE("heptagon gives Betti data only") {
    const auto r = build_report({1, 1, 1, 1, 1, 1, 1}, Options{});
    CHECK_FALSE(r.class_supported);
    CHECK(r.members.empty());
    CHECK(r.verdict == "BETTI-ONLY");
    REQUIRE_FALSE(r.notices.empty());
    CHECK(r.notices.front().find("pentagon-only") != std::string::npos);
    CHECK(r.betti.beta(1, 6) == 7);
}

TEST_CASE("k >= 4 is refused") {
    try {
        build_report({1, 1, 1, 1, 1, 1, 1, 1, 1}, Options{});
        FAIL("expected InvalidInput");
    } catch (const InvalidInput& e) {
        CHECK(std::string(e.what()).find("supports_quasitoric") != std::string::npos);
    }
    CHECK_THROWS_AS(build_report({1, 1, 1, 1}, Options{}), InvalidInput);
}

TEST_CASE("verified report") {
    const auto r = build_report({3, 1, 2, 1, 1}, verify_options());
    CHECK(r.verified);
    REQUIRE(r.checks.size() == 2);
    CHECK(r.checks[0].second.fixture_key == "P");
    CHECK(r.checks[1].second.fixture_key == "Q");
    std::size_t discrepancies = 0;
    for (const auto& [index, check] : r.checks) {
        CHECK(check.matrices_ok());
        CHECK(check.ideals_ok());
        CHECK(check.profiles_ok());
        discrepancies += check.discrepancies.size();
        for (const auto& name : check.reference_names) {
            CHECK_FALSE(name.empty());
        }
    }
    CHECK(discrepancies == 13);
    CHECK(r.exit_status() == 0);
    const auto j = to_json(r);
    CHECK(j.at("verify").at("discrepancy_report").size() == 13);
    CHECK(j.at("verify").at("ok") == true);
    const auto text = to_text(r);
    CHECK(text.find("ord_A A1 x: table 3, computed 4") != std::string::npos);
    CHECK(text.find("unparseable [A10,A12]") != std::string::npos);
}

TEST_CASE("verify flags a tampered ideal table") {
    TempDir dir("rigidity_tampered");
    for (const char* name : {"paper_matrices.json", "paper_ideals.json", "paper_profiles.json"}) {
        fs::copy_file(fs::path(RIGIDITY_DATA_DIR) / name, dir.path / name);
    }
    auto ideals = nlohmann::json::parse(std::ifstream(dir.path / "paper_ideals.json"));
    ideals["B"]["rows"][0]["generators"] = {"x^2", "y^2", "z^2"};
    std::ofstream(dir.path / "paper_ideals.json") << ideals.dump();
    auto o = verify_options();
    o.fixtures_dir = dir.path;
    const auto r = build_report({3, 1, 2, 1, 1}, o);
    CHECK_FALSE(r.verify_ok());
    CHECK(r.exit_status() == 1);
    // The verdict rests on the isomorphism search alone.
    CHECK(r.verdict == "NOT-B-RIGID C-RIGID-WITHIN-CLASS");
}

TEST_CASE("output is identical across job counts") {
    const auto one = build_report({3, 1, 2, 1, 1}, verify_options(1));
    const auto four = build_report({3, 1, 2, 1, 1}, verify_options(4));
    CHECK(to_json(one).dump() == to_json(four).dump());
    CHECK(to_text(one) == to_text(four));
}

TEST_CASE("cache round trip") {
    TempDir dir("rigidity_cache_roundtrip");
    Options o;
    o.cache_dir = dir.path;
    const auto fresh = build_member({3, 1, 2, 1, 1}, o);
    CHECK_FALSE(fresh.charmats_from_cache);
    CHECK(fs::exists(dir.path / "charmats_3-1-2-1-1.json"));
    CHECK(fs::exists(dir.path / "quotients_3-1-2-1-1.json"));
    const auto cached = build_member({1, 2, 1, 1, 3}, o);
    CHECK(cached.charmats_from_cache);
    CHECK(cached.quotients_from_cache);
    CHECK(cached.blocks == fresh.blocks);
    REQUIRE(cached.quotients.size() == fresh.quotients.size());
    for (std::size_t i = 0; i < fresh.quotients.size(); ++i) {
        CHECK(serialize::to_json(cached.quotients[i]) == serialize::to_json(fresh.quotients[i]));
    }
    const auto a = build_report({3, 1, 2, 1, 1}, Options{});
    const auto b = build_report({3, 1, 2, 1, 1}, o);
    CHECK(to_json(a).dump() == to_json(b).dump());
}

TEST_CASE("corrupt cache files are recomputed with a warning") {
    TempDir dir("rigidity_cache_corrupt");
    std::ostringstream warnings;
    Options o;
    o.cache_dir = dir.path;
    o.warnings = &warnings;
    const auto fresh = build_member({2, 2, 2, 1, 1}, o);
    const auto charmats = dir.path / "charmats_2-2-2-1-1.json";
    const auto quotients = dir.path / "quotients_2-2-2-1-1.json";

    SUBCASE("truncated JSON") { std::ofstream(quotients) << "{\"weights\": [2,2"; }
    SUBCASE("block that is not characteristic") {
        auto j = nlohmann::json::parse(std::ifstream(charmats));
        j["blocks"][0] = {"000", "000", "000", "000", "000"};
        std::ofstream(charmats) << j.dump();
    }
    SUBCASE("dropped block") {
        auto j = nlohmann::json::parse(std::ifstream(charmats));
        j["blocks"].erase(0);
        std::ofstream(charmats) << j.dump();
    }
    SUBCASE("quotients swapped between matrices") {
        auto j = nlohmann::json::parse(std::ifstream(quotients));
        std::size_t other = 1;
        while (j["quotients"][other] == j["quotients"][0]) {
            ++other;
        }
        std::swap(j["quotients"][0], j["quotients"][other]);
        std::ofstream(quotients) << j.dump();
    }
    SUBCASE("wrong weights") {
        auto j = nlohmann::json::parse(std::ifstream(charmats));
        j["weights"] = {3, 1, 2, 1, 1};
        std::ofstream(charmats) << j.dump();
    }

    const auto again = build_member({2, 2, 2, 1, 1}, o);
    CHECK(warnings.str().find("warning:") != std::string::npos);
    CHECK(again.blocks == fresh.blocks);
    REQUIRE(again.quotients.size() == fresh.quotients.size());
    for (std::size_t i = 0; i < fresh.quotients.size(); ++i) {
        CHECK(serialize::to_json(again.quotients[i]) == serialize::to_json(fresh.quotients[i]));
    }
    // The rewritten cache is clean.
    std::ostringstream quiet;
    o.warnings = &quiet;
    const auto third = build_member({2, 2, 2, 1, 1}, o);
    CHECK(third.charmats_from_cache);
    CHECK(third.quotients_from_cache);
    CHECK(quiet.str().empty());
}

TEST_CASE("text and JSON forms") {
    const auto r = build_report({1, 1, 1, 1, 1}, Options{});
    const auto text = to_text(r);
    CHECK(text.find("verdict: B-RIGID-WITHIN-FAMILY") != std::string::npos);
    CHECK(text.find("S^3xS^4") != std::string::npos);
    const auto j = to_json(r);
    CHECK(j.at("verdict") == "B-RIGID-WITHIN-FAMILY");
    CHECK(j.at("tor_class").size() == 1);
    CHECK(cache_key({3, 1, 2, 1, 1}) == "3-1-2-1-1");
    CHECK(join_weights({3, 1, 2}) == "3,1,2");
}
