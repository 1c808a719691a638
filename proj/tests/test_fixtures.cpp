#include "rigidity/error.hpp"
#include "rigidity/fixtures.hpp"
#include "support.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace rigidity;
using namespace rigidity::fixtures;
namespace fs = std::filesystem;

namespace {

const PaperFixtures& shipped() {
    static const PaperFixtures data = load_fixtures(RIGIDITY_DATA_DIR);
    return data;
}

const PaperPolytope& polytope(const std::string& key) {
    const auto* p = shipped().find_polytope(key);
    REQUIRE(p != nullptr);
    return *p;
}

} // namespace

TEST_CASE("shipped reference data loads") {
    const auto& data = shipped();
    CHECK(data.polytopes.size() == 2);
    CHECK(polytope("P").weights == gale::Weights{3, 1, 2, 1, 1});
    CHECK(polytope("Q").weights == gale::Weights{2, 2, 2, 1, 1});
    CHECK(polytope("P").blocks.size() == 21);
    CHECK(polytope("Q").blocks.size() == 21);
    CHECK(data.find_by_weights({2, 2, 2, 1, 1})->key == "Q");
    CHECK(data.find_by_weights({1, 1, 1, 1, 1}) == nullptr);
    CHECK(data.ideals.size() == 2);
    CHECK(data.profiles.size() == 4);
    for (const auto& t : data.profiles) {
        CHECK(t.rows.size() == 11);
        CHECK(t.is_codim == (t.name.rfind("codim", 0) == 0));
    }
}

TEST_CASE("missing or malformed files are invalid input") {
    CHECK_THROWS_AS(load_fixtures("/nonexistent"), InvalidInput);
    const auto dir = fs::temp_directory_path() / "rigidity_bad_fixtures";
    fs::create_directories(dir);
    for (const char* name : {"paper_matrices.json", "paper_ideals.json", "paper_profiles.json"}) {
        fs::copy_file(fs::path(RIGIDITY_DATA_DIR) / name, dir / name, fs::copy_options::overwrite_existing);
    }
    std::ofstream(dir / "paper_ideals.json") << "{ not json";
    CHECK_THROWS_AS(load_fixtures(dir), InvalidInput);
    fs::remove_all(dir);
}

TEST_CASE("matrix lists match exactly") {
    for (const gale::Weights& w : {gale::Weights{3, 1, 2, 1, 1}, gale::Weights{2, 2, 2, 1, 1}}) {
        const auto faces = support::faces_of(w);
        const auto* paper = shipped().find_by_weights(w);
        const auto cmp = compare_matrices(*paper, charmat::enumerate_charmats_serial(faces), faces);
        CHECK(cmp.computed == 21);
        CHECK(cmp.listed == 21);
        CHECK(cmp.missing.empty());
        CHECK(cmp.extras.empty());
        CHECK(cmp.ok());
    }
}

TEST_CASE("an unlisted matrix is carried to a listed one by an automorphism") {
    auto paper = polytope("P");
    const auto dropped = paper.blocks[4];  // A5 differs from A2 by permuting facets over one vertex
    paper.blocks.erase(paper.blocks.begin() + 4);
    const auto faces = support::faces_of(paper.weights);
    const auto cmp = compare_matrices(paper, charmat::enumerate_charmats_serial(faces), faces);
    CHECK(cmp.missing.empty());
    REQUIRE(cmp.extras.size() == 1);
    CHECK(cmp.extras[0].block == dropped.block);
    REQUIRE_FALSE(cmp.extras[0].target.empty());
    CHECK(cmp.ok());
    const auto* target = paper.find(cmp.extras[0].target);
    REQUIRE(target != nullptr);
    CHECK(charmat::apply_automorphism(dropped.block, faces, cmp.extras[0].automorphism) == target->block);
}

TEST_CASE("a listed matrix that is not characteristic is reported missing") {
    auto paper = polytope("Q");
    paper.blocks[0].block = charmat::block_from_rows(std::vector<std::string>{"000", "000", "000", "000", "000"});
    const auto faces = support::faces_of(paper.weights);
    const auto cmp = compare_matrices(paper, charmat::enumerate_charmats_serial(faces), faces);
    CHECK(cmp.missing == std::vector<std::string>{"B1"});
    CHECK_FALSE(cmp.ok());
}

TEST_CASE("ideal tables") {
    const auto faces = support::faces_of({3, 1, 2, 1, 1});
    const auto& table = shipped().ideals[0].name == "A" ? shipped().ideals[0] : shipped().ideals[1];
    const auto rows = check_ideal_table(table, polytope("P"), faces);
    int unparseable = 0;
    for (const auto& r : rows) {
        if (r.status == CellStatus::unparseable) {
            ++unparseable;
            CHECK(r.matrices == std::vector<std::string>{"A10", "A12"});
            CHECK(r.computed.size() == 2);
            CHECK(r.detail.find("y^z") != std::string::npos);
        } else {
            CHECK(r.status == CellStatus::match);
        }
    }
    CHECK(unparseable == 1);
}

TEST_CASE("a wrong generator row is a mismatch") {
    const auto faces = support::faces_of({2, 2, 2, 1, 1});
    IdealTable table;
    table.name = "B";
    table.polytope = "Q";
    table.rows.push_back({{"B1"}, {"x^2", "y^2", "z^2"}});
    const auto rows = check_ideal_table(table, polytope("Q"), faces);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].status == CellStatus::mismatch);
    CHECK(rows[0].detail == "B1");
}

TEST_CASE("profile discrepancies are certified") {
    std::vector<Discrepancy> all;
    for (const auto& t : shipped().profiles) {
        const auto& paper = polytope(t.polytope);
        const auto found = compare_profiles(t, paper, support::faces_of(paper.weights));
        all.insert(all.end(), found.begin(), found.end());
    }
    CHECK(all.size() == 13);
    for (const auto& d : all) {
        CHECK(d.certified());
        CHECK(d.computed_value != d.paper_value);
    }
    const bool has_a1_x = std::any_of(all.begin(), all.end(), [](const Discrepancy& d) {
        return d.table == "ord_A" && d.row == "A1" && d.column == "x" && d.paper_value == 3 && d.computed_value == 4;
    });
    CHECK(has_a1_x);
    const auto j = to_json(all.front());
    CHECK(j.size() == 5);
    for (const char* key : {"table", "row", "column", "paper_value", "computed_value"}) {
        CHECK(j.contains(key));
    }
}

TEST_CASE("an altered table cell shows up as a discrepancy") {
    auto table = shipped().profiles[0];
    const auto& paper = polytope(table.polytope);
    const auto faces = support::faces_of(paper.weights);
    const auto before = compare_profiles(table, paper, faces).size();
    table.rows[0].values[0] += 1;
    const auto after = compare_profiles(table, paper, faces);
    const bool changed_by_one = after.size() == before + 1 || after.size() + 1 == before;
    CHECK(changed_by_one);
    for (const auto& d : after) {
        CHECK(d.certified());
    }
}
