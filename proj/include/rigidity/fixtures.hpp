#pragma once

// Published reference data (characteristic matrix lists, ideal generator tables and
// codim/ord tables for [3,1,2,1,1] and [2,2,2,1,1]) and the comparisons against it.
//
// Comparisons are three-valued per cell: match, mismatch, or unparseable. A table
// cell that disagrees with the computation is reported, never forced.

#include "rigidity/charmat.hpp"
#include "rigidity/gale.hpp"

#include <json.hpp>

#include <array>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace rigidity::fixtures {

struct NamedBlock {
    std::string name;
    charmat::Block block;
};

struct PaperPolytope {
    std::string key;  // "P" or "Q"
    gale::Weights weights;
    std::vector<std::string> facet_order;
    std::vector<NamedBlock> blocks;

    const NamedBlock* find(const std::string& name) const;
};

struct IdealRow {
    std::vector<std::string> matrices;
    std::vector<std::string> generators;
};

struct IdealTable {
    std::string name;      // "A" or "B"
    std::string polytope;  // key into PaperFixtures::polytopes
    std::vector<IdealRow> rows;
};

struct ProfileRow {
    std::string matrix;
    std::array<int, 7> values{};
};

struct ProfileTable {
    std::string name;  // codim_A, ord_A, codim_B, ord_B
    std::string polytope;
    bool is_codim = true;
    std::vector<ProfileRow> rows;
};

struct PaperFixtures {
    std::vector<PaperPolytope> polytopes;
    std::vector<IdealTable> ideals;
    std::vector<ProfileTable> profiles;

    const PaperPolytope* find_polytope(const std::string& key) const;
    const PaperPolytope* find_by_weights(const gale::Weights& weights) const;
};

/// Reads paper_matrices.json, paper_ideals.json and paper_profiles.json from `dir`.
PaperFixtures load_fixtures(const std::filesystem::path& dir);

struct ExtraBlock {
    charmat::Block block;
    charmat::Permutation automorphism;  // empty when no listed block is reachable
    std::string target;
};

struct MatrixComparison {
    std::size_t computed = 0;
    std::size_t listed = 0;
    std::vector<std::string> missing;  // listed but not enumerated
    std::vector<ExtraBlock> extras;    // enumerated but not listed

    /// Every listed block was found and every extra maps onto a listed one.
    bool ok() const;
};

MatrixComparison compare_matrices(const PaperPolytope& paper, const std::vector<charmat::Block>& computed,
                                  const gale::FaceStructure& faces);

enum class CellStatus { match, mismatch, unparseable };
std::string to_string(CellStatus status);

struct IdealRowCheck {
    std::vector<std::string> matrices;
    CellStatus status = CellStatus::match;
    std::string detail;
    /// For unparseable rows: each listed matrix with the generators of its computed ideal.
    std::vector<std::pair<std::string, std::vector<std::string>>> computed;
};

std::vector<IdealRowCheck> check_ideal_table(const IdealTable& table, const PaperPolytope& paper,
                                             const gale::FaceStructure& faces);

struct Discrepancy {
    std::string table;
    std::string row;
    std::string column;
    int paper_value = 0;
    int computed_value = 0;
    /// Value from the second, independent code path.
    int alternate_value = 0;

    bool certified() const { return alternate_value == computed_value && computed_value != paper_value; }
};

std::vector<Discrepancy> compare_profiles(const ProfileTable& table, const PaperPolytope& paper,
                                          const gale::FaceStructure& faces);

/// {table, row, column, paper_value, computed_value}
nlohmann::json to_json(const Discrepancy& d);

} // namespace rigidity::fixtures
