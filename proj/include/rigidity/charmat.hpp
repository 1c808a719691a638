#pragma once

// Z/2 characteristic matrices: n x m matrices over GF(2) whose columns over every
// vertex of the polytope form a basis of GF(2)^n. Columns are stored as bitmasks
// with row r in bit r, so the top row is the low bit.

#include "rigidity/gale.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace rigidity::charmat {

using Column = std::uint32_t;
/// The m - n columns to the right of the identity prefix.
using Block = std::vector<Column>;
/// facet i is sent to facet perm[i].
using Permutation = std::vector<int>;

inline constexpr int kMaxRows = 31;

class CharMatrixZ2 {
  public:
    CharMatrixZ2(int n, std::vector<Column> columns);
    static CharMatrixZ2 with_identity_prefix(int n, const Block& block);

    int n() const { return n_; }
    int m() const { return static_cast<int>(columns_.size()); }
    const std::vector<Column>& columns() const { return columns_; }
    bool entry(int row, int col) const { return (columns_[static_cast<std::size_t>(col)] >> row) & 1U; }
    bool has_identity_prefix() const;
    /// Columns n..m-1.
    Block block() const;

    friend bool operator==(const CharMatrixZ2&, const CharMatrixZ2&) = default;

  private:
    int n_;
    std::vector<Column> columns_;
};

/// Row strings of a block, e.g. {"101", "101", "101", "011", "011"}.
std::vector<std::string> block_rows(const Block& block, int n);
Block block_from_rows(std::span<const std::string> rows);

/// Rank over GF(2) of a set of column vectors.
int column_rank(std::span<const Column> columns);

/// Every maximal face spans GF(2)^n and no column is zero. Throws InvalidInput
/// if the shape does not match the face structure.
bool is_characteristic(const CharMatrixZ2& matrix, const gale::FaceStructure& faces);

/// All identity-prefix completions, sorted lexicographically by column value.
/// Requires facets 0..n-1 to form a vertex (NormalizationError otherwise).
std::vector<Block> enumerate_charmats_serial(const gale::FaceStructure& faces);

/// Same result as the serial version; the first free column's values are split
/// across OpenMP threads. jobs <= 0 uses the OpenMP default.
std::vector<Block> enumerate_charmats(const gale::FaceStructure& faces, int jobs = 0);

/// Facet permutations that map the set of minimal non-faces onto itself (m <= 10).
std::vector<Permutation> face_automorphisms(const gale::FaceStructure& faces);

/// Relabels facets by `perm`, then left-multiplies by the inverse of the new first
/// n columns so the identity prefix is restored.
Block apply_automorphism(const Block& block, const gale::FaceStructure& faces, const Permutation& perm);

} // namespace rigidity::charmat
