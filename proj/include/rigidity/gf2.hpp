#pragma once

// Linear algebra over GF(2) and homogeneous polynomial bookkeeping.
//
// Polynomials live in GF(2)[v_0, ..., v_{k-1}] with k <= kMaxVars. Monomials are
// ordered graded-lexicographically with v_0 > v_1 > ... (x > y > z for three
// variables); every ordered container in this header stores monomials in
// descending order, so index 0 of a degree-d basis is v_0^d.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rigidity::gf2 {

class BitVector {
  public:
    BitVector() = default;
    explicit BitVector(std::size_t size);

    std::size_t size() const { return size_; }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i, bool value = true);
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector lhs, const BitVector& rhs) { return lhs ^= rhs; }

    bool any() const;
    bool none() const { return !any(); }
    std::size_t count() const;
    /// Lowest set index, if any.
    std::optional<std::size_t> first_set() const;

    friend bool operator==(const BitVector&, const BitVector&) = default;

  private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);
    static BitMatrix from_rows(std::vector<BitVector> rows, std::size_t cols);
    /// Rows given as '0'/'1' strings, all of the same length.
    static BitMatrix from_strings(std::span<const std::string> rows);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t r, std::size_t c) const { return rows_[r].test(c); }
    void set(std::size_t r, std::size_t c, bool value = true) { rows_[r].set(c, value); }
    const BitVector& row(std::size_t r) const { return rows_[r]; }
    void swap_rows(std::size_t a, std::size_t b) { std::swap(rows_[a], rows_[b]); }
    /// row[dst] += row[src]
    void add_row(std::size_t src, std::size_t dst) { rows_[dst] ^= rows_[src]; }

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

  private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

struct RrefResult {
    std::size_t rank = 0;
    BitMatrix reduced;                // same shape as the input, zero rows last
    std::vector<std::size_t> pivots;  // strictly increasing, one per nonzero row
};

RrefResult rref(BitMatrix matrix);
std::size_t rank(BitMatrix matrix);

inline constexpr std::size_t kMaxVars = 8;

struct Monomial {
    std::array<std::uint8_t, kMaxVars> exponents{};

    int degree() const;
    Monomial operator*(const Monomial& other) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    /// Graded lexicographic: higher degree is greater; ties broken by v_0, then v_1, ...
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
};

class Polynomial {
  public:
    explicit Polynomial(std::size_t nvars = 3);

    static Polynomial one(std::size_t nvars);
    static Polynomial variable(std::size_t nvars, std::size_t index);
    static Polynomial from_monomial(std::size_t nvars, const Monomial& m);
    /// Terms occurring an even number of times cancel.
    static Polynomial from_terms(std::size_t nvars, std::vector<Monomial> terms);

    std::size_t nvars() const { return nvars_; }
    /// Distinct monomials, descending graded-lex order.
    const std::vector<Monomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;

    Polynomial& operator+=(const Polynomial& other);
    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

  private:
    std::size_t nvars_;
    std::vector<Monomial> terms_;
};

Polynomial poly_multiply(const Polynomial& p, const Polynomial& q);
Polynomial power(const Polynomial& p, int exponent);

/// Replace variable i of `p` by images[i]. All images share one target ring; they need
/// not be linear, but the homogeneity guarantee only holds for linear forms.
Polynomial substitute_linear(const Polynomial& p, std::span<const Polynomial> images);

/// Parses sums of monomials written as in "x^3y+yz^3": juxtaposition multiplies,
/// '^' takes a decimal exponent (optionally braced, "x^{2}"), "1" is the unit.
/// Throws InvalidInput for anything else, including "y^z".
Polynomial parse_polynomial(std::string_view text, std::string_view variables = "xyz");
std::string to_string(const Polynomial& p, std::string_view variables = "xyz");

std::size_t monomial_count(std::size_t nvars, int degree);

class MonomialBasis {
  public:
    MonomialBasis() = default;
    MonomialBasis(std::size_t nvars, int degree);

    std::size_t nvars() const { return nvars_; }
    int degree() const { return degree_; }
    std::size_t size() const { return monomials_.size(); }
    const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
    const std::vector<Monomial>& monomials() const { return monomials_; }

    /// Throws OutOfRange if `m` is not a degree-d monomial in this ring.
    std::size_t index_of(const Monomial& m) const;

    /// `p` must be zero or homogeneous of this basis' degree.
    BitVector to_vector(const Polynomial& p) const;
    Polynomial to_polynomial(const BitVector& v) const;

  private:
    std::size_t nvars_ = 0;
    int degree_ = 0;
    std::vector<Monomial> monomials_;
};

/// A graded subspace of GF(2)[v_0..v_{k-1}] truncated at degree D, kept as one
/// reduced row-echelon basis per degree.
class GradedSubspace {
  public:
    GradedSubspace() = default;
    GradedSubspace(std::size_t nvars, int max_degree);

    /// Degreewise saturation of the ideal generated by `generators`: the degree-d
    /// component is spanned by all monomial multiples u*g with deg(u) + deg(g) = d.
    /// Generators must be homogeneous (InvalidInput otherwise).
    static GradedSubspace ideal_closure(std::span<const Polynomial> generators, std::size_t nvars,
                                        int max_degree);

    /// Adds a homogeneous element; returns true if the dimension grew.
    bool insert(const Polynomial& p);

    std::size_t nvars() const { return nvars_; }
    int max_degree() const { return static_cast<int>(components_.size()) - 1; }
    std::size_t dimension(int degree) const;
    const MonomialBasis& basis(int degree) const;
    const std::vector<BitVector>& echelon_rows(int degree) const;
    const std::vector<std::size_t>& pivots(int degree) const;
    std::vector<Polynomial> basis_polynomials(int degree) const;

    /// Remainder of `v` (coordinates in basis(degree)) after eliminating every pivot column.
    BitVector reduce(BitVector v, int degree) const;
    /// Membership of each homogeneous component. Degree above D throws OutOfRange.
    bool contains(const Polynomial& p) const;

    friend bool subspace_equal(const GradedSubspace& a, const GradedSubspace& b);

  private:
    struct Component {
        MonomialBasis basis;
        std::vector<BitVector> rows;
        std::vector<std::size_t> pivots;
    };
    const Component& component(int degree) const;
    bool insert_vector(BitVector v, int degree);

    std::size_t nvars_ = 0;
    std::vector<Component> components_;
};

bool subspace_equal(const GradedSubspace& a, const GradedSubspace& b);

} // namespace rigidity::gf2
