#pragma once

// Z/2 cohomology of quasitoric manifolds over n+3-facet polytopes, presented as
// GF(2)[x, y, z] / I, and exhaustive search for graded isomorphisms between two
// such presentations.
//
// Polynomial degree is half the cohomological degree. The ideal is tracked
// degreewise up to n+1, where it is the whole monomial space.

#include "rigidity/charmat.hpp"
#include "rigidity/gale.hpp"
#include "rigidity/gf2.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rigidity::cohomology {

class GradedQuotient {
  public:
    /// `ideal` must be capped at degree n+1 and be full there (InvalidInput otherwise).
    GradedQuotient(int n, gf2::GradedSubspace ideal);

    int n() const { return n_; }
    std::size_t nvars() const { return ideal_.nvars(); }
    const gf2::GradedSubspace& ideal() const { return ideal_; }
    /// Quotient dimensions in degrees 0..n.
    const std::vector<int>& hilbert() const { return hilbert_; }
    int total_dimension() const;

    /// Basis indices (into ideal().basis(d)) of monomials that are not pivots: a
    /// basis of the degree-d quotient.
    std::vector<std::size_t> standard_monomials(int degree) const;
    /// Reduced coordinates of a homogeneous polynomial of degree <= n+1.
    gf2::BitVector normal_form(const gf2::Polynomial& p) const;

  private:
    int n_;
    gf2::GradedSubspace ideal_;
    std::vector<int> hilbert_;
};

/// Images of the minimal non-face monomials after eliminating v_1..v_n through the
/// linear relations of the characteristic matrix; the last three facets become x, y, z.
std::vector<gf2::Polynomial> ideal_generators(const gale::FaceStructure& faces,
                                              const charmat::CharMatrixZ2& matrix);

/// Requires m - n = 3, an identity prefix and a characteristic matrix.
GradedQuotient quotient_presentation(const gale::FaceStructure& faces, const charmat::CharMatrixZ2& matrix);

/// Whether the ideal generated by `generators` agrees with the quotient's ideal in
/// every degree up to n+1. Non-homogeneous generators throw InvalidInput.
bool ideal_equal(std::span<const gf2::Polynomial> generators, const GradedQuotient& quotient);

/// Degree-one form over (x, y, z): bit 0 = x, bit 1 = y, bit 2 = z.
using LinearForm = std::uint8_t;

/// x, y, z, x+y, x+z, y+z, x+y+z.
inline constexpr std::array<LinearForm, 7> kLinearForms = {1, 2, 4, 3, 5, 6, 7};

std::string form_name(LinearForm form);
gf2::Polynomial linear_polynomial(LinearForm form);

/// Least degree d >= 1 of a nonzero quotient element delta with form * delta = 0.
int codim(LinearForm form, const GradedQuotient& quotient);
/// Same value by enumerating every nonzero quotient element degree by degree.
int codim_by_enumeration(LinearForm form, const GradedQuotient& quotient);

/// Least k with form^k in the ideal, computed by raising to powers and testing membership.
int ord(LinearForm form, const GradedQuotient& quotient);
/// Same value by repeated multiplication inside the quotient (normal forms only).
int ord_by_reduction(LinearForm form, const GradedQuotient& quotient);

struct InvariantProfile {
    std::array<int, 7> codim{};
    std::array<int, 7> ord{};

    friend bool operator==(const InvariantProfile&, const InvariantProfile&) = default;
};

InvariantProfile invariant_profile(const GradedQuotient& quotient);

/// For every d the multiplication pairing Q_d x Q_{n-d} -> Q_n = GF(2) is perfect.
bool poincare_nondegenerate(const GradedQuotient& quotient);

/// Invertible linear change of variables: x -> images[0], y -> images[1], z -> images[2].
struct LinearMap {
    std::array<LinearForm, 3> images{};

    bool is_identity() const { return images == std::array<LinearForm, 3>{1, 2, 4}; }
    friend bool operator==(const LinearMap&, const LinearMap&) = default;
};

/// All 168 invertible maps; the identity first, the rest in lexicographic order.
const std::vector<LinearMap>& general_linear_group();

gf2::Polynomial apply(const LinearMap& map, const gf2::Polynomial& p);
LinearForm apply(const LinearMap& map, LinearForm form);

/// Precomputed action of GL(3, 2) on each monomial space up to a degree cap.
class SubstitutionTable {
  public:
    explicit SubstitutionTable(int max_degree);

    int max_degree() const { return max_degree_; }
    /// Image under group element `g` of a degree-d vector in monomial coordinates.
    gf2::BitVector image(std::size_t g, int degree, const gf2::BitVector& v) const;

  private:
    int max_degree_;
    // [g][degree][monomial index]
    std::vector<std::vector<std::vector<gf2::BitVector>>> images_;
};

/// First map g (in general_linear_group() order) with g(I_A) = I_B in every degree,
/// or nothing. Quotients with different Hilbert vectors return nothing at once.
std::optional<LinearMap> find_graded_iso(const GradedQuotient& a, const GradedQuotient& b);
std::optional<LinearMap> find_graded_iso(const GradedQuotient& a, const GradedQuotient& b,
                                         const SubstitutionTable& table);

struct IsoMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint8_t> cells;

    bool at(std::size_t i, std::size_t j) const { return cells[i * cols + j] != 0; }
    std::size_t count() const;
    friend bool operator==(const IsoMatrix&, const IsoMatrix&) = default;
};

IsoMatrix pairwise_iso_matrix_serial(std::span<const GradedQuotient> a, std::span<const GradedQuotient> b);
/// Pairs are distributed over OpenMP threads; each writes its own cell.
IsoMatrix pairwise_iso_matrix(std::span<const GradedQuotient> a, std::span<const GradedQuotient> b, int jobs = 0);

} // namespace rigidity::cohomology
