#include "rigidity/cohomology.hpp"

#include "rigidity/error.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include <omp.h>

namespace rigidity::cohomology {

using gf2::BitVector;
using gf2::Polynomial;

// ---------------------------------------------------------------- GradedQuotient

GradedQuotient::GradedQuotient(int n, gf2::GradedSubspace ideal) : n_(n), ideal_(std::move(ideal)) {
    if (n < 1) {
        throw InvalidInput("quotient top degree must be positive");
    }
    if (ideal_.max_degree() != n + 1) {
        throw InvalidInput("ideal must be tracked up to degree n+1");
    }
    if (ideal_.dimension(n + 1) != ideal_.basis(n + 1).size()) {
        throw InvalidInput("ideal is not the whole monomial space in degree n+1");
    }
    for (int d = 0; d <= n; ++d) {
        hilbert_.push_back(static_cast<int>(ideal_.basis(d).size() - ideal_.dimension(d)));
    }
}

int GradedQuotient::total_dimension() const {
    int total = 0;
    for (int h : hilbert_) {
        total += h;
    }
    return total;
}

std::vector<std::size_t> GradedQuotient::standard_monomials(int degree) const {
    const auto& pivots = ideal_.pivots(degree);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < ideal_.basis(degree).size(); ++i) {
        if (!std::binary_search(pivots.begin(), pivots.end(), i)) {
            out.push_back(i);
        }
    }
    return out;
}

BitVector GradedQuotient::normal_form(const Polynomial& p) const {
    if (!p.is_homogeneous()) {
        throw InvalidInput("normal_form expects a homogeneous polynomial");
    }
    if (p.is_zero()) {
        throw InvalidInput("normal_form of zero has no degree");
    }
    const int d = p.degree();
    return ideal_.reduce(ideal_.basis(d).to_vector(p), d);
}

// ---------------------------------------------------------------- presentation

std::vector<Polynomial> ideal_generators(const gale::FaceStructure& faces, const charmat::CharMatrixZ2& matrix) {
    if (faces.m - faces.n != 3) {
        throw UnsupportedShape("cohomology presentations are implemented for m - n = 3");
    }
    if (matrix.n() != faces.n || matrix.m() != faces.m) {
        throw InvalidInput("characteristic matrix shape does not match the polytope");
    }
    if (!matrix.has_identity_prefix()) {
        throw InvalidInput("characteristic matrix must start with the identity");
    }
    constexpr std::size_t kVars = 3;
    // v_i = sum_c A[i][c] * w_c for the first n facets, v_{n+c} = w_c.
    std::vector<Polynomial> facet_forms;
    facet_forms.reserve(static_cast<std::size_t>(faces.m));
    for (int i = 0; i < faces.n; ++i) {
        Polynomial form(kVars);
        for (int c = 0; c < 3; ++c) {
            if (matrix.entry(i, faces.n + c)) {
                form += Polynomial::variable(kVars, static_cast<std::size_t>(c));
            }
        }
        facet_forms.push_back(std::move(form));
    }
    for (int c = 0; c < 3; ++c) {
        facet_forms.push_back(Polynomial::variable(kVars, static_cast<std::size_t>(c)));
    }
    std::vector<Polynomial> gens;
    for (gale::FacetSet e : faces.minimal_nonfaces) {
        Polynomial g = Polynomial::one(kVars);
        for (int f : gale::members(e)) {
            g = g * facet_forms[static_cast<std::size_t>(f)];
        }
        gens.push_back(std::move(g));
    }
    return gens;
}

GradedQuotient quotient_presentation(const gale::FaceStructure& faces, const charmat::CharMatrixZ2& matrix) {
    const auto gens = ideal_generators(faces, matrix);
    if (!charmat::is_characteristic(matrix, faces)) {
        throw InvalidInput("matrix is not characteristic over this polytope");
    }
    return GradedQuotient(faces.n, gf2::GradedSubspace::ideal_closure(gens, 3, faces.n + 1));
}

bool ideal_equal(std::span<const Polynomial> generators, const GradedQuotient& quotient) {
    for (const auto& g : generators) {
        if (!g.is_homogeneous()) {
            throw InvalidInput("generator " + gf2::to_string(g) + " is not homogeneous");
        }
        if (g.nvars() != quotient.nvars()) {
            throw InvalidInput("generator ring does not match the quotient");
        }
    }
    const auto closure =
        gf2::GradedSubspace::ideal_closure(generators, quotient.nvars(), quotient.ideal().max_degree());
    return gf2::subspace_equal(closure, quotient.ideal());
}

// ---------------------------------------------------------------- invariants

std::string form_name(LinearForm form) {
    static constexpr const char* kNames[] = {"x", "y", "z"};
    std::string out;
    for (int v = 0; v < 3; ++v) {
        if ((form >> v) & 1U) {
            if (!out.empty()) {
                out += '+';
            }
            out += kNames[v];
        }
    }
    return out.empty() ? "0" : out;
}

Polynomial linear_polynomial(LinearForm form) {
    Polynomial p(3);
    for (std::size_t v = 0; v < 3; ++v) {
        if ((form >> v) & 1U) {
            p += Polynomial::variable(3, v);
        }
    }
    return p;
}

namespace {

void check_form(LinearForm form, const GradedQuotient& quotient) {
    if (quotient.nvars() != 3) {
        throw UnsupportedShape("linear-form invariants are defined for three variables");
    }
    if (form == 0 || form > 7) {
        throw InvalidInput("linear form must be nonzero");
    }
}

// Products gamma * s for each standard monomial s of the given degree, in normal form.
std::vector<BitVector> multiplication_images(const Polynomial& gamma, const GradedQuotient& q, int degree) {
    const auto& basis = q.ideal().basis(degree);
    std::vector<BitVector> images;
    for (std::size_t idx : q.standard_monomials(degree)) {
        images.push_back(q.normal_form(Polynomial::from_monomial(3, basis[idx]) * gamma));
    }
    return images;
}

} // namespace

int codim(LinearForm form, const GradedQuotient& quotient) {
    check_form(form, quotient);
    const Polynomial gamma = linear_polynomial(form);
    for (int d = 1; d <= quotient.n(); ++d) {
        auto images = multiplication_images(gamma, quotient, d);
        if (images.empty()) {
            continue;
        }
        const std::size_t domain = images.size();
        const std::size_t cols = images.front().size();
        if (gf2::rank(gf2::BitMatrix::from_rows(std::move(images), cols)) < domain) {
            return d;
        }
    }
    throw std::logic_error("multiplication by a linear form is injective in every degree");
}

int codim_by_enumeration(LinearForm form, const GradedQuotient& quotient) {
    check_form(form, quotient);
    const Polynomial gamma = linear_polynomial(form);
    for (int d = 1; d <= quotient.n(); ++d) {
        const auto standard = quotient.standard_monomials(d);
        if (standard.size() > 20) {
            throw UnsupportedShape("quotient too large to enumerate");
        }
        const auto& basis = quotient.ideal().basis(d);
        for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << standard.size()); ++mask) {
            Polynomial delta(3);
            for (std::size_t i = 0; i < standard.size(); ++i) {
                if ((mask >> i) & 1U) {
                    delta += Polynomial::from_monomial(3, basis[standard[i]]);
                }
            }
            if (quotient.ideal().contains(gamma * delta)) {
                return d;
            }
        }
    }
    throw std::logic_error("no annihilating element found");
}

int ord(LinearForm form, const GradedQuotient& quotient) {
    check_form(form, quotient);
    const Polynomial gamma = linear_polynomial(form);
    Polynomial p = gamma;
    const int cap = quotient.ideal().max_degree();
    for (int k = 1; k <= cap; ++k) {
        if (quotient.ideal().contains(p)) {
            return k;
        }
        p = p * gamma;
    }
    throw std::logic_error("power of a linear form escaped the full top-degree ideal");
}

int ord_by_reduction(LinearForm form, const GradedQuotient& quotient) {
    check_form(form, quotient);
    const Polynomial gamma = linear_polynomial(form);
    const int cap = quotient.ideal().max_degree();
    BitVector residue = quotient.normal_form(gamma);
    int k = 1;
    while (residue.any()) {
        if (k == cap) {
            throw std::logic_error("quotient element survived past degree n+1");
        }
        const Polynomial rep = quotient.ideal().basis(k).to_polynomial(residue);
        residue = quotient.normal_form(rep * gamma);
        ++k;
    }
    return k;
}

InvariantProfile invariant_profile(const GradedQuotient& quotient) {
    InvariantProfile profile;
    for (std::size_t i = 0; i < kLinearForms.size(); ++i) {
        profile.codim[i] = codim(kLinearForms[i], quotient);
        profile.ord[i] = ord(kLinearForms[i], quotient);
    }
    return profile;
}

bool poincare_nondegenerate(const GradedQuotient& quotient) {
    const int n = quotient.n();
    const auto top = quotient.standard_monomials(n);
    if (top.size() != 1) {
        return false;
    }
    const std::size_t top_index = top.front();
    const std::size_t nv = quotient.nvars();
    for (int d = 0; d <= n; ++d) {
        const auto left = quotient.standard_monomials(d);
        const auto right = quotient.standard_monomials(n - d);
        if (left.size() != right.size()) {
            return false;
        }
        if (left.empty()) {
            continue;
        }
        gf2::BitMatrix pairing(left.size(), right.size());
        for (std::size_t i = 0; i < left.size(); ++i) {
            const auto a = Polynomial::from_monomial(nv, quotient.ideal().basis(d)[left[i]]);
            for (std::size_t j = 0; j < right.size(); ++j) {
                const auto b = Polynomial::from_monomial(nv, quotient.ideal().basis(n - d)[right[j]]);
                pairing.set(i, j, quotient.normal_form(a * b).test(top_index));
            }
        }
        if (gf2::rank(std::move(pairing)) != left.size()) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------- GL(3, 2)

const std::vector<LinearMap>& general_linear_group() {
    static const std::vector<LinearMap> group = [] {
        std::vector<LinearMap> out{LinearMap{{1, 2, 4}}};
        for (LinearForm a = 1; a < 8; ++a) {
            for (LinearForm b = 1; b < 8; ++b) {
                for (LinearForm c = 1; c < 8; ++c) {
                    const std::array<charmat::Column, 3> cols{a, b, c};
                    const LinearMap g{{a, b, c}};
                    if (charmat::column_rank(cols) == 3 && !g.is_identity()) {
                        out.push_back(g);
                    }
                }
            }
        }
        return out;
    }();
    return group;
}

Polynomial apply(const LinearMap& map, const Polynomial& p) {
    if (p.nvars() != 3) {
        throw UnsupportedShape("GL(3,2) acts on three variables");
    }
    const std::array<Polynomial, 3> images{linear_polynomial(map.images[0]), linear_polynomial(map.images[1]),
                                           linear_polynomial(map.images[2])};
    return gf2::substitute_linear(p, images);
}

LinearForm apply(const LinearMap& map, LinearForm form) {
    LinearForm out = 0;
    for (int v = 0; v < 3; ++v) {
        if ((form >> v) & 1U) {
            out ^= map.images[static_cast<std::size_t>(v)];
        }
    }
    return out;
}

SubstitutionTable::SubstitutionTable(int max_degree) : max_degree_(max_degree) {
    const auto& group = general_linear_group();
    std::vector<gf2::MonomialBasis> bases;
    for (int d = 0; d <= max_degree; ++d) {
        bases.emplace_back(3, d);
    }
    images_.resize(group.size());
    for (std::size_t g = 0; g < group.size(); ++g) {
        images_[g].resize(static_cast<std::size_t>(max_degree) + 1);
        for (int d = 0; d <= max_degree; ++d) {
            const auto& basis = bases[static_cast<std::size_t>(d)];
            auto& column_images = images_[g][static_cast<std::size_t>(d)];
            column_images.reserve(basis.size());
            for (const auto& m : basis.monomials()) {
                column_images.push_back(basis.to_vector(apply(group[g], Polynomial::from_monomial(3, m))));
            }
        }
    }
}

BitVector SubstitutionTable::image(std::size_t g, int degree, const BitVector& v) const {
    if (degree < 0 || degree > max_degree_) {
        throw OutOfRange("substitution table does not cover this degree");
    }
    const auto& columns = images_.at(g)[static_cast<std::size_t>(degree)];
    BitVector out(columns.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v.test(i)) {
            out ^= columns[i];
        }
    }
    return out;
}

std::optional<LinearMap> find_graded_iso(const GradedQuotient& a, const GradedQuotient& b,
                                         const SubstitutionTable& table) {
    if (a.nvars() != 3 || b.nvars() != 3) {
        throw UnsupportedShape("isomorphism search is implemented for three generators");
    }
    if (a.n() != b.n() || a.hilbert() != b.hilbert()) {
        return std::nullopt;
    }
    const int cap = a.ideal().max_degree();
    if (table.max_degree() < cap) {
        throw OutOfRange("substitution table too small for these quotients");
    }
    const auto& group = general_linear_group();
    for (std::size_t g = 0; g < group.size(); ++g) {
        bool maps_onto = true;
        for (int d = 0; d <= cap && maps_onto; ++d) {
            for (const auto& row : a.ideal().echelon_rows(d)) {
                if (b.ideal().reduce(table.image(g, d, row), d).any()) {
                    maps_onto = false;
                    break;
                }
            }
        }
        // g is invertible and the dimensions agree, so containment is equality.
        if (maps_onto) {
            return group[g];
        }
    }
    return std::nullopt;
}

std::optional<LinearMap> find_graded_iso(const GradedQuotient& a, const GradedQuotient& b) {
    if (a.nvars() != 3 || b.nvars() != 3) {
        throw UnsupportedShape("isomorphism search is implemented for three generators");
    }
    const SubstitutionTable table(std::max(a.ideal().max_degree(), b.ideal().max_degree()));
    return find_graded_iso(a, b, table);
}

std::size_t IsoMatrix::count() const {
    return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [](std::uint8_t c) { return c != 0; }));
}

namespace {

int table_degree(std::span<const GradedQuotient> a, std::span<const GradedQuotient> b) {
    int cap = 0;
    for (const auto& q : a) {
        cap = std::max(cap, q.ideal().max_degree());
    }
    for (const auto& q : b) {
        cap = std::max(cap, q.ideal().max_degree());
    }
    return cap;
}

} // namespace

IsoMatrix pairwise_iso_matrix_serial(std::span<const GradedQuotient> a, std::span<const GradedQuotient> b) {
    IsoMatrix out{a.size(), b.size(), std::vector<std::uint8_t>(a.size() * b.size(), 0)};
    const SubstitutionTable table(table_degree(a, b));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out.cells[i * b.size() + j] = find_graded_iso(a[i], b[j], table).has_value() ? 1 : 0;
        }
    }
    return out;
}

IsoMatrix pairwise_iso_matrix(std::span<const GradedQuotient> a, std::span<const GradedQuotient> b, int jobs) {
    IsoMatrix out{a.size(), b.size(), std::vector<std::uint8_t>(a.size() * b.size(), 0)};
    const SubstitutionTable table(table_degree(a, b));
    const auto total = static_cast<std::ptrdiff_t>(a.size() * b.size());
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::ptrdiff_t cell = 0; cell < total; ++cell) {
        const auto i = static_cast<std::size_t>(cell) / b.size();
        const auto j = static_cast<std::size_t>(cell) % b.size();
        out.cells[static_cast<std::size_t>(cell)] = find_graded_iso(a[i], b[j], table).has_value() ? 1 : 0;
    }
    return out;
}

} // namespace rigidity::cohomology
