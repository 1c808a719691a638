#include "rigidity/gf2.hpp"

#include "rigidity/error.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>

namespace rigidity::gf2 {

// ---------------------------------------------------------------- BitVector

BitVector::BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

void BitVector::set(std::size_t i, bool value) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value) {
        words_[i >> 6] |= mask;
    } else {
        words_[i >> 6] &= ~mask;
    }
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (other.size_ != size_) {
        throw InvalidInput("BitVector size mismatch");
    }
    for (std::size_t w = 0; w < words_.size(); ++w) {
        words_[w] ^= other.words_[w];
    }
    return *this;
}

bool BitVector::any() const {
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t BitVector::count() const {
    std::size_t total = 0;
    for (auto w : words_) {
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

std::optional<std::size_t> BitVector::first_set() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] != 0) {
            return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- BitMatrix

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows, std::size_t cols) {
    for (const auto& r : rows) {
        if (r.size() != cols) {
            throw InvalidInput("row length does not match column count");
        }
    }
    BitMatrix m;
    m.cols_ = cols;
    m.rows_ = std::move(rows);
    return m;
}

BitMatrix BitMatrix::from_strings(std::span<const std::string> rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    BitMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) {
            throw InvalidInput("ragged bit-string matrix");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            if (rows[r][c] == '1') {
                m.set(r, c);
            } else if (rows[r][c] != '0') {
                throw InvalidInput("bit strings may only contain 0 and 1");
            }
        }
    }
    return m;
}

RrefResult rref(BitMatrix matrix) {
    RrefResult out;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < matrix.cols() && lead < matrix.rows(); ++c) {
        std::size_t r = lead;
        while (r < matrix.rows() && !matrix.get(r, c)) {
            ++r;
        }
        if (r == matrix.rows()) {
            continue;
        }
        matrix.swap_rows(r, lead);
        for (std::size_t other = 0; other < matrix.rows(); ++other) {
            if (other != lead && matrix.get(other, c)) {
                matrix.add_row(lead, other);
            }
        }
        out.pivots.push_back(c);
        ++lead;
    }
    out.rank = lead;
    out.reduced = std::move(matrix);
    return out;
}

std::size_t rank(BitMatrix matrix) { return rref(std::move(matrix)).rank; }

// ---------------------------------------------------------------- Monomial

int Monomial::degree() const {
    return std::accumulate(exponents.begin(), exponents.end(), 0);
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        const int e = exponents[i] + other.exponents[i];
        if (e > 255) {
            throw OutOfRange("monomial exponent overflow");
        }
        out.exponents[i] = static_cast<std::uint8_t>(e);
    }
    return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) {
        return c;
    }
    return a.exponents <=> b.exponents;
}

// ---------------------------------------------------------------- Polynomial

namespace {

void check_nvars(std::size_t nvars) {
    if (nvars == 0 || nvars > kMaxVars) {
        throw UnsupportedShape("polynomial rings need between 1 and 8 variables");
    }
}

// Sort descending and cancel pairs.
std::vector<Monomial> normalize_terms(std::vector<Monomial> terms) {
    std::sort(terms.begin(), terms.end(), std::greater<>());
    std::vector<Monomial> out;
    out.reserve(terms.size());
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i;
        while (j < terms.size() && terms[j] == terms[i]) {
            ++j;
        }
        if ((j - i) % 2 == 1) {
            out.push_back(terms[i]);
        }
        i = j;
    }
    return out;
}

} // namespace

Polynomial::Polynomial(std::size_t nvars) : nvars_(nvars) { check_nvars(nvars); }

Polynomial Polynomial::one(std::size_t nvars) { return from_monomial(nvars, Monomial{}); }

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
    if (index >= nvars) {
        throw OutOfRange("variable index out of range");
    }
    Monomial m;
    m.exponents[index] = 1;
    return from_monomial(nvars, m);
}

Polynomial Polynomial::from_monomial(std::size_t nvars, const Monomial& m) {
    Polynomial p(nvars);
    for (std::size_t i = nvars; i < kMaxVars; ++i) {
        if (m.exponents[i] != 0) {
            throw OutOfRange("monomial uses a variable outside the ring");
        }
    }
    p.terms_.push_back(m);
    return p;
}

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Monomial> terms) {
    Polynomial p(nvars);
    for (const auto& m : terms) {
        for (std::size_t i = nvars; i < kMaxVars; ++i) {
            if (m.exponents[i] != 0) {
                throw OutOfRange("monomial uses a variable outside the ring");
            }
        }
    }
    p.terms_ = normalize_terms(std::move(terms));
    return p;
}

int Polynomial::degree() const { return terms_.empty() ? -1 : terms_.front().degree(); }

bool Polynomial::is_homogeneous() const {
    return terms_.empty() || terms_.front().degree() == terms_.back().degree();
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (other.nvars_ != nvars_) {
        throw InvalidInput("adding polynomials from different rings");
    }
    std::vector<Monomial> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(), other.terms_.end(),
                                  std::back_inserter(merged), std::greater<>());
    terms_ = std::move(merged);
    return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.nvars_ != rhs.nvars_) {
        throw InvalidInput("multiplying polynomials from different rings");
    }
    std::vector<Monomial> products;
    products.reserve(lhs.terms_.size() * rhs.terms_.size());
    for (const auto& a : lhs.terms_) {
        for (const auto& b : rhs.terms_) {
            products.push_back(a * b);
        }
    }
    Polynomial out(lhs.nvars_);
    out.terms_ = normalize_terms(std::move(products));
    return out;
}

Polynomial poly_multiply(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial power(const Polynomial& p, int exponent) {
    if (exponent < 0) {
        throw InvalidInput("negative exponent");
    }
    Polynomial out = Polynomial::one(p.nvars());
    for (int i = 0; i < exponent; ++i) {
        out = out * p;
    }
    return out;
}

Polynomial substitute_linear(const Polynomial& p, std::span<const Polynomial> images) {
    if (images.size() != p.nvars()) {
        throw InvalidInput("substitution needs one image per variable");
    }
    const std::size_t target = images.front().nvars();
    for (const auto& img : images) {
        if (img.nvars() != target) {
            throw InvalidInput("substitution images live in different rings");
        }
    }
    // Cache powers of each image; exponents are small.
    std::vector<std::vector<Polynomial>> powers(images.size());
    Polynomial out(target);
    for (const auto& m : p.terms()) {
        Polynomial term = Polynomial::one(target);
        for (std::size_t v = 0; v < images.size(); ++v) {
            const std::size_t e = m.exponents[v];
            auto& cache = powers[v];
            if (cache.empty()) {
                cache.push_back(Polynomial::one(target));
            }
            while (cache.size() <= e) {
                cache.push_back(cache.back() * images[v]);
            }
            if (e > 0) {
                term = term * cache[e];
            }
        }
        out += term;
    }
    return out;
}

Polynomial parse_polynomial(std::string_view text, std::string_view variables) {
    const std::size_t nvars = variables.size();
    check_nvars(nvars);
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            s.push_back(ch);
        }
    }
    if (s.empty()) {
        throw InvalidInput("empty polynomial");
    }
    std::vector<Monomial> terms;
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) {
        throw InvalidInput("cannot parse '" + std::string(text) + "': " + why);
    };
    while (true) {
        Monomial m;
        bool saw_factor = false;
        if (pos < s.size() && s[pos] == '0') {
            ++pos;
            saw_factor = true;
            if (pos < s.size() && s[pos] != '+') {
                fail("stray characters after 0");
            }
            // zero term contributes nothing
            if (pos >= s.size()) {
                break;
            }
            ++pos;
            continue;
        }
        if (pos < s.size() && s[pos] == '1') {
            ++pos;
            saw_factor = true;
        }
        while (pos < s.size() && s[pos] != '+') {
            const auto var = variables.find(s[pos]);
            if (var == std::string_view::npos) {
                fail(std::string("unknown symbol '") + s[pos] + "'");
            }
            ++pos;
            int exponent = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                const bool braced = pos < s.size() && s[pos] == '{';
                if (braced) {
                    ++pos;
                }
                const std::size_t start = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                    ++pos;
                }
                if (pos == start) {
                    fail("exponent must be a non-negative integer");
                }
                exponent = std::stoi(s.substr(start, pos - start));
                if (braced) {
                    if (pos >= s.size() || s[pos] != '}') {
                        fail("unterminated brace");
                    }
                    ++pos;
                }
            }
            const int e = m.exponents[var] + exponent;
            if (e > 255) {
                fail("exponent too large");
            }
            m.exponents[var] = static_cast<std::uint8_t>(e);
            saw_factor = true;
        }
        if (!saw_factor) {
            fail("empty term");
        }
        terms.push_back(m);
        if (pos >= s.size()) {
            break;
        }
        ++pos;  // '+'
        if (pos >= s.size()) {
            fail("trailing '+'");
        }
    }
    return Polynomial::from_terms(nvars, std::move(terms));
}

std::string to_string(const Polynomial& p, std::string_view variables) {
    if (variables.size() < p.nvars()) {
        throw InvalidInput("not enough variable names");
    }
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    for (const auto& m : p.terms()) {
        if (!out.empty()) {
            out += '+';
        }
        if (m.degree() == 0) {
            out += '1';
            continue;
        }
        for (std::size_t v = 0; v < p.nvars(); ++v) {
            if (m.exponents[v] == 0) {
                continue;
            }
            out += variables[v];
            if (m.exponents[v] > 1) {
                out += '^' + std::to_string(m.exponents[v]);
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------- MonomialBasis

std::size_t monomial_count(std::size_t nvars, int degree) {
    if (nvars == 0 || degree < 0) {
        throw InvalidInput("monomial_count needs nvars >= 1 and degree >= 0");
    }
    // C(degree + nvars - 1, nvars - 1)
    std::size_t result = 1;
    for (std::size_t i = 1; i < nvars; ++i) {
        result = result * (static_cast<std::size_t>(degree) + i) / i;
    }
    return result;
}

namespace {

void enumerate_monomials(std::size_t var, std::size_t nvars, int remaining, Monomial& current,
                         std::vector<Monomial>& out) {
    if (var + 1 == nvars) {
        current.exponents[var] = static_cast<std::uint8_t>(remaining);
        out.push_back(current);
        current.exponents[var] = 0;
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        current.exponents[var] = static_cast<std::uint8_t>(e);
        enumerate_monomials(var + 1, nvars, remaining - e, current, out);
    }
    current.exponents[var] = 0;
}

} // namespace

MonomialBasis::MonomialBasis(std::size_t nvars, int degree) : nvars_(nvars), degree_(degree) {
    check_nvars(nvars);
    if (degree < 0 || degree > 255) {
        throw OutOfRange("monomial degree out of range");
    }
    Monomial current;
    monomials_.reserve(monomial_count(nvars, degree));
    enumerate_monomials(0, nvars, degree, current, monomials_);
}

std::size_t MonomialBasis::index_of(const Monomial& m) const {
    auto it = std::lower_bound(monomials_.begin(), monomials_.end(), m, std::greater<>());
    if (it == monomials_.end() || *it != m) {
        throw OutOfRange("monomial not in basis");
    }
    return static_cast<std::size_t>(it - monomials_.begin());
}

BitVector MonomialBasis::to_vector(const Polynomial& p) const {
    if (p.nvars() != nvars_) {
        throw InvalidInput("polynomial ring does not match basis");
    }
    BitVector v(size());
    for (const auto& m : p.terms()) {
        if (m.degree() != degree_) {
            throw InvalidInput("polynomial is not homogeneous of the basis degree");
        }
        v.set(index_of(m));
    }
    return v;
}

Polynomial MonomialBasis::to_polynomial(const BitVector& v) const {
    std::vector<Monomial> terms;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v.test(i)) {
            terms.push_back(monomials_[i]);
        }
    }
    return Polynomial::from_terms(nvars_, std::move(terms));
}

// ---------------------------------------------------------------- GradedSubspace

GradedSubspace::GradedSubspace(std::size_t nvars, int max_degree) : nvars_(nvars) {
    if (max_degree < 0) {
        throw InvalidInput("max_degree must be non-negative");
    }
    components_.reserve(static_cast<std::size_t>(max_degree) + 1);
    for (int d = 0; d <= max_degree; ++d) {
        components_.push_back(Component{MonomialBasis(nvars, d), {}, {}});
    }
}

GradedSubspace GradedSubspace::ideal_closure(std::span<const Polynomial> generators, std::size_t nvars,
                                             int max_degree) {
    GradedSubspace space(nvars, max_degree);
    for (const auto& g : generators) {
        if (g.nvars() != nvars) {
            throw InvalidInput("generator ring does not match");
        }
        if (!g.is_homogeneous()) {
            throw InvalidInput("generator is not homogeneous");
        }
    }
    for (int d = 0; d <= max_degree; ++d) {
        for (const auto& g : generators) {
            if (g.is_zero() || g.degree() > d) {
                continue;
            }
            const MonomialBasis multipliers(nvars, d - g.degree());
            for (const auto& u : multipliers.monomials()) {
                space.insert(Polynomial::from_monomial(nvars, u) * g);
            }
        }
    }
    return space;
}

const GradedSubspace::Component& GradedSubspace::component(int degree) const {
    if (degree < 0 || degree > max_degree()) {
        throw OutOfRange("degree " + std::to_string(degree) + " outside 0.." + std::to_string(max_degree()));
    }
    return components_[static_cast<std::size_t>(degree)];
}

std::size_t GradedSubspace::dimension(int degree) const { return component(degree).rows.size(); }
const MonomialBasis& GradedSubspace::basis(int degree) const { return component(degree).basis; }
const std::vector<BitVector>& GradedSubspace::echelon_rows(int degree) const { return component(degree).rows; }
const std::vector<std::size_t>& GradedSubspace::pivots(int degree) const { return component(degree).pivots; }

std::vector<Polynomial> GradedSubspace::basis_polynomials(int degree) const {
    const auto& c = component(degree);
    std::vector<Polynomial> out;
    out.reserve(c.rows.size());
    for (const auto& r : c.rows) {
        out.push_back(c.basis.to_polynomial(r));
    }
    return out;
}

BitVector GradedSubspace::reduce(BitVector v, int degree) const {
    const auto& c = component(degree);
    for (std::size_t i = 0; i < c.rows.size(); ++i) {
        if (v.test(c.pivots[i])) {
            v ^= c.rows[i];
        }
    }
    return v;
}

bool GradedSubspace::insert_vector(BitVector v, int degree) {
    auto& c = components_[static_cast<std::size_t>(degree)];
    v = reduce(std::move(v), degree);
    const auto pivot = v.first_set();
    if (!pivot) {
        return false;
    }
    for (auto& r : c.rows) {
        if (r.test(*pivot)) {
            r ^= v;
        }
    }
    const auto at = std::lower_bound(c.pivots.begin(), c.pivots.end(), *pivot);
    const auto offset = at - c.pivots.begin();
    c.pivots.insert(at, *pivot);
    c.rows.insert(c.rows.begin() + offset, std::move(v));
    return true;
}

bool GradedSubspace::insert(const Polynomial& p) {
    if (p.is_zero()) {
        return false;
    }
    if (!p.is_homogeneous()) {
        throw InvalidInput("only homogeneous elements can be inserted");
    }
    const int d = p.degree();
    return insert_vector(component(d).basis.to_vector(p), d);
}

bool GradedSubspace::contains(const Polynomial& p) const {
    if (p.nvars() != nvars_) {
        throw InvalidInput("polynomial ring does not match subspace");
    }
    if (p.is_zero()) {
        return true;
    }
    if (p.degree() > max_degree()) {
        throw OutOfRange("polynomial degree exceeds the subspace cap");
    }
    // Split into homogeneous components.
    std::vector<std::vector<Monomial>> parts(static_cast<std::size_t>(max_degree()) + 1);
    for (const auto& m : p.terms()) {
        parts[static_cast<std::size_t>(m.degree())].push_back(m);
    }
    for (int d = 0; d <= max_degree(); ++d) {
        auto& part = parts[static_cast<std::size_t>(d)];
        if (part.empty()) {
            continue;
        }
        const auto q = Polynomial::from_terms(nvars_, std::move(part));
        if (reduce(component(d).basis.to_vector(q), d).any()) {
            return false;
        }
    }
    return true;
}

bool subspace_equal(const GradedSubspace& a, const GradedSubspace& b) {
    if (a.nvars_ != b.nvars_ || a.max_degree() != b.max_degree()) {
        return false;
    }
    for (int d = 0; d <= a.max_degree(); ++d) {
        if (a.dimension(d) != b.dimension(d)) {
            return false;
        }
        for (const auto& r : a.echelon_rows(d)) {
            if (b.reduce(r, d).any()) {
                return false;
            }
        }
        for (const auto& r : b.echelon_rows(d)) {
            if (a.reduce(r, d).any()) {
                return false;
            }
        }
    }
    return true;
}

} // namespace rigidity::gf2
