#pragma once

// Bigraded Betti numbers of n+3-facet polytopes and what they determine: the
// Tor-algebra up to isomorphism and the sphere-product splitting of the
// moment-angle manifold.

#include "rigidity/gale.hpp"

#include <map>
#include <utility>
#include <vector>

namespace rigidity::torbetti {

/// Cyclic sums a_i + ... + a_{i+len-1}, i = 1..2k+1.
std::vector<int> window_sums(const gale::Weights& weights, int len);

/// The 2k+1 length-k window sums, sorted ascending.
std::vector<int> adjacent_sum_multiset(const gale::Weights& weights);

/// j -> beta^{-1,2j}: how many length-k windows sum to j.
std::map<int, int> beta_first_row(const gale::GaleDiagram& diagram);

class BettiTable {
  public:
    BettiTable(int m, int n) : m_(m), n_(n) {}

    int m() const { return m_; }
    int n() const { return n_; }
    /// beta^{-i, two_j}; zero when absent.
    int beta(int i, int two_j) const;
    void set(int i, int two_j, int value);
    /// (i, 2j) -> beta, nonzero entries only.
    const std::map<std::pair<int, int>, int>& entries() const { return entries_; }

    friend bool operator==(const BettiTable&, const BettiTable&) = default;

  private:
    int m_;
    int n_;
    std::map<std::pair<int, int>, int> entries_;
};

/// Rows 0 and 3 are the unit entries, row 1 comes from the window sums, row 2 from
/// beta^{-2,2j} = beta^{-1,2(m-j)}.
BettiTable betti_table(const gale::GaleDiagram& diagram);

/// Pentagon diagrams only: equal adjacent-sum multisets.
bool tor_equivalent(const gale::Weights& a, const gale::Weights& b);

/// One S^p x S^q summand per minimal non-face e: p = 2|e| - 1, q = m + n - p, stored
/// with p <= q and sorted. Throws std::logic_error if the additive Betti numbers of
/// the connected sum disagree with the Betti table.
std::vector<std::pair<int, int>> sphere_product_decomposition(const gale::GaleDiagram& diagram);

/// Ranks of H^d(Z_P) for d = 0..m+n, read off the Betti table by total degree 2j - i.
std::vector<int> additive_betti(const BettiTable& table);

/// Quasitoric manifolds exist over a diagram on the (2k+1)-gon iff k <= 3.
bool supports_quasitoric(int k);

} // namespace rigidity::torbetti
