#include "rigidity/torbetti.hpp"

#include "rigidity/error.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace rigidity::torbetti {

std::vector<int> window_sums(const gale::Weights& weights, int len) {
    const std::size_t count = weights.size();
    std::vector<int> out(count, 0);
    for (std::size_t i = 0; i < count; ++i) {
        for (int j = 0; j < len; ++j) {
            out[i] += weights[(i + static_cast<std::size_t>(j)) % count];
        }
    }
    return out;
}

std::vector<int> adjacent_sum_multiset(const gale::Weights& weights) {
    const gale::GaleDiagram diagram(weights);
    auto sums = window_sums(weights, diagram.k());
    std::sort(sums.begin(), sums.end());
    return sums;
}

std::map<int, int> beta_first_row(const gale::GaleDiagram& diagram) {
    std::map<int, int> row;
    for (int s : window_sums(diagram.weights(), diagram.k())) {
        ++row[s];
    }
    return row;
}

int BettiTable::beta(int i, int two_j) const {
    auto it = entries_.find({i, two_j});
    return it == entries_.end() ? 0 : it->second;
}

void BettiTable::set(int i, int two_j, int value) {
    if (value == 0) {
        entries_.erase({i, two_j});
    } else {
        entries_[{i, two_j}] = value;
    }
}

BettiTable betti_table(const gale::GaleDiagram& diagram) {
    const int m = diagram.m();
    const int n = diagram.n();
    if (m - n != 3) {
        throw UnsupportedShape("Betti tables are implemented for m - n = 3 only");
    }
    BettiTable table(m, n);
    table.set(0, 0, 1);
    table.set(3, 2 * m, 1);
    for (auto [j, count] : beta_first_row(diagram)) {
        table.set(1, 2 * j, table.beta(1, 2 * j) + count);
        table.set(2, 2 * (m - j), table.beta(2, 2 * (m - j)) + count);
    }
    return table;
}

bool tor_equivalent(const gale::Weights& a, const gale::Weights& b) {
    if (a.size() != 5 || b.size() != 5) {
        throw UnsupportedShape("Tor comparison by adjacent sums is for pentagon diagrams");
    }
    return adjacent_sum_multiset(a) == adjacent_sum_multiset(b);
}

std::vector<int> additive_betti(const BettiTable& table) {
    const int top = table.m() + table.n();
    std::vector<int> ranks(static_cast<std::size_t>(top) + 1, 0);
    for (const auto& [key, value] : table.entries()) {
        const int degree = key.second - key.first;
        if (degree < 0 || degree > top) {
            throw std::logic_error("Betti entry outside the moment-angle dimension range");
        }
        ranks[static_cast<std::size_t>(degree)] += value;
    }
    return ranks;
}

std::vector<std::pair<int, int>> sphere_product_decomposition(const gale::GaleDiagram& diagram) {
    const int top = diagram.m() + diagram.n();
    const auto labeling = gale::sorted_labeling(diagram);
    std::vector<std::pair<int, int>> pairs;
    for (gale::FacetSet e : gale::minimal_nonfaces(diagram, labeling)) {
        const int p = 2 * std::popcount(e) - 1;
        const int q = top - p;
        pairs.emplace_back(std::min(p, q), std::max(p, q));
    }
    std::sort(pairs.begin(), pairs.end());

    std::vector<int> from_spheres(static_cast<std::size_t>(top) + 1, 0);
    from_spheres[0] = 1;
    from_spheres[static_cast<std::size_t>(top)] += 1;
    for (auto [p, q] : pairs) {
        ++from_spheres[static_cast<std::size_t>(p)];
        ++from_spheres[static_cast<std::size_t>(q)];
    }
    if (from_spheres != additive_betti(betti_table(diagram))) {
        throw std::logic_error("connected-sum Betti numbers disagree with the Betti table");
    }
    return pairs;
}

bool supports_quasitoric(int k) {
    if (k < 2) {
        throw InvalidInput("k must be at least 2");
    }
    return k <= 3;
}

} // namespace rigidity::torbetti
