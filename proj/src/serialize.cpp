#include "rigidity/serialize.hpp"

#include "rigidity/error.hpp"

#include <algorithm>
#include <set>

namespace rigidity::serialize {

json to_json(const gale::GaleDiagram& diagram) {
    return json{{"k", diagram.k()}, {"weights", diagram.weights()}};
}

gale::GaleDiagram diagram_from_json(const json& j) {
    gale::GaleDiagram diagram(j.at("weights").get<gale::Weights>());
    if (j.contains("k") && j.at("k").get<int>() != diagram.k()) {
        throw InvalidInput("diagram k does not match the weight count");
    }
    return diagram;
}

namespace {

json sorted_sets(const std::vector<gale::FacetSet>& sets) {
    std::vector<std::vector<int>> lists;
    for (auto s : sets) {
        auto l = gale::members(s);
        for (auto& i : l) {
            ++i;
        }
        lists.push_back(std::move(l));
    }
    std::sort(lists.begin(), lists.end());
    return lists;
}

} // namespace

json to_json(const gale::FaceStructure& faces) {
    return json{{"m", faces.m},
                {"n", faces.n},
                {"minimal_nonfaces", sorted_sets(faces.minimal_nonfaces)},
                {"maximal_faces", sorted_sets(faces.maximal_faces)}};
}

json to_json(const torbetti::BettiTable& table) {
    json entries = json::array();
    for (const auto& [key, beta] : table.entries()) {
        entries.push_back(json{{"i", -key.first}, {"2j", key.second}, {"beta", beta}});
    }
    return json{{"entries", entries}};
}

json weights_list_to_json(std::vector<gale::Weights> list) {
    std::sort(list.begin(), list.end());
    return list;
}

json block_to_json(const charmat::Block& block, int n) { return charmat::block_rows(block, n); }

charmat::Block block_from_json(const json& j) {
    const auto rows = j.get<std::vector<std::string>>();
    return charmat::block_from_rows(rows);
}

json to_json(const gf2::Polynomial& p) {
    json out = json::array();
    for (const auto& m : p.terms()) {
        json exps = json::array();
        for (std::size_t v = 0; v < p.nvars(); ++v) {
            exps.push_back(m.exponents[v]);
        }
        out.push_back(std::move(exps));
    }
    return out;
}

gf2::Polynomial polynomial_from_json(const json& j, std::size_t nvars) {
    std::vector<gf2::Monomial> terms;
    for (const auto& exps : j) {
        const auto values = exps.get<std::vector<int>>();
        if (values.size() != nvars) {
            throw InvalidInput("exponent vector has the wrong length");
        }
        gf2::Monomial m;
        for (std::size_t v = 0; v < nvars; ++v) {
            if (values[v] < 0 || values[v] > 255) {
                throw InvalidInput("exponent out of range");
            }
            m.exponents[v] = static_cast<std::uint8_t>(values[v]);
        }
        terms.push_back(m);
    }
    if (terms.size() != std::set<gf2::Monomial>(terms.begin(), terms.end()).size()) {
        throw InvalidInput("repeated monomial in serialized polynomial");
    }
    return gf2::Polynomial::from_terms(nvars, std::move(terms));
}

json to_json(const cohomology::GradedQuotient& quotient) {
    json ideal = json::object();
    for (int d = 0; d <= quotient.ideal().max_degree(); ++d) {
        json rows = json::array();
        for (const auto& p : quotient.ideal().basis_polynomials(d)) {
            rows.push_back(to_json(p));
        }
        ideal[std::to_string(d)] = std::move(rows);
    }
    return json{{"hilbert", quotient.hilbert()}, {"ideal", std::move(ideal)}};
}

cohomology::GradedQuotient quotient_from_json(const json& j) {
    const auto hilbert = j.at("hilbert").get<std::vector<int>>();
    if (hilbert.size() < 2) {
        throw InvalidInput("hilbert vector too short");
    }
    const int n = static_cast<int>(hilbert.size()) - 1;
    const auto& ideal = j.at("ideal");
    gf2::GradedSubspace space(3, n + 1);
    for (int d = 0; d <= n + 1; ++d) {
        const auto key = std::to_string(d);
        if (!ideal.contains(key)) {
            throw InvalidInput("serialized ideal is missing degree " + key);
        }
        const auto& rows = ideal.at(key);
        for (const auto& row : rows) {
            const auto p = polynomial_from_json(row, 3);
            if (p.is_zero() || p.degree() != d || !p.is_homogeneous()) {
                throw InvalidInput("serialized ideal row has the wrong degree");
            }
            if (!space.insert(p)) {
                throw InvalidInput("serialized ideal rows are linearly dependent");
            }
        }
        // Stored rows are already reduced; anything else means the file was edited.
        if (space.basis_polynomials(d).size() != rows.size()) {
            throw InvalidInput("serialized ideal dimension mismatch");
        }
        const auto stored = space.basis_polynomials(d);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (to_json(stored[r]) != rows[r]) {
                throw InvalidInput("serialized ideal rows are not in reduced echelon form");
            }
        }
    }
    cohomology::GradedQuotient quotient(n, std::move(space));
    if (quotient.hilbert() != hilbert) {
        throw InvalidInput("stored hilbert vector disagrees with the ideal");
    }
    return quotient;
}

json to_json(const cohomology::InvariantProfile& profile) {
    return json{{"codim", profile.codim}, {"ord", profile.ord}};
}

} // namespace rigidity::serialize
