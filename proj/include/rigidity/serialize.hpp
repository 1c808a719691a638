#pragma once

// JSON forms of the library's values. Facet indices are written 1-based; polynomials
// are arrays of exponent vectors in descending graded-lex order; matrix blocks are
// arrays of row bit-strings.

#include "rigidity/charmat.hpp"
#include "rigidity/cohomology.hpp"
#include "rigidity/gale.hpp"
#include "rigidity/gf2.hpp"
#include "rigidity/torbetti.hpp"

#include <json.hpp>

#include <vector>

namespace rigidity::serialize {

using nlohmann::json;

json to_json(const gale::GaleDiagram& diagram);
gale::GaleDiagram diagram_from_json(const json& j);

json to_json(const gale::FaceStructure& faces);

json to_json(const torbetti::BettiTable& table);

/// Sorted array of weight arrays.
json weights_list_to_json(std::vector<gale::Weights> list);

json block_to_json(const charmat::Block& block, int n);
charmat::Block block_from_json(const json& j);

json to_json(const gf2::Polynomial& p);
gf2::Polynomial polynomial_from_json(const json& j, std::size_t nvars);

/// {"hilbert": [...], "ideal": {"<degree>": [polynomial, ...]}} with the echelon basis
/// of each degree 0..n+1 (empty degrees included).
json to_json(const cohomology::GradedQuotient& quotient);
/// Rebuilds the ideal from the stored rows and re-checks every quotient invariant;
/// throws on inconsistent data.
cohomology::GradedQuotient quotient_from_json(const json& j);

/// {"codim": [7 ints], "ord": [7 ints]} in the column order x, y, z, x+y, x+z, y+z, x+y+z.
json to_json(const cohomology::InvariantProfile& profile);

} // namespace rigidity::serialize
