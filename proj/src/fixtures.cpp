#include "rigidity/fixtures.hpp"

#include "rigidity/cohomology.hpp"
#include "rigidity/error.hpp"
#include "rigidity/gf2.hpp"

#include <algorithm>
#include <fstream>

namespace rigidity::fixtures {

using nlohmann::json;

namespace {

json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot open fixture file " + path.string());
    }
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw InvalidInput("malformed fixture file " + path.string() + ": " + e.what());
    }
}

const std::array<std::string, 7> kColumns = {"x", "y", "z", "x+y", "x+z", "y+z", "x+y+z"};

} // namespace

const NamedBlock* PaperPolytope::find(const std::string& name) const {
    auto it = std::find_if(blocks.begin(), blocks.end(), [&](const NamedBlock& b) { return b.name == name; });
    return it == blocks.end() ? nullptr : &*it;
}

const PaperPolytope* PaperFixtures::find_polytope(const std::string& key) const {
    auto it = std::find_if(polytopes.begin(), polytopes.end(), [&](const PaperPolytope& p) { return p.key == key; });
    return it == polytopes.end() ? nullptr : &*it;
}

const PaperPolytope* PaperFixtures::find_by_weights(const gale::Weights& weights) const {
    auto it = std::find_if(polytopes.begin(), polytopes.end(),
                           [&](const PaperPolytope& p) { return p.weights == weights; });
    return it == polytopes.end() ? nullptr : &*it;
}

PaperFixtures load_fixtures(const std::filesystem::path& dir) {
    PaperFixtures out;
    const json matrices = read_json(dir / "paper_matrices.json");
    for (const auto& [key, value] : matrices.items()) {
        PaperPolytope p;
        p.key = key;
        p.weights = value.at("weights").get<gale::Weights>();
        p.facet_order = value.at("facet_order").get<std::vector<std::string>>();
        for (const auto& b : value.at("blocks")) {
            const auto rows = b.at("rows").get<std::vector<std::string>>();
            p.blocks.push_back({b.at("name").get<std::string>(), charmat::block_from_rows(rows)});
        }
        out.polytopes.push_back(std::move(p));
    }

    const json ideals = read_json(dir / "paper_ideals.json");
    for (const auto& [key, value] : ideals.items()) {
        if (!value.is_object()) {
            continue;  // "variables"
        }
        IdealTable table;
        table.name = key;
        table.polytope = value.at("polytope").get<std::string>();
        for (const auto& row : value.at("rows")) {
            table.rows.push_back({row.at("matrices").get<std::vector<std::string>>(),
                                  row.at("generators").get<std::vector<std::string>>()});
        }
        out.ideals.push_back(std::move(table));
    }

    const json profiles = read_json(dir / "paper_profiles.json");
    if (profiles.at("columns").get<std::vector<std::string>>() !=
        std::vector<std::string>(kColumns.begin(), kColumns.end())) {
        throw InvalidInput("profile fixture columns are not x, y, z, x+y, x+z, y+z, x+y+z");
    }
    for (const auto& [key, value] : profiles.items()) {
        if (!value.is_object()) {
            continue;
        }
        ProfileTable table;
        table.name = key;
        table.polytope = value.at("polytope").get<std::string>();
        table.is_codim = key.rfind("codim", 0) == 0;
        for (const auto& row : value.at("rows")) {
            table.rows.push_back({row.at("matrix").get<std::string>(), row.at("values").get<std::array<int, 7>>()});
        }
        out.profiles.push_back(std::move(table));
    }
    return out;
}

bool MatrixComparison::ok() const {
    return missing.empty() &&
           std::all_of(extras.begin(), extras.end(), [](const ExtraBlock& e) { return !e.target.empty(); });
}

MatrixComparison compare_matrices(const PaperPolytope& paper, const std::vector<charmat::Block>& computed,
                                  const gale::FaceStructure& faces) {
    MatrixComparison out;
    out.computed = computed.size();
    out.listed = paper.blocks.size();
    for (const auto& named : paper.blocks) {
        if (std::find(computed.begin(), computed.end(), named.block) == computed.end()) {
            out.missing.push_back(named.name);
        }
    }
    std::vector<charmat::Permutation> automorphisms;
    bool searched = false;
    for (const auto& block : computed) {
        const bool listed = std::any_of(paper.blocks.begin(), paper.blocks.end(),
                                        [&](const NamedBlock& nb) { return nb.block == block; });
        if (listed) {
            continue;
        }
        if (!searched) {
            automorphisms = charmat::face_automorphisms(faces);
            searched = true;
        }
        ExtraBlock extra{block, {}, {}};
        for (const auto& perm : automorphisms) {
            const auto image = charmat::apply_automorphism(block, faces, perm);
            auto hit = std::find_if(paper.blocks.begin(), paper.blocks.end(),
                                    [&](const NamedBlock& nb) { return nb.block == image; });
            if (hit != paper.blocks.end()) {
                extra.automorphism = perm;
                extra.target = hit->name;
                break;
            }
        }
        out.extras.push_back(std::move(extra));
    }
    return out;
}

std::string to_string(CellStatus status) {
    switch (status) {
    case CellStatus::match:
        return "match";
    case CellStatus::mismatch:
        return "mismatch";
    case CellStatus::unparseable:
        return "unparseable";
    }
    return "unknown";
}

namespace {

cohomology::GradedQuotient quotient_for(const PaperPolytope& paper, const std::string& name,
                                        const gale::FaceStructure& faces) {
    const NamedBlock* nb = paper.find(name);
    if (nb == nullptr) {
        throw InvalidInput("fixture references unknown matrix " + name);
    }
    return cohomology::quotient_presentation(faces, charmat::CharMatrixZ2::with_identity_prefix(faces.n, nb->block));
}

} // namespace

std::vector<IdealRowCheck> check_ideal_table(const IdealTable& table, const PaperPolytope& paper,
                                             const gale::FaceStructure& faces) {
    std::vector<IdealRowCheck> out;
    for (const auto& row : table.rows) {
        IdealRowCheck check;
        check.matrices = row.matrices;
        std::vector<gf2::Polynomial> gens;
        try {
            for (const auto& g : row.generators) {
                gens.push_back(gf2::parse_polynomial(g));
            }
        } catch (const InvalidInput& e) {
            check.status = CellStatus::unparseable;
            check.detail = e.what();
        }
        for (const auto& name : row.matrices) {
            const auto q = quotient_for(paper, name, faces);
            if (check.status == CellStatus::unparseable) {
                // Show what the row should have said.
                const auto mat = charmat::CharMatrixZ2::with_identity_prefix(faces.n, paper.find(name)->block);
                std::vector<std::string> gens;
                for (const auto& p : cohomology::ideal_generators(faces, mat)) {
                    gens.push_back(gf2::to_string(p));
                }
                check.computed.emplace_back(name, std::move(gens));
                continue;
            }
            if (!cohomology::ideal_equal(gens, q)) {
                check.status = CellStatus::mismatch;
                check.detail += (check.detail.empty() ? "" : ", ") + name;
            }
        }
        out.push_back(std::move(check));
    }
    return out;
}

std::vector<Discrepancy> compare_profiles(const ProfileTable& table, const PaperPolytope& paper,
                                          const gale::FaceStructure& faces) {
    std::vector<Discrepancy> out;
    for (const auto& row : table.rows) {
        const auto q = quotient_for(paper, row.matrix, faces);
        for (std::size_t c = 0; c < cohomology::kLinearForms.size(); ++c) {
            const auto form = cohomology::kLinearForms[c];
            const int computed = table.is_codim ? cohomology::codim(form, q) : cohomology::ord(form, q);
            if (computed == row.values[c]) {
                continue;
            }
            const int alternate =
                table.is_codim ? cohomology::codim_by_enumeration(form, q) : cohomology::ord_by_reduction(form, q);
            out.push_back({table.name, row.matrix, kColumns[c], row.values[c], computed, alternate});
        }
    }
    return out;
}

json to_json(const Discrepancy& d) {
    return json{{"table", d.table},
                {"row", d.row},
                {"column", d.column},
                {"paper_value", d.paper_value},
                {"computed_value", d.computed_value}};
}

} // namespace rigidity::fixtures
