#include "rigidity/report.hpp"

#include "rigidity/error.hpp"
#include "rigidity/petersen.hpp"
#include "rigidity/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

namespace rigidity::report {

using nlohmann::json;

std::string join_weights(const gale::Weights& w, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        out += (i == 0 ? "" : sep) + std::to_string(w[i]);
    }
    return out;
}

std::string cache_key(const gale::Weights& weights) { return join_weights(weights, "-"); }

std::vector<std::string> MemberData::facet_names() const {
    std::vector<std::string> out;
    for (int i = 0; i < faces.m; ++i) {
        out.push_back(labeling.name(i, diagram));
    }
    return out;
}

namespace {

void warn(const Options& options, const std::string& message) {
    if (options.warnings != nullptr) {
        *options.warnings << "warning: " << message << '\n';
    }
}

bool has_quotients(const gale::FaceStructure& faces) { return faces.m - faces.n == 3; }

std::vector<cohomology::GradedQuotient> build_quotients(const gale::FaceStructure& faces,
                                                        const std::vector<charmat::Block>& blocks) {
    std::vector<cohomology::GradedQuotient> out;
    if (!has_quotients(faces)) {
        return out;
    }
    out.reserve(blocks.size());
    for (const auto& b : blocks) {
        out.push_back(
            cohomology::quotient_presentation(faces, charmat::CharMatrixZ2::with_identity_prefix(faces.n, b)));
    }
    return out;
}

void write_atomically(const std::filesystem::path& path, const json& j) {
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) {
            throw std::runtime_error("cannot write cache file " + tmp);
        }
        out << j.dump(1) << '\n';
    }
    std::filesystem::rename(tmp, path);
}

std::optional<json> read_cache(const std::filesystem::path& path, const Options& options) {
    if (!std::filesystem::exists(path)) {
        return std::nullopt;
    }
    std::ifstream in(path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        warn(options, "cache file " + path.string() + " is not valid JSON, recomputing");
        return std::nullopt;
    }
}

// Validation throws on any inconsistency; callers turn that into a recompute.
std::vector<charmat::Block> charmats_from_cache(const json& j, const MemberData& member) {
    if (j.at("weights").get<gale::Weights>() != member.diagram.weights()) {
        throw InvalidInput("weights differ");
    }
    if (j.at("n").get<int>() != member.faces.n) {
        throw InvalidInput("dimension differs");
    }
    if (j.at("facet_order").get<std::vector<std::string>>() != member.facet_names()) {
        throw InvalidInput("facet order differs");
    }
    std::vector<charmat::Block> blocks;
    for (const auto& rows : j.at("blocks")) {
        auto block = serialize::block_from_json(rows);
        if (static_cast<int>(rows.size()) != member.faces.n ||
            static_cast<int>(block.size()) != member.faces.m - member.faces.n) {
            throw InvalidInput("block has the wrong shape");
        }
        const auto mat = charmat::CharMatrixZ2::with_identity_prefix(member.faces.n, block);
        if (!charmat::is_characteristic(mat, member.faces)) {
            throw InvalidInput("stored block is not characteristic");
        }
        if (!blocks.empty() && !(blocks.back() < block)) {
            throw InvalidInput("stored blocks are not strictly increasing");
        }
        blocks.push_back(std::move(block));
    }
    if (j.at("count").get<std::size_t>() != blocks.size()) {
        throw InvalidInput("block count differs");
    }
    return blocks;
}

std::vector<cohomology::GradedQuotient> quotients_from_cache(const json& j, const MemberData& member) {
    if (j.at("weights").get<gale::Weights>() != member.diagram.weights()) {
        throw InvalidInput("weights differ");
    }
    const auto& stored = j.at("quotients");
    if (stored.size() != member.blocks.size()) {
        throw InvalidInput("quotient count differs");
    }
    std::vector<cohomology::GradedQuotient> out;
    for (std::size_t i = 0; i < stored.size(); ++i) {
        auto q = serialize::quotient_from_json(stored[i]);
        if (q.n() != member.faces.n) {
            throw InvalidInput("quotient dimension differs");
        }
        if (static_cast<std::size_t>(q.total_dimension()) != member.faces.maximal_faces.size() ||
            !cohomology::poincare_nondegenerate(q)) {
            throw InvalidInput("quotient fails the duality checks");
        }
        const auto mat = charmat::CharMatrixZ2::with_identity_prefix(member.faces.n, member.blocks[i]);
        if (!cohomology::ideal_equal(cohomology::ideal_generators(member.faces, mat), q)) {
            throw InvalidInput("quotient does not belong to its matrix");
        }
        out.push_back(std::move(q));
    }
    return out;
}

} // namespace

MemberData build_member(const gale::Weights& weights, const Options& options) {
    gale::GaleDiagram diagram(gale::canonical_weights(weights));
    auto labeling = gale::default_labeling(diagram);
    auto faces = gale::face_structure(diagram, labeling);
    MemberData member{std::move(diagram), std::move(labeling), std::move(faces), {}, {}, false, false};

    std::optional<std::filesystem::path> charmat_path;
    std::optional<std::filesystem::path> quotient_path;
    if (options.cache_dir) {
        std::filesystem::create_directories(*options.cache_dir);
        const auto key = cache_key(member.diagram.weights());
        charmat_path = *options.cache_dir / ("charmats_" + key + ".json");
        quotient_path = *options.cache_dir / ("quotients_" + key + ".json");
    }

    if (charmat_path) {
        if (auto j = read_cache(*charmat_path, options)) {
            try {
                member.blocks = charmats_from_cache(*j, member);
                member.charmats_from_cache = true;
            } catch (const std::exception& e) {
                warn(options, "cache file " + charmat_path->string() + " rejected (" + e.what() + "), recomputing");
            }
        }
    }
    if (!member.charmats_from_cache) {
        member.blocks = charmat::enumerate_charmats(member.faces, options.jobs);
        if (charmat_path) {
            json blocks = json::array();
            for (const auto& b : member.blocks) {
                blocks.push_back(serialize::block_to_json(b, member.faces.n));
            }
            write_atomically(*charmat_path, json{{"weights", member.diagram.weights()},
                                                 {"n", member.faces.n},
                                                 {"facet_order", member.facet_names()},
                                                 {"count", member.blocks.size()},
                                                 {"blocks", std::move(blocks)}});
        }
    }

    if (!has_quotients(member.faces)) {
        return member;
    }
    if (quotient_path && member.charmats_from_cache) {
        if (auto j = read_cache(*quotient_path, options)) {
            try {
                member.quotients = quotients_from_cache(*j, member);
                member.quotients_from_cache = true;
            } catch (const std::exception& e) {
                warn(options, "cache file " + quotient_path->string() + " rejected (" + e.what() + "), recomputing");
            }
        }
    }
    if (!member.quotients_from_cache) {
        member.quotients = build_quotients(member.faces, member.blocks);
        if (quotient_path) {
            json stored = json::array();
            for (const auto& q : member.quotients) {
                stored.push_back(serialize::to_json(q));
            }
            write_atomically(*quotient_path,
                             json{{"weights", member.diagram.weights()}, {"quotients", std::move(stored)}});
        }
    }
    return member;
}

bool MemberCheck::ideals_ok() const {
    return std::all_of(ideal_tables.begin(), ideal_tables.end(), [](const auto& table) {
        return std::none_of(table.second.begin(), table.second.end(),
                            [](const auto& row) { return row.status == fixtures::CellStatus::mismatch; });
    });
}

bool MemberCheck::profiles_ok() const {
    return std::all_of(discrepancies.begin(), discrepancies.end(), [](const auto& d) { return d.certified(); });
}

std::optional<MemberCheck> verify_member(const MemberData& member, const fixtures::PaperFixtures& data) {
    const fixtures::PaperPolytope* paper = data.find_by_weights(member.diagram.weights());
    if (paper == nullptr) {
        return std::nullopt;
    }
    MemberCheck check;
    check.fixture_key = paper->key;
    check.n = member.faces.n;
    check.facet_names = member.facet_names();
    if (check.facet_names != paper->facet_order) {
        throw NormalizationError("facet order differs from the reference ordering for " + paper->key);
    }
    check.matrices = fixtures::compare_matrices(*paper, member.blocks, member.faces);
    for (const auto& b : member.blocks) {
        auto it = std::find_if(paper->blocks.begin(), paper->blocks.end(),
                               [&](const fixtures::NamedBlock& nb) { return nb.block == b; });
        check.reference_names.push_back(it == paper->blocks.end() ? std::string{} : it->name);
    }
    for (const auto& table : data.ideals) {
        if (table.polytope == paper->key) {
            check.ideal_tables.emplace_back(table.name, fixtures::check_ideal_table(table, *paper, member.faces));
        }
    }
    for (const auto& table : data.profiles) {
        if (table.polytope == paper->key) {
            auto found = fixtures::compare_profiles(table, *paper, member.faces);
            check.discrepancies.insert(check.discrepancies.end(), found.begin(), found.end());
        }
    }
    return check;
}

namespace {

std::string block_name(const std::string& prefix, std::size_t index) {
    return prefix + "#" + std::to_string(index + 1);
}

json permutation_json(const charmat::Permutation& perm, const std::vector<std::string>& names) {
    json out = json::object();
    for (std::size_t i = 0; i < perm.size(); ++i) {
        out[names[i]] = names[static_cast<std::size_t>(perm[i])];
    }
    return out;
}

std::string permutation_text(const charmat::Permutation& perm, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (static_cast<std::size_t>(perm[i]) != i) {
            out += (out.empty() ? "" : " ") + names[i] + "->" + names[static_cast<std::size_t>(perm[i])];
        }
    }
    return out.empty() ? "identity" : out;
}

std::string rows_text(const charmat::Block& block, int n) {
    std::string out;
    for (const auto& r : charmat::block_rows(block, n)) {
        out += (out.empty() ? "" : "/") + r;
    }
    return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        out += (i == 0 ? "" : sep) + parts[i];
    }
    return out;
}

std::string map_text(const cohomology::LinearMap& map) {
    return "x->" + cohomology::form_name(map.images[0]) + ", y->" + cohomology::form_name(map.images[1]) +
           ", z->" + cohomology::form_name(map.images[2]);
}

json map_json(const cohomology::LinearMap& map) {
    return json{{"x", cohomology::form_name(map.images[0])},
                {"y", cohomology::form_name(map.images[1])},
                {"z", cohomology::form_name(map.images[2])}};
}

} // namespace

json to_json(const MemberCheck& check, const std::string& prefix) {
    json names = json::object();
    for (std::size_t i = 0; i < check.reference_names.size(); ++i) {
        names[block_name(prefix, i)] = check.reference_names[i];
    }
    json extras = json::array();
    for (const auto& e : check.matrices.extras) {
        json item{{"rows", serialize::block_to_json(e.block, check.n)}};
        if (e.target.empty()) {
            item["maps_to"] = nullptr;
        } else {
            item["maps_to"] = e.target;
            item["automorphism"] = permutation_json(e.automorphism, check.facet_names);
        }
        extras.push_back(std::move(item));
    }
    json ideals = json::object();
    for (const auto& [table, rows] : check.ideal_tables) {
        json list = json::array();
        for (const auto& r : rows) {
            json item{{"matrices", r.matrices}, {"status", fixtures::to_string(r.status)}};
            if (!r.detail.empty()) {
                item["detail"] = r.detail;
            }
            if (!r.computed.empty()) {
                json computed = json::object();
                for (const auto& [name, gens] : r.computed) {
                    computed[name] = gens;
                }
                item["computed_generators"] = std::move(computed);
            }
            list.push_back(std::move(item));
        }
        ideals[table] = std::move(list);
    }
    json discrepancies = json::array();
    for (const auto& d : check.discrepancies) {
        json item = fixtures::to_json(d);
        item["certified"] = d.certified();
        discrepancies.push_back(std::move(item));
    }
    return json{{"reference", check.fixture_key},
                {"matrices",
                 {{"computed", check.matrices.computed},
                  {"listed", check.matrices.listed},
                  {"missing", check.matrices.missing},
                  {"extras", std::move(extras)},
                  {"reference_names", std::move(names)},
                  {"ok", check.matrices_ok()}}},
                {"ideal_tables", std::move(ideals)},
                {"discrepancies", std::move(discrepancies)},
                {"ok", check.ok()}};
}

std::string to_text(const MemberCheck& check, const std::string& prefix) {
    std::ostringstream out;
    out << "reference " << check.fixture_key << ":\n";
    out << "  matrices: " << check.matrices.computed << " enumerated, " << check.matrices.listed << " listed, "
        << check.matrices.missing.size() << " missing, " << check.matrices.extras.size() << " extra\n";
    if (!check.matrices.missing.empty()) {
        out << "    missing: " << join(check.matrices.missing, " ") << '\n';
    }
    for (const auto& e : check.matrices.extras) {
        out << "    extra " << rows_text(e.block, check.n) << ": ";
        if (e.target.empty()) {
            out << "no automorphism reaches a listed matrix\n";
        } else {
            out << "maps to " << e.target << " under " << permutation_text(e.automorphism, check.facet_names)
                << '\n';
        }
    }
    std::vector<std::string> pairs;
    for (std::size_t i = 0; i < check.reference_names.size(); ++i) {
        pairs.push_back(block_name(prefix, i) + "=" +
                        (check.reference_names[i].empty() ? "?" : check.reference_names[i]));
    }
    out << "    names: " << join(pairs, " ") << '\n';
    for (const auto& [table, rows] : check.ideal_tables) {
        std::size_t counts[3] = {0, 0, 0};
        for (const auto& r : rows) {
            ++counts[static_cast<int>(r.status)];
        }
        out << "  ideal table " << table << ": " << counts[0] << " match, " << counts[1] << " mismatch, "
            << counts[2] << " unparseable\n";
        for (const auto& r : rows) {
            if (r.status == fixtures::CellStatus::match) {
                continue;
            }
            out << "    " << fixtures::to_string(r.status) << " [" << join(r.matrices, ",") << "]: " << r.detail
                << '\n';
            for (const auto& [name, gens] : r.computed) {
                out << "      computed " << name << ": " << join(gens, ", ") << '\n';
            }
        }
    }
    const auto certified = std::count_if(check.discrepancies.begin(), check.discrepancies.end(),
                                         [](const auto& d) { return d.certified(); });
    out << "  invariant tables: " << check.discrepancies.size() << " discrepancies, " << certified
        << " certified\n";
    for (const auto& d : check.discrepancies) {
        out << "    " << d.table << ' ' << d.row << ' ' << d.column << ": table " << d.paper_value << ", computed "
            << d.computed_value << (d.certified() ? "" : " (second path disagrees: " +
                                                            std::to_string(d.alternate_value) + ")")
            << '\n';
    }
    return out.str();
}

std::size_t RigidityReport::cross_pairs() const {
    std::size_t total = 0;
    for (const auto& p : pairs) {
        total += p.isomorphic.rows * p.isomorphic.cols;
    }
    return total;
}

std::size_t RigidityReport::isomorphisms() const {
    std::size_t total = 0;
    for (const auto& p : pairs) {
        total += p.isomorphic.count();
    }
    return total;
}

bool RigidityReport::verify_ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second.ok(); });
}

int RigidityReport::exit_status() const { return verified && !verify_ok() ? 1 : 0; }

RigidityReport build_report(const gale::Weights& input, const Options& options) {
    gale::GaleDiagram diagram(input);  // validates
    RigidityReport report;
    report.input = input;
    report.canonical = gale::canonical_weights(input);
    report.k = diagram.k();
    report.m = diagram.m();
    report.n = diagram.n();
    if (!torbetti::supports_quasitoric(diagram.k())) {
        throw InvalidInput("k = " + std::to_string(diagram.k()) +
                           ": supports_quasitoric(k) is false, so no quasitoric manifold lies over this diagram");
    }
    const gale::GaleDiagram canonical(report.canonical);
    report.betti = torbetti::betti_table(canonical);
    try {
        report.sphere_products = torbetti::sphere_product_decomposition(canonical);
    } catch (const std::logic_error&) {
        report.notices.push_back("moment-angle complex is not a connected sum of sphere products");
    }

    report.class_supported = diagram.k() == 2;
    if (!report.class_supported) {
        report.notices.push_back("Tor classification via the Petersen graph is pentagon-only; Betti data only");
        report.verdict = "BETTI-ONLY";
        return report;
    }

    // The input's own polytope first, then the rest of the class in sorted order.
    std::vector<gale::Weights> members = petersen::tor_class(report.canonical);
    std::stable_partition(members.begin(), members.end(), [&](const auto& w) { return w == report.canonical; });

    std::optional<fixtures::PaperFixtures> data;
    if (options.verify) {
        data = fixtures::load_fixtures(options.fixtures_dir);
        report.verified = true;
    }

    std::vector<MemberData> built;
    for (std::size_t i = 0; i < members.size(); ++i) {
        built.push_back(build_member(members[i], options));
        const auto& md = built.back();
        MemberSummary s;
        s.prefix = std::string(1, static_cast<char>('A' + i));
        s.weights = md.diagram.weights();
        s.m = md.faces.m;
        s.n = md.faces.n;
        s.vertices = md.faces.maximal_faces.size();
        s.matrix_count = md.blocks.size();
        if (!md.quotients.empty()) {
            s.hilbert = md.quotients.front().hilbert();
        }
        if (md.blocks.empty()) {
            report.notices.push_back(s.prefix + " " + join_weights(s.weights) +
                                     " has no characteristic matrix over Z/2");
        }
        if (data) {
            if (auto check = verify_member(md, *data)) {
                report.checks.emplace_back(i, std::move(*check));
            } else {
                report.notices.push_back("no reference data for " + join_weights(s.weights));
            }
        }
        report.members.push_back(std::move(s));
    }

    if (built.size() > 1) {
        cohomology::SubstitutionTable table(report.n + 1);
        for (std::size_t i = 0; i < built.size(); ++i) {
            for (std::size_t j = i + 1; j < built.size(); ++j) {
                PairVerdict pv;
                pv.left = i;
                pv.right = j;
                pv.isomorphic = cohomology::pairwise_iso_matrix(built[i].quotients, built[j].quotients, options.jobs);
                for (std::size_t a = 0; a < pv.isomorphic.rows; ++a) {
                    for (std::size_t b = 0; b < pv.isomorphic.cols; ++b) {
                        if (pv.isomorphic.at(a, b)) {
                            auto map = cohomology::find_graded_iso(built[i].quotients[a], built[j].quotients[b], table);
                            pv.witnesses.push_back({a, b, *map});
                        }
                    }
                }
                report.pairs.push_back(std::move(pv));
            }
        }
        report.verdict = report.isomorphisms() == 0 ? "NOT-B-RIGID C-RIGID-WITHIN-CLASS" : "NOT-B-RIGID NOT-C-RIGID";
    } else {
        report.verdict = "B-RIGID-WITHIN-FAMILY";
    }
    return report;
}

json to_json(const RigidityReport& report) {
    json out{{"input", report.input},
             {"canonical", report.canonical},
             {"k", report.k},
             {"m", report.m},
             {"n", report.n},
             {"betti", serialize::to_json(report.betti)}};
    json spheres = json::array();
    for (auto [p, q] : report.sphere_products) {
        spheres.push_back(json::array({p, q}));
    }
    out["sphere_products"] = std::move(spheres);
    out["tor_class_supported"] = report.class_supported;
    if (report.class_supported) {
        json members = json::array();
        for (const auto& s : report.members) {
            members.push_back(json{{"name", s.prefix},
                                   {"weights", s.weights},
                                   {"m", s.m},
                                   {"n", s.n},
                                   {"vertices", s.vertices},
                                   {"characteristic_matrices", s.matrix_count},
                                   {"hilbert", s.hilbert}});
        }
        out["tor_class"] = std::move(members);
        json pairs = json::array();
        for (const auto& p : report.pairs) {
            json rows = json::array();
            for (std::size_t a = 0; a < p.isomorphic.rows; ++a) {
                std::string row;
                for (std::size_t b = 0; b < p.isomorphic.cols; ++b) {
                    row += p.isomorphic.at(a, b) ? '1' : '0';
                }
                rows.push_back(std::move(row));
            }
            json witnesses = json::array();
            for (const auto& w : p.witnesses) {
                witnesses.push_back(json{{"left", block_name(report.members[p.left].prefix, w.left)},
                                         {"right", block_name(report.members[p.right].prefix, w.right)},
                                         {"map", map_json(w.map)}});
            }
            pairs.push_back(json{{"left", report.members[p.left].prefix},
                                 {"right", report.members[p.right].prefix},
                                 {"searched", p.isomorphic.rows * p.isomorphic.cols},
                                 {"isomorphic", p.isomorphic.count()},
                                 {"matrix", std::move(rows)},
                                 {"witnesses", std::move(witnesses)}});
        }
        out["pairs"] = std::move(pairs);
    }
    if (report.verified) {
        json checks = json::array();
        for (const auto& [index, check] : report.checks) {
            json item = to_json(check, report.members[index].prefix);
            item["member"] = report.members[index].prefix;
            checks.push_back(std::move(item));
        }
        json discrepancies = json::array();
        for (const auto& [index, check] : report.checks) {
            for (const auto& d : check.discrepancies) {
                discrepancies.push_back(fixtures::to_json(d));
            }
        }
        out["verify"] = json{{"checks", std::move(checks)},
                             {"discrepancy_report", std::move(discrepancies)},
                             {"ok", report.verify_ok()}};
    }
    out["notices"] = report.notices;
    out["verdict"] = report.verdict;
    return out;
}

std::string betti_text(const torbetti::BettiTable& table) {
    std::ostringstream out;
    int row = -1;
    for (const auto& [key, beta] : table.entries()) {
        if (key.first != row) {
            if (row >= 0) {
                out << '\n';
            }
            row = key.first;
            out << "  i=" << (row == 0 ? "0" : "-" + std::to_string(row)) << ':';
        }
        out << " 2j=" << key.second << ':' << beta;
    }
    out << '\n';
    return out.str();
}

std::string to_text(const RigidityReport& report) {
    std::ostringstream out;
    out << "weights " << join_weights(report.input) << " (canonical " << join_weights(report.canonical)
        << "), k=" << report.k << " m=" << report.m << " n=" << report.n << '\n';
    out << "Betti numbers beta^{i,2j}:\n" << betti_text(report.betti);
    if (!report.sphere_products.empty()) {
        std::vector<std::string> parts;
        for (auto [p, q] : report.sphere_products) {
            parts.push_back("S^" + std::to_string(p) + "xS^" + std::to_string(q));
        }
        out << "moment-angle complex: " << join(parts, " # ") << '\n';
    }
    if (report.class_supported) {
        out << "tor class: " << report.members.size() << (report.members.size() == 1 ? " member\n" : " members\n");
        for (const auto& s : report.members) {
            out << "  " << s.prefix << " [" << join_weights(s.weights) << "] vertices=" << s.vertices << ", "
                << s.matrix_count << " characteristic matrices";
            if (!s.hilbert.empty()) {
                std::vector<std::string> h;
                for (int v : s.hilbert) {
                    h.push_back(std::to_string(v));
                }
                out << ", hilbert " << join(h, ",");
            }
            out << '\n';
        }
        for (const auto& p : report.pairs) {
            out << "iso search " << report.members[p.left].prefix << " x " << report.members[p.right].prefix << ": "
                << p.isomorphic.rows * p.isomorphic.cols << " pairs, " << p.isomorphic.count() << " isomorphic\n";
            for (const auto& w : p.witnesses) {
                out << "  " << block_name(report.members[p.left].prefix, w.left) << " ~ "
                    << block_name(report.members[p.right].prefix, w.right) << " via " << map_text(w.map) << '\n';
            }
        }
    }
    if (report.verified) {
        for (const auto& [index, check] : report.checks) {
            out << "verify " << report.members[index].prefix << ' ' << to_text(check, report.members[index].prefix);
        }
        out << "verify: " << (report.verify_ok() ? "ok" : "MISMATCH") << '\n';
    }
    for (const auto& n : report.notices) {
        out << "notice: " << n << '\n';
    }
    out << "verdict: " << report.verdict << '\n';
    return out.str();
}

} // namespace rigidity::report
