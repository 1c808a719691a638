// Command-line front end: betti, torclass, charmats, cohomology, profile, iso, report.
//
// Exit codes: 0 success, 1 mismatch against the reference tables (--verify),
// 2 invalid input, 3 internal error.

#include "rigidity/cohomology.hpp"
#include "rigidity/error.hpp"
#include "rigidity/fixtures.hpp"
#include "rigidity/gale.hpp"
#include "rigidity/petersen.hpp"
#include "rigidity/report.hpp"
#include "rigidity/serialize.hpp"
#include "rigidity/torbetti.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#ifndef RIGIDITY_DATA_DIR
#define RIGIDITY_DATA_DIR "data"
#endif

namespace {

using namespace rigidity;
using nlohmann::json;

struct Common {
    bool json = false;
    bool verify = false;
    int jobs = 0;
    std::string cache;
    std::string fixtures = RIGIDITY_DATA_DIR;

    report::Options options() const {
        report::Options o;
        o.jobs = jobs;
        if (!cache.empty()) {
            o.cache_dir = cache;
        }
        o.verify = verify;
        o.fixtures_dir = fixtures;
        o.warnings = &std::cerr;
        return o;
    }
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_flag("--json", c.json, "Emit JSON instead of text");
    cmd->add_option("--cache", c.cache, "Directory for cached matrices and quotients");
    cmd->add_option("--jobs", c.jobs, "Worker threads (0 = all available)")->check(CLI::NonNegativeNumber);
    cmd->add_flag("--verify", c.verify, "Compare results with the reference tables");
    cmd->add_option("--fixtures", c.fixtures, "Directory holding the reference tables");
}

gale::Weights parse_weights(const std::string& text) {
    gale::Weights out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw InvalidInput("weight '" + item + "' is not an integer");
        }
        if (used != item.size()) {
            throw InvalidInput("weight '" + item + "' is not an integer");
        }
        out.push_back(value);
    }
    if (out.empty() || text.empty() || text.back() == ',') {
        throw InvalidInput("weights must be a comma-separated list such as 3,1,2,1,1");
    }
    return out;
}

std::string hilbert_text(const std::vector<int>& h) {
    std::string out;
    for (std::size_t i = 0; i < h.size(); ++i) {
        out += (i == 0 ? "" : ",") + std::to_string(h[i]);
    }
    return out;
}

void emit(const Common& c, const json& j, const std::string& text) {
    if (c.json) {
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << text;
    }
}

std::string block_name(std::size_t i) { return "A#" + std::to_string(i + 1); }

int run_betti(const std::string& w, const Common& c) {
    const gale::GaleDiagram d(parse_weights(w));
    const auto table = torbetti::betti_table(d);
    const auto spheres = torbetti::sphere_product_decomposition(d);
    const auto additive = torbetti::additive_betti(table);
    json j{{"weights", d.weights()}, {"k", d.k()}, {"m", d.m()}, {"n", d.n()},
           {"betti", serialize::to_json(table)}, {"additive_betti", additive}};
    json sp = json::array();
    std::string parts;
    for (auto [p, q] : spheres) {
        sp.push_back(json::array({p, q}));
        parts += (parts.empty() ? "" : " # ") + ("S^" + std::to_string(p) + "xS^" + std::to_string(q));
    }
    j["sphere_products"] = sp;
    std::ostringstream t;
    t << "weights " << report::join_weights(d.weights()) << ", k=" << d.k() << " m=" << d.m() << " n=" << d.n()
      << '\n'
      << "Betti numbers beta^{i,2j}:\n"
      << report::betti_text(table) << "additive Betti numbers: " << hilbert_text(additive) << '\n'
      << "moment-angle complex: " << parts << '\n';
    emit(c, j, t.str());
    return 0;
}

int run_torclass(const std::string& w, const Common& c) {
    const auto weights = parse_weights(w);
    gale::GaleDiagram d(weights);
    const auto detail = petersen::tor_class_detail(weights);
    json j{{"weights", weights},
           {"members", serialize::weights_list_to_json(detail.members)},
           {"rejected_readings", serialize::weights_list_to_json(detail.rejected)}};
    std::ostringstream t;
    t << "tor class of " << report::join_weights(weights) << ": " << detail.members.size()
      << (detail.members.size() == 1 ? " member\n" : " members\n");
    for (const auto& m : detail.members) {
        t << "  " << report::join_weights(m) << '\n';
    }
    if (!detail.rejected.empty()) {
        t << "readings with non-positive labels: " << detail.rejected.size() << '\n';
    }
    emit(c, j, t.str());
    return 0;
}

// Keeps only the part of a reference comparison a subcommand is about.
enum class Part { matrices, ideals, profiles };

std::optional<report::MemberCheck> check_part(const report::MemberData& md, const Common& c, Part part) {
    if (!c.verify) {
        return std::nullopt;
    }
    const auto data = fixtures::load_fixtures(c.fixtures);
    auto check = report::verify_member(md, data);
    if (!check) {
        throw InvalidInput("no reference data for " + report::join_weights(md.diagram.weights()));
    }
    if (part != Part::matrices) {
        check->matrices = {check->matrices.computed, check->matrices.listed, {}, {}};
    }
    if (part != Part::ideals) {
        check->ideal_tables.clear();
    }
    if (part != Part::profiles) {
        check->discrepancies.clear();
    }
    return check;
}

int finish(const Common& c, json j, std::string text, const std::optional<report::MemberCheck>& check) {
    if (check) {
        j["verify"] = report::to_json(*check, "A");
        text += report::to_text(*check, "A");
        text += std::string("verify: ") + (check->ok() ? "ok" : "MISMATCH") + '\n';
    }
    emit(c, j, text);
    return check && !check->ok() ? 1 : 0;
}

int run_charmats(const std::string& w, const Common& c) {
    const auto md = report::build_member(parse_weights(w), c.options());
    const auto names = md.facet_names();
    json blocks = json::array();
    std::ostringstream t;
    t << "weights " << report::join_weights(md.diagram.weights()) << ", facets";
    for (const auto& n : names) {
        t << ' ' << n;
    }
    t << "\n" << md.blocks.size() << " characteristic matrices (identity on the first " << md.faces.n
      << " facets):\n";
    for (std::size_t i = 0; i < md.blocks.size(); ++i) {
        const auto rows = charmat::block_rows(md.blocks[i], md.faces.n);
        blocks.push_back(json{{"name", block_name(i)}, {"rows", rows}});
        t << "  " << block_name(i);
        for (const auto& r : rows) {
            t << ' ' << r;
        }
        t << '\n';
    }
    json j{{"weights", md.diagram.weights()},
           {"facet_order", names},
           {"faces", serialize::to_json(md.faces)},
           {"count", md.blocks.size()},
           {"blocks", blocks}};
    return finish(c, std::move(j), t.str(), check_part(md, c, Part::matrices));
}

void require_quotients(const report::MemberData& md) {
    if (md.faces.m - md.faces.n != 3) {
        throw UnsupportedShape("cohomology presentations need m - n = 3");
    }
}

int run_cohomology(const std::string& w, const Common& c) {
    const auto md = report::build_member(parse_weights(w), c.options());
    require_quotients(md);
    json list = json::array();
    std::ostringstream t;
    for (std::size_t i = 0; i < md.quotients.size(); ++i) {
        const auto& q = md.quotients[i];
        const auto mat = charmat::CharMatrixZ2::with_identity_prefix(md.faces.n, md.blocks[i]);
        std::vector<std::string> gens;
        for (const auto& g : cohomology::ideal_generators(md.faces, mat)) {
            gens.push_back(gf2::to_string(g));
        }
        json item = serialize::to_json(q);
        item["name"] = block_name(i);
        item["generators"] = gens;
        list.push_back(std::move(item));
        t << block_name(i) << " hilbert " << hilbert_text(q.hilbert()) << ", poincare "
          << (cohomology::poincare_nondegenerate(q) ? "ok" : "DEGENERATE") << "\n  I = (";
        for (std::size_t g = 0; g < gens.size(); ++g) {
            t << (g == 0 ? "" : ", ") << gens[g];
        }
        t << ")\n";
    }
    json j{{"weights", md.diagram.weights()}, {"quotients", std::move(list)}};
    return finish(c, std::move(j), t.str(), check_part(md, c, Part::ideals));
}

int run_profile(const std::string& w, const Common& c) {
    const auto md = report::build_member(parse_weights(w), c.options());
    require_quotients(md);
    json codim = json::object();
    json ord = json::object();
    std::ostringstream head;
    head << "     ";
    std::vector<std::string> columns;
    for (auto f : cohomology::kLinearForms) {
        columns.push_back(cohomology::form_name(f));
        head << ' ' << std::setw(5) << columns.back();
    }
    std::ostringstream codim_text;
    std::ostringstream ord_text;
    for (std::size_t i = 0; i < md.quotients.size(); ++i) {
        const auto p = cohomology::invariant_profile(md.quotients[i]);
        codim[block_name(i)] = p.codim;
        ord[block_name(i)] = p.ord;
        codim_text << std::left << std::setw(5) << block_name(i) << std::right;
        ord_text << std::left << std::setw(5) << block_name(i) << std::right;
        for (std::size_t col = 0; col < 7; ++col) {
            codim_text << ' ' << std::setw(5) << p.codim[col];
            ord_text << ' ' << std::setw(5) << p.ord[col];
        }
        codim_text << '\n';
        ord_text << '\n';
    }
    json j{{"weights", md.diagram.weights()}, {"columns", columns}, {"codim", codim}, {"ord", ord}};
    std::string text = "codim\n" + head.str() + "\n" + codim_text.str() + "ord\n" + head.str() + "\n" +
                       ord_text.str();
    return finish(c, std::move(j), std::move(text), check_part(md, c, Part::profiles));
}

int run_iso(const std::string& w1, const std::string& w2, const Common& c) {
    const auto opts = c.options();
    const auto a = report::build_member(parse_weights(w1), opts);
    const auto b = report::build_member(parse_weights(w2), opts);
    require_quotients(a);
    require_quotients(b);
    const auto matrix = cohomology::pairwise_iso_matrix(a.quotients, b.quotients, c.jobs);
    json witnesses = json::array();
    std::ostringstream t;
    t << report::join_weights(a.diagram.weights()) << " x " << report::join_weights(b.diagram.weights()) << ": "
      << matrix.rows * matrix.cols << " pairs, " << matrix.count() << " isomorphic\n";
    for (std::size_t i = 0; i < matrix.rows; ++i) {
        for (std::size_t k = 0; k < matrix.cols; ++k) {
            if (!matrix.at(i, k)) {
                continue;
            }
            const auto map = *cohomology::find_graded_iso(a.quotients[i], b.quotients[k]);
            const std::string left = "A#" + std::to_string(i + 1);
            const std::string right = "B#" + std::to_string(k + 1);
            json m{{"x", cohomology::form_name(map.images[0])},
                   {"y", cohomology::form_name(map.images[1])},
                   {"z", cohomology::form_name(map.images[2])}};
            witnesses.push_back(json{{"left", left}, {"right", right}, {"map", m}});
            t << "  " << left << " ~ " << right << " via x->" << cohomology::form_name(map.images[0])
              << ", y->" << cohomology::form_name(map.images[1]) << ", z->" << cohomology::form_name(map.images[2])
              << '\n';
        }
    }
    json j{{"left", a.diagram.weights()},
           {"right", b.diagram.weights()},
           {"searched", matrix.rows * matrix.cols},
           {"isomorphic", matrix.count()},
           {"witnesses", std::move(witnesses)}};
    emit(c, j, t.str());
    return 0;
}

int run_report(const std::string& w, const Common& c) {
    const auto r = report::build_report(parse_weights(w), c.options());
    emit(c, report::to_json(r), report::to_text(r));
    return r.exit_status();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tor-algebra and cohomological rigidity of polytopes with few facets"};
    app.require_subcommand(1);
    Common common;
    std::string w1;
    std::string w2;

    auto* betti = app.add_subcommand("betti", "Bigraded Betti numbers of the moment-angle complex");
    auto* torclass = app.add_subcommand("torclass", "Pentagon diagrams with the same Tor-algebra");
    auto* charmats = app.add_subcommand("charmats", "Z/2 characteristic matrices with identity prefix");
    auto* cohom = app.add_subcommand("cohomology", "Z/2 cohomology rings as quotients of GF(2)[x,y,z]");
    auto* profile = app.add_subcommand("profile", "codim and ord of the seven degree-one classes");
    auto* iso = app.add_subcommand("iso", "Graded ring isomorphisms between two diagrams' cohomologies");
    auto* rep = app.add_subcommand("report", "Full B-/C-rigidity report for a pentagon diagram");
    for (auto* cmd : {betti, torclass, charmats, cohom, profile, rep}) {
        cmd->add_option("weights", w1, "Comma-separated weights, e.g. 3,1,2,1,1")->required();
        add_common(cmd, common);
    }
    iso->add_option("left", w1, "First weights")->required();
    iso->add_option("right", w2, "Second weights")->required();
    add_common(iso, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*betti) {
            return run_betti(w1, common);
        }
        if (*torclass) {
            return run_torclass(w1, common);
        }
        if (*charmats) {
            return run_charmats(w1, common);
        }
        if (*cohom) {
            return run_cohomology(w1, common);
        }
        if (*profile) {
            return run_profile(w1, common);
        }
        if (*iso) {
            return run_iso(w1, w2, common);
        }
        return run_report(w1, common);
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const UnsupportedShape& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const OutOfRange& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
}
