#pragma once

// End-to-end pipeline: Tor class of a pentagon diagram, characteristic matrices and
// cohomology quotients of every member, exhaustive cross-member isomorphism search,
// and optional comparison with the shipped reference tables.
//
// Nothing timing- or thread-dependent reaches the output, so a report is
// byte-identical across runs, cache states and job counts.

#include "rigidity/charmat.hpp"
#include "rigidity/cohomology.hpp"
#include "rigidity/fixtures.hpp"
#include "rigidity/gale.hpp"
#include "rigidity/torbetti.hpp"

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rigidity::report {

struct Options {
    int jobs = 0;  // <= 0: OpenMP default
    std::optional<std::filesystem::path> cache_dir;
    bool verify = false;
    std::filesystem::path fixtures_dir;
    std::ostream* warnings = nullptr;  // cache problems are reported here
};

/// Everything computed for one polytope, keyed by its canonical weights.
struct MemberData {
    gale::GaleDiagram diagram;
    gale::FacetLabeling labeling;
    gale::FaceStructure faces;
    std::vector<charmat::Block> blocks;
    std::vector<cohomology::GradedQuotient> quotients;
    bool charmats_from_cache = false;
    bool quotients_from_cache = false;

    std::vector<std::string> facet_names() const;
};

/// "3-1-2-1-1"
std::string cache_key(const gale::Weights& weights);

/// Builds (or loads from the cache) the matrices and quotients of canonical_weights(w).
/// Quotients are only built when m - n = 3 admits a presentation in x, y, z.
MemberData build_member(const gale::Weights& weights, const Options& options);

/// Comparison of one member with the reference data for the same weights.
struct MemberCheck {
    std::string fixture_key;
    int n = 0;
    std::vector<std::string> facet_names;
    fixtures::MatrixComparison matrices;
    /// Reference name of each enumerated block, empty when it is not listed.
    std::vector<std::string> reference_names;
    std::vector<std::pair<std::string, std::vector<fixtures::IdealRowCheck>>> ideal_tables;
    std::vector<fixtures::Discrepancy> discrepancies;

    bool matrices_ok() const { return matrices.ok(); }
    bool ideals_ok() const;
    bool profiles_ok() const;
    bool ok() const { return matrices_ok() && ideals_ok() && profiles_ok(); }
};

/// Null when no reference data exists for the member's weights.
std::optional<MemberCheck> verify_member(const MemberData& member, const fixtures::PaperFixtures& data);

/// Enumerated blocks are named prefix#position (1-based), apart from the reference names.
nlohmann::json to_json(const MemberCheck& check, const std::string& prefix);
std::string to_text(const MemberCheck& check, const std::string& prefix);

struct MemberSummary {
    std::string prefix;  // "A", "B", ...
    gale::Weights weights;
    int m = 0;
    int n = 0;
    std::size_t vertices = 0;
    std::size_t matrix_count = 0;
    std::vector<int> hilbert;  // empty without matrices
};

struct IsoWitness {
    std::size_t left = 0;
    std::size_t right = 0;
    cohomology::LinearMap map;
};

struct PairVerdict {
    std::size_t left = 0;
    std::size_t right = 0;
    cohomology::IsoMatrix isomorphic;
    std::vector<IsoWitness> witnesses;
};

struct RigidityReport {
    gale::Weights input;
    gale::Weights canonical;
    int k = 0;
    int m = 0;
    int n = 0;
    torbetti::BettiTable betti{0, 0};
    std::vector<std::pair<int, int>> sphere_products;
    bool class_supported = false;
    std::vector<MemberSummary> members;
    std::vector<PairVerdict> pairs;
    bool verified = false;
    std::vector<std::pair<std::size_t, MemberCheck>> checks;
    std::vector<std::string> notices;
    std::string verdict;

    std::size_t cross_pairs() const;
    std::size_t isomorphisms() const;
    bool verify_ok() const;
    /// 0, or 1 when --verify found an unexplained mismatch.
    int exit_status() const;
};

/// Throws InvalidInput for diagrams that cannot carry quasitoric manifolds (k >= 4).
RigidityReport build_report(const gale::Weights& input, const Options& options);

nlohmann::json to_json(const RigidityReport& report);
std::string to_text(const RigidityReport& report);

// Shared formatting helpers.
std::string join_weights(const gale::Weights& w, const std::string& sep = ",");
std::string betti_text(const torbetti::BettiTable& table);

} // namespace rigidity::report
