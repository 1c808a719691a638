#include "rigidity/error.hpp"
#include "rigidity/gale.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace rigidity;
using namespace rigidity::gale;

namespace {

std::vector<Weights> dihedral_images(const Weights& w) {
    std::vector<Weights> out;
    Weights r = w;
    for (std::size_t i = 0; i < w.size(); ++i) {
        std::rotate(r.begin(), r.begin() + 1, r.end());
        out.push_back(r);
        out.emplace_back(r.rbegin(), r.rend());
    }
    return out;
}

} // namespace

TEST_CASE("diagram validation") {
    CHECK_THROWS_AS(GaleDiagram({3, 1, 2, 1}), InvalidInput);
    CHECK_THROWS_AS(GaleDiagram({1, 1, 1}), InvalidInput);
    CHECK_THROWS_AS(GaleDiagram({3, 0, 2, 1, 1}), InvalidInput);
    CHECK_THROWS_AS(GaleDiagram({3, -1, 2, 1, 1}), InvalidInput);
    CHECK_NOTHROW(GaleDiagram({60, 1, 1, 1, 1}));
    CHECK_THROWS_AS(GaleDiagram({61, 1, 1, 1, 1}), UnsupportedShape);
    const GaleDiagram p({3, 1, 2, 1, 1});
    CHECK(p.k() == 2);
    CHECK(p.m() == 8);
    CHECK(p.n() == 5);
    CHECK(GaleDiagram({1, 1, 1, 1, 1, 1, 1}).k() == 3);
}

TEST_CASE("canonical weights") {
    CHECK(canonical_weights({1, 2, 1, 1, 3}) == Weights{3, 1, 2, 1, 1});
    CHECK(canonical_weights({1, 1, 2, 1, 3}) == Weights{3, 1, 2, 1, 1});
    CHECK(canonical_weights({1, 1, 2, 2, 2}) == Weights{2, 2, 2, 1, 1});
    std::mt19937 rng(1);
    for (int trial = 0; trial < 100; ++trial) {
        Weights w(5 + 2 * (rng() % 2));
        for (auto& x : w) {
            x = 1 + static_cast<int>(rng() % 4);
        }
        const auto c = canonical_weights(w);
        CHECK(canonical_weights(c) == c);
        for (const auto& image : dihedral_images(w)) {
            CHECK(canonical_weights(image) == c);
            CHECK(image <= c);
        }
    }
}

TEST_CASE("arc criterion agrees with plane geometry") {
    for (int k = 2; k <= 4; ++k) {
        const int v = 2 * k + 1;
        for (int mask = 1; mask < (1 << v); ++mask) {
            std::vector<int> labels;
            for (int i = 0; i < v; ++i) {
                if ((mask >> i) & 1) {
                    labels.push_back(i + 1);
                }
            }
            CHECK_MESSAGE(origin_in_hull(labels, k) == support::origin_in_hull_geometric(labels, k),
                          "k=" << k << " mask=" << mask);
        }
    }
    CHECK_FALSE(origin_in_hull({}, 2));
    CHECK_THROWS_AS(origin_in_hull({6}, 2), InvalidInput);
    CHECK_THROWS_AS(origin_in_hull({0}, 2), InvalidInput);
}

TEST_CASE("repeated labels do not change the hull") {
    CHECK(origin_in_hull({1, 1, 2, 4}, 2) == origin_in_hull({1, 2, 4}, 2));
    CHECK(origin_in_hull({1, 3, 4}, 2));
    CHECK_FALSE(origin_in_hull({1, 2, 3}, 2));
}

TEST_CASE("pinned facet order of the reference polytopes") {
    const GaleDiagram p({3, 1, 2, 1, 1});
    CHECK(default_labeling(p).labels() == std::vector<int>{1, 1, 1, 3, 3, 5, 2, 4});
    const GaleDiagram q({2, 2, 2, 1, 1});
    CHECK(default_labeling(q).labels() == std::vector<int>{1, 1, 2, 3, 3, 5, 2, 4});
    const auto lab = default_labeling(p);
    CHECK(lab.name(0, p) == "F1_1");
    CHECK(lab.name(5, p) == "F5");
}

TEST_CASE("minimal non-faces match exhaustive subset search") {
    std::vector<Weights> cases = support::pentagons_up_to(8);
    cases.push_back({1, 1, 1, 1, 1, 1, 1});
    cases.push_back({2, 1, 1, 1, 1, 1, 1});
    cases.push_back({1, 1, 1, 1, 1, 1, 1, 1, 1});
    for (const auto& w : cases) {
        const GaleDiagram d(w);
        const auto lab = default_labeling(d);
        auto computed = minimal_nonfaces(d, lab);
        std::sort(computed.begin(), computed.end());
        CHECK(computed == support::brute_force_minimal_nonfaces(d, lab));
        CHECK(computed.size() == w.size());
    }
}

TEST_CASE("face structure of [3,1,2,1,1]") {
    const GaleDiagram p({3, 1, 2, 1, 1});
    const auto fs = face_structure(p, default_labeling(p));
    CHECK(fs.m == 8);
    CHECK(fs.n == 5);
    CHECK(fs.maximal_faces.size() == 18);
    std::vector<int> sizes;
    for (auto e : fs.minimal_nonfaces) {
        sizes.push_back(std::popcount(e));
    }
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int>{2, 3, 3, 4, 4});
    for (auto f : fs.maximal_faces) {
        CHECK(std::popcount(f) == 5);
        CHECK(fs.is_face(f));
        for (int i = 0; i < 8; ++i) {
            if (((f >> i) & 1U) == 0) {
                CHECK_FALSE(fs.is_face(f | (FacetSet{1} << i)));
            }
        }
    }
    // The default order puts a maximal face first.
    CHECK(fs.is_face(make_set({0, 1, 2, 3, 4})));
}

TEST_CASE("first n facets form a face for every small pentagon") {
    for (const auto& w : support::pentagons_up_to(10)) {
        const auto fs = support::faces_of(w);
        FacetSet prefix = (FacetSet{1} << fs.n) - 1;
        CHECK(fs.is_face(prefix));
    }
}

TEST_CASE("face counts satisfy Dehn-Sommerville") {
    for (const auto& w : support::pentagons_up_to(9)) {
        const GaleDiagram d(w);
        const auto counts = face_counts(d);
        const auto fs = support::faces_of(w);
        CHECK(counts.f.front() == 1);
        CHECK(counts.f.back() == static_cast<long long>(fs.maximal_faces.size()));
        auto reversed = counts.h;
        std::reverse(reversed.begin(), reversed.end());
        CHECK(counts.h == reversed);
        CHECK(counts.h[0] == 1);
        CHECK(counts.h[1] == d.m() - d.n());
    }
}

TEST_CASE("set helpers") {
    CHECK(make_set({0, 2, 5}) == 0b100101U);
    CHECK(members(0b100101U) == std::vector<int>{0, 2, 5});
    CHECK(members(0).empty());
}
