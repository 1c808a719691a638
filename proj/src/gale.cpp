#include "rigidity/gale.hpp"

#include "rigidity/error.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace rigidity::gale {

GaleDiagram::GaleDiagram(Weights weights) : weights_(std::move(weights)) {
    if (weights_.size() < 5 || weights_.size() % 2 == 0) {
        throw InvalidInput("a Gale diagram needs an odd number (>= 5) of weights, got " +
                           std::to_string(weights_.size()));
    }
    long long total = 0;
    for (int w : weights_) {
        if (w < 1) {
            throw InvalidInput("Gale weights must be positive");
        }
        total += w;
    }
    if (total > kMaxFacets) {
        throw UnsupportedShape("at most 64 facets are supported");
    }
    m_ = static_cast<int>(total);
}

Weights canonical_weights(const Weights& weights) {
    const GaleDiagram validated(weights);
    const std::size_t len = weights.size();
    Weights best;
    for (int direction = 0; direction < 2; ++direction) {
        for (std::size_t shift = 0; shift < len; ++shift) {
            Weights image(len);
            for (std::size_t i = 0; i < len; ++i) {
                const std::size_t src = direction == 0 ? (shift + i) % len : (shift + len - i) % len;
                image[i] = weights[src];
            }
            if (best.empty() || image > best) {
                best = std::move(image);
            }
        }
    }
    return best;
}

bool origin_in_hull(const std::vector<int>& labels, int k) {
    if (k < 1) {
        throw InvalidInput("k must be positive");
    }
    const int vertices = 2 * k + 1;
    for (int l : labels) {
        if (l < 1 || l > vertices) {
            throw InvalidInput("polygon label " + std::to_string(l) + " outside 1.." + std::to_string(vertices));
        }
    }
    if (labels.empty()) {
        return false;
    }
    // An open half-plane through the centre holds at most k+1 consecutive vertices,
    // so the origin is outside the hull iff the labels fit in such a window.
    for (int start = 0; start < vertices; ++start) {
        const bool fits = std::all_of(labels.begin(), labels.end(),
                                      [&](int l) { return ((l - 1 - start) % vertices + vertices) % vertices <= k; });
        if (fits) {
            return false;
        }
    }
    return true;
}

std::string FacetLabeling::name(int facet, const GaleDiagram& diagram) const {
    const Facet& f = facets.at(static_cast<std::size_t>(facet));
    std::string out = "F" + std::to_string(f.label);
    if (diagram.weights()[static_cast<std::size_t>(f.label - 1)] > 1) {
        out += "_" + std::to_string(f.index);
    }
    return out;
}

std::vector<int> FacetLabeling::labels() const {
    std::vector<int> out;
    out.reserve(facets.size());
    for (const auto& f : facets) {
        out.push_back(f.label);
    }
    return out;
}

std::vector<int> members(FacetSet s) {
    std::vector<int> out;
    while (s != 0) {
        out.push_back(std::countr_zero(s));
        s &= s - 1;
    }
    return out;
}

FacetSet make_set(const std::vector<int>& indices) {
    FacetSet s = 0;
    for (int i : indices) {
        if (i < 0 || i >= kMaxFacets) {
            throw InvalidInput("facet index out of range");
        }
        s |= FacetSet{1} << i;
    }
    return s;
}

namespace {

FacetSet full_set(int m) { return m == 64 ? ~FacetSet{0} : (FacetSet{1} << m) - 1; }

void check_labeling(const GaleDiagram& diagram, const FacetLabeling& labeling) {
    if (static_cast<int>(labeling.facets.size()) != diagram.m()) {
        throw InvalidInput("labeling does not list m facets");
    }
    std::vector<int> seen(diagram.weights().size(), 0);
    for (const auto& f : labeling.facets) {
        if (f.label < 1 || f.label > diagram.vertex_count()) {
            throw InvalidInput("facet label out of range");
        }
        ++seen[static_cast<std::size_t>(f.label - 1)];
    }
    if (seen != diagram.weights()) {
        throw InvalidInput("labeling does not match the weights");
    }
}

FacetLabeling pinned(const std::vector<Facet>& facets) { return FacetLabeling{facets}; }

} // namespace

FacetLabeling sorted_labeling(const GaleDiagram& diagram) {
    FacetLabeling labeling;
    for (int v = 1; v <= diagram.vertex_count(); ++v) {
        for (int j = 1; j <= diagram.weights()[static_cast<std::size_t>(v - 1)]; ++j) {
            labeling.facets.push_back({v, j});
        }
    }
    return labeling;
}

FacetLabeling default_labeling(const GaleDiagram& diagram) {
    if (diagram.weights() == Weights{3, 1, 2, 1, 1}) {
        return pinned({{1, 1}, {1, 2}, {1, 3}, {3, 1}, {3, 2}, {5, 1}, {2, 1}, {4, 1}});
    }
    if (diagram.weights() == Weights{2, 2, 2, 1, 1}) {
        return pinned({{1, 1}, {1, 2}, {2, 1}, {3, 1}, {3, 2}, {5, 1}, {2, 2}, {4, 1}});
    }
    const FacetLabeling sorted = sorted_labeling(diagram);
    const FaceStructure fs = face_structure(diagram, sorted);
    if (fs.maximal_faces.empty()) {
        throw NormalizationError("diagram has no vertex");
    }
    const FacetSet first = fs.maximal_faces.front();
    FacetLabeling out;
    for (int pass = 0; pass < 2; ++pass) {
        for (int i = 0; i < diagram.m(); ++i) {
            const bool in_face = (first >> i) & 1U;
            if (in_face == (pass == 0)) {
                out.facets.push_back(sorted.facets[static_cast<std::size_t>(i)]);
            }
        }
    }
    return out;
}

bool is_face(FacetSet facets, const GaleDiagram& diagram, const FacetLabeling& labeling) {
    check_labeling(diagram, labeling);
    if ((facets & ~full_set(diagram.m())) != 0) {
        throw InvalidInput("facet index out of range");
    }
    std::vector<int> complement_labels;
    for (int i = 0; i < diagram.m(); ++i) {
        if (((facets >> i) & 1U) == 0) {
            complement_labels.push_back(labeling.facets[static_cast<std::size_t>(i)].label);
        }
    }
    std::sort(complement_labels.begin(), complement_labels.end());
    complement_labels.erase(std::unique(complement_labels.begin(), complement_labels.end()),
                            complement_labels.end());
    return origin_in_hull(complement_labels, diagram.k());
}

std::vector<FacetSet> minimal_nonfaces(const GaleDiagram& diagram, const FacetLabeling& labeling) {
    check_labeling(diagram, labeling);
    const int vertices = diagram.vertex_count();
    const int k = diagram.k();
    std::vector<FacetSet> out;
    out.reserve(static_cast<std::size_t>(vertices));
    for (int i = 1; i <= vertices; ++i) {
        FacetSet e = 0;
        for (int f = 0; f < diagram.m(); ++f) {
            const int offset = (labeling.facets[static_cast<std::size_t>(f)].label - i + vertices) % vertices;
            if (offset < k) {
                e |= FacetSet{1} << f;
            }
        }
        out.push_back(e);
    }
    return out;
}

bool FaceStructure::contains_nonface(FacetSet s) const {
    return std::any_of(minimal_nonfaces.begin(), minimal_nonfaces.end(),
                       [s](FacetSet e) { return (s & e) == e; });
}

FaceStructure face_structure(const GaleDiagram& diagram, const FacetLabeling& labeling) {
    FaceStructure fs;
    fs.m = diagram.m();
    fs.n = diagram.n();
    fs.minimal_nonfaces = minimal_nonfaces(diagram, labeling);
    // Vertices are complements of 3-element facet sets whose labels surround the origin.
    const FacetSet all = full_set(fs.m);
    for (int a = 0; a < fs.m; ++a) {
        for (int b = a + 1; b < fs.m; ++b) {
            for (int c = b + 1; c < fs.m; ++c) {
                const FacetSet face = all & ~((FacetSet{1} << a) | (FacetSet{1} << b) | (FacetSet{1} << c));
                if (fs.is_face(face)) {
                    fs.maximal_faces.push_back(face);
                }
            }
        }
    }
    std::sort(fs.maximal_faces.begin(), fs.maximal_faces.end(),
              [](FacetSet x, FacetSet y) { return members(x) < members(y); });
    return fs;
}

FaceCounts face_counts(const GaleDiagram& diagram) {
    const int m = diagram.m();
    const int n = diagram.n();
    if (m > 24) {
        throw UnsupportedShape("exhaustive face enumeration is limited to 24 facets");
    }
    const FacetLabeling labeling = sorted_labeling(diagram);
    FaceCounts out;
    out.f.assign(static_cast<std::size_t>(n) + 1, 0);
    for (FacetSet s = 0; s < (FacetSet{1} << m); ++s) {
        if (is_face(s, diagram, labeling)) {
            const int size = std::popcount(s);
            if (size > n) {
                throw std::logic_error("face larger than the dimension");
            }
            ++out.f[static_cast<std::size_t>(size)];
        }
    }
    auto binom = [](long long a, long long b) {
        if (b < 0 || b > a) {
            return 0LL;
        }
        long long r = 1;
        for (long long i = 1; i <= b; ++i) {
            r = r * (a - b + i) / i;
        }
        return r;
    };
    out.h.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int j = 0; j <= n; ++j) {
        long long hj = 0;
        for (int i = 0; i <= j; ++i) {
            const long long term = binom(n - i, j - i) * out.f[static_cast<std::size_t>(i)];
            hj += ((j - i) % 2 == 0) ? term : -term;
        }
        out.h[static_cast<std::size_t>(j)] = hj;
    }
    return out;
}

} // namespace rigidity::gale
