#pragma once

// Simple n-polytopes with n+3 facets, presented by a weighted Gale diagram on a
// regular (2k+1)-gon centred at the origin.
//
// Facet F is assigned a polygon vertex label(F) in 1..2k+1, and weight a_v counts
// the facets over vertex v. A facet set I is a face of the polytope exactly when
// the origin lies in the convex hull of the labels of the facets NOT in I.

#include <cstdint>
#include <string>
#include <vector>

namespace rigidity::gale {

using Weights = std::vector<int>;

/// Bitmask over facet indices 0..m-1.
using FacetSet = std::uint64_t;

inline constexpr int kMaxFacets = 64;

class GaleDiagram {
  public:
    /// Validates the weight list: odd length >= 5, all entries >= 1, at most 64 facets.
    explicit GaleDiagram(Weights weights);

    int k() const { return static_cast<int>(weights_.size() - 1) / 2; }
    int vertex_count() const { return static_cast<int>(weights_.size()); }
    const Weights& weights() const { return weights_; }
    /// Facet count.
    int m() const { return m_; }
    /// Dimension of the polytope.
    int n() const { return m_ - 3; }

    friend bool operator==(const GaleDiagram&, const GaleDiagram&) = default;

  private:
    Weights weights_;
    int m_ = 0;
};

/// Lexicographically greatest image under the dihedral group of the polygon.
Weights canonical_weights(const Weights& weights);

/// Whether the origin lies in conv{ polygon vertex l : l in labels } for the regular
/// (2k+1)-gon. Labels are 1-based; the empty set gives false.
bool origin_in_hull(const std::vector<int>& labels, int k);

struct Facet {
    int label = 0;  // polygon vertex, 1-based
    int index = 0;  // 1-based position among the facets over the same vertex
};

/// Ordered facets; facet i of the polytope is facets[i].
struct FacetLabeling {
    std::vector<Facet> facets;

    /// "F1_2" for the second facet over vertex 1, "F5" when vertex 5 carries one facet.
    std::string name(int facet, const GaleDiagram& diagram) const;
    std::vector<int> labels() const;
};

/// Pinned orderings for the two reference polytopes when the weights match exactly:
///   [3,1,2,1,1]: F1_1 F1_2 F1_3 F3_1 F3_2 F5 F2 F4
///   [2,2,2,1,1]: F1_1 F1_2 F2_1 F3_1 F3_2 F5 F2_2 F4
/// Otherwise facets are sorted by (label, index) and the lexicographically first
/// maximal face is moved to the front, keeping relative order inside both parts.
FacetLabeling default_labeling(const GaleDiagram& diagram);

/// Labeling in plain (label, index) order, without the vertex-first normalization.
FacetLabeling sorted_labeling(const GaleDiagram& diagram);

bool is_face(FacetSet facets, const GaleDiagram& diagram, const FacetLabeling& labeling);

/// e_1..e_{2k+1}: e_i holds every facet whose label lies in {i, ..., i+k-1} (mod 2k+1).
std::vector<FacetSet> minimal_nonfaces(const GaleDiagram& diagram, const FacetLabeling& labeling);

struct FaceStructure {
    int m = 0;
    int n = 0;
    std::vector<FacetSet> minimal_nonfaces;
    /// Vertices of the polytope (n-element faces), sorted by their sorted index lists.
    std::vector<FacetSet> maximal_faces;

    bool contains_nonface(FacetSet s) const;
    bool is_face(FacetSet s) const { return !contains_nonface(s); }
};

FaceStructure face_structure(const GaleDiagram& diagram, const FacetLabeling& labeling);

struct FaceCounts {
    /// f[i] = number of faces with i facets, i = 0..n (f[0] = 1 for the empty face).
    std::vector<long long> f;
    /// h_0..h_n.
    std::vector<long long> h;
};

/// Exhaustive subset enumeration through is_face; practical for m <= 24.
FaceCounts face_counts(const GaleDiagram& diagram);

/// 0-based sorted indices of a facet set.
std::vector<int> members(FacetSet s);
FacetSet make_set(const std::vector<int>& indices);

} // namespace rigidity::gale
