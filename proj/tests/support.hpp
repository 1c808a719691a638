#pragma once

// Independent oracles shared by the unit tests and the acceptance binary. They go
// through floating-point geometry and plain brute force rather than the library's
// own shortcuts.

#include "rigidity/charmat.hpp"
#include "rigidity/cohomology.hpp"
#include "rigidity/gale.hpp"
#include "rigidity/gf2.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <vector>

namespace support {

using namespace rigidity;

inline gale::FaceStructure faces_of(const gale::Weights& w) {
    const gale::GaleDiagram d(w);
    return gale::face_structure(d, gale::default_labeling(d));
}

inline std::vector<cohomology::GradedQuotient> quotients_of(const gale::FaceStructure& faces,
                                                            const std::vector<charmat::Block>& blocks) {
    std::vector<cohomology::GradedQuotient> out;
    for (const auto& b : blocks) {
        out.push_back(
            cohomology::quotient_presentation(faces, charmat::CharMatrixZ2::with_identity_prefix(faces.n, b)));
    }
    return out;
}

inline std::vector<cohomology::GradedQuotient> quotients_of(const gale::Weights& w) {
    const auto faces = faces_of(w);
    return quotients_of(faces, charmat::enumerate_charmats_serial(faces));
}

/// Origin in the convex hull of polygon vertices `labels` (1-based) of a regular
/// (2k+1)-gon, by Caratheodory: some triangle (or the points themselves) contains it.
/// Odd polygons have no antipodal vertex pairs, so the origin never sits on a chord.
inline bool origin_in_hull_geometric(const std::vector<int>& labels, int k) {
    const int v = 2 * k + 1;
    std::vector<std::pair<double, double>> pts;
    for (int l : std::set<int>(labels.begin(), labels.end())) {
        const double a = 2.0 * std::numbers::pi * (l - 1) / v;
        pts.emplace_back(std::cos(a), std::sin(a));
    }
    auto cross = [](auto p, auto q) { return p.first * q.second - p.second * q.first; };
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            for (std::size_t l = j + 1; l < pts.size(); ++l) {
                // Side of the origin relative to each directed edge p->q is the sign of cross(p, q).
                const double s1 = cross(pts[i], pts[j]);
                const double s2 = cross(pts[j], pts[l]);
                const double s3 = cross(pts[l], pts[i]);
                if ((s1 > 0 && s2 > 0 && s3 > 0) || (s1 < 0 && s2 < 0 && s3 < 0)) {
                    return true;
                }
            }
        }
    }
    return false;
}

/// Face test straight from the definition, with the geometric hull oracle.
inline bool is_face_geometric(gale::FacetSet s, const gale::GaleDiagram& d, const gale::FacetLabeling& lab) {
    std::vector<int> labels;
    for (int i = 0; i < d.m(); ++i) {
        if (((s >> i) & 1U) == 0) {
            labels.push_back(lab.facets[static_cast<std::size_t>(i)].label);
        }
    }
    return origin_in_hull_geometric(labels, d.k());
}

/// Inclusion-minimal non-faces by scanning every subset of facets.
inline std::vector<gale::FacetSet> brute_force_minimal_nonfaces(const gale::GaleDiagram& d,
                                                                const gale::FacetLabeling& lab) {
    const int m = d.m();
    std::vector<char> face(std::size_t{1} << m);
    for (gale::FacetSet s = 0; s < (gale::FacetSet{1} << m); ++s) {
        face[s] = is_face_geometric(s, d, lab) ? 1 : 0;
    }
    std::vector<gale::FacetSet> out;
    for (gale::FacetSet s = 0; s < (gale::FacetSet{1} << m); ++s) {
        if (face[s]) {
            continue;
        }
        bool minimal = true;
        for (int i = 0; i < m && minimal; ++i) {
            if ((s >> i) & 1U) {
                minimal = face[s & ~(gale::FacetSet{1} << i)] != 0;
            }
        }
        if (minimal) {
            out.push_back(s);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Every completion of the identity prefix whose maximal-face minors are invertible,
/// checked with the generic GF(2) rank rather than the enumerator's column basis.
inline std::vector<charmat::Block> brute_force_charmats(const gale::FaceStructure& faces) {
    const int n = faces.n;
    const int extra = faces.m - n;
    const charmat::Column top = (charmat::Column{1} << n) - 1;
    std::vector<charmat::Block> out;
    charmat::Block block(static_cast<std::size_t>(extra), 1);
    while (true) {
        std::vector<charmat::Column> cols;
        for (int i = 0; i < n; ++i) {
            cols.push_back(charmat::Column{1} << i);
        }
        cols.insert(cols.end(), block.begin(), block.end());
        bool ok = true;
        for (gale::FacetSet f : faces.maximal_faces) {
            std::vector<std::string> rows(static_cast<std::size_t>(n));
            for (int r = 0; r < n; ++r) {
                for (int c : gale::members(f)) {
                    rows[static_cast<std::size_t>(r)] += ((cols[static_cast<std::size_t>(c)] >> r) & 1U) ? '1' : '0';
                }
            }
            if (gf2::rank(gf2::BitMatrix::from_strings(rows)) != static_cast<std::size_t>(n)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            out.push_back(block);
        }
        std::size_t pos = block.size();
        while (pos > 0 && block[pos - 1] == top) {
            block[pos - 1] = 1;
            --pos;
        }
        if (pos == 0) {
            break;
        }
        ++block[pos - 1];
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Canonical pentagon weight vectors with entries >= 1 and total <= max_total.
inline std::vector<gale::Weights> pentagons_up_to(int max_total) {
    std::set<gale::Weights> seen;
    for (int a = 1; a <= max_total; ++a)
        for (int b = 1; a + b <= max_total; ++b)
            for (int c = 1; a + b + c <= max_total; ++c)
                for (int d = 1; a + b + c + d <= max_total; ++d)
                    for (int e = 1; a + b + c + d + e <= max_total; ++e) {
                        seen.insert(gale::canonical_weights({a, b, c, d, e}));
                    }
    return {seen.begin(), seen.end()};
}

} // namespace support
