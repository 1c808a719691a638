#include "rigidity/charmat.hpp"

#include "rigidity/error.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

#include <omp.h>

namespace rigidity::charmat {

CharMatrixZ2::CharMatrixZ2(int n, std::vector<Column> columns) : n_(n), columns_(std::move(columns)) {
    if (n < 1 || n > kMaxRows) {
        throw UnsupportedShape("characteristic matrices need 1..31 rows");
    }
    for (Column c : columns_) {
        if ((c >> n) != 0) {
            throw InvalidInput("column has bits beyond row n");
        }
    }
}

CharMatrixZ2 CharMatrixZ2::with_identity_prefix(int n, const Block& block) {
    std::vector<Column> cols;
    cols.reserve(static_cast<std::size_t>(n) + block.size());
    for (int i = 0; i < n; ++i) {
        cols.push_back(Column{1} << i);
    }
    cols.insert(cols.end(), block.begin(), block.end());
    return CharMatrixZ2(n, std::move(cols));
}

bool CharMatrixZ2::has_identity_prefix() const {
    if (m() < n_) {
        return false;
    }
    for (int i = 0; i < n_; ++i) {
        if (columns_[static_cast<std::size_t>(i)] != (Column{1} << i)) {
            return false;
        }
    }
    return true;
}

Block CharMatrixZ2::block() const {
    return Block(columns_.begin() + std::min<std::ptrdiff_t>(n_, m()), columns_.end());
}

std::vector<std::string> block_rows(const Block& block, int n) {
    std::vector<std::string> rows(static_cast<std::size_t>(n), std::string(block.size(), '0'));
    for (std::size_t c = 0; c < block.size(); ++c) {
        for (int r = 0; r < n; ++r) {
            if ((block[c] >> r) & 1U) {
                rows[static_cast<std::size_t>(r)][c] = '1';
            }
        }
    }
    return rows;
}

Block block_from_rows(std::span<const std::string> rows) {
    if (rows.empty() || rows.size() > static_cast<std::size_t>(kMaxRows)) {
        throw InvalidInput("block needs 1..31 rows");
    }
    const std::size_t width = rows.front().size();
    Block block(width, 0);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != width) {
            throw InvalidInput("ragged block rows");
        }
        for (std::size_t c = 0; c < width; ++c) {
            if (rows[r][c] == '1') {
                block[c] |= Column{1} << r;
            } else if (rows[r][c] != '0') {
                throw InvalidInput("block rows may only contain 0 and 1");
            }
        }
    }
    return block;
}

int column_rank(std::span<const Column> columns) {
    // basis[b] holds a vector whose highest set bit is b.
    std::array<Column, 32> basis{};
    int rank = 0;
    for (Column v : columns) {
        while (v != 0) {
            const int top = 31 - std::countl_zero(v);
            if (basis[static_cast<std::size_t>(top)] == 0) {
                basis[static_cast<std::size_t>(top)] = v;
                ++rank;
                break;
            }
            v ^= basis[static_cast<std::size_t>(top)];
        }
    }
    return rank;
}

namespace {

bool face_spans(gale::FacetSet face, std::span<const Column> columns, int n) {
    std::array<Column, 64> picked{};
    std::size_t count = 0;
    for (gale::FacetSet s = face; s != 0; s &= s - 1) {
        picked[count++] = columns[static_cast<std::size_t>(std::countr_zero(s))];
    }
    return column_rank(std::span<const Column>(picked.data(), count)) == n;
}

// Maximal faces grouped by their highest facet index, so a face is tested as soon as
// its last column is assigned.
struct SearchPlan {
    int n = 0;
    int m = 0;
    std::vector<std::vector<gale::FacetSet>> faces_closing_at;
};

SearchPlan make_plan(const gale::FaceStructure& faces) {
    if (faces.n < 1 || faces.n > kMaxRows) {
        throw UnsupportedShape("characteristic matrices need 1..31 rows");
    }
    const gale::FacetSet prefix = (gale::FacetSet{1} << faces.n) - 1;
    if (!faces.is_face(prefix)) {
        throw NormalizationError("the first n facets do not form a vertex; reorder the facets");
    }
    SearchPlan plan;
    plan.n = faces.n;
    plan.m = faces.m;
    plan.faces_closing_at.resize(static_cast<std::size_t>(faces.m));
    for (gale::FacetSet f : faces.maximal_faces) {
        const int last = 63 - std::countl_zero(f);
        plan.faces_closing_at[static_cast<std::size_t>(last)].push_back(f);
    }
    return plan;
}

void backtrack(const SearchPlan& plan, std::vector<Column>& columns, int next, std::vector<Block>& out) {
    if (next == plan.m) {
        out.emplace_back(columns.begin() + plan.n, columns.end());
        return;
    }
    const Column limit = Column{1} << plan.n;
    for (Column c = 1; c < limit; ++c) {
        columns[static_cast<std::size_t>(next)] = c;
        const auto& closing = plan.faces_closing_at[static_cast<std::size_t>(next)];
        const bool ok = std::all_of(closing.begin(), closing.end(),
                                    [&](gale::FacetSet f) { return face_spans(f, columns, plan.n); });
        if (ok) {
            backtrack(plan, columns, next + 1, out);
        }
    }
    columns[static_cast<std::size_t>(next)] = 0;
}

std::vector<Column> identity_prefix(const SearchPlan& plan) {
    std::vector<Column> columns(static_cast<std::size_t>(plan.m), 0);
    for (int i = 0; i < plan.n; ++i) {
        columns[static_cast<std::size_t>(i)] = Column{1} << i;
    }
    return columns;
}

} // namespace

bool is_characteristic(const CharMatrixZ2& matrix, const gale::FaceStructure& faces) {
    if (matrix.n() != faces.n || matrix.m() != faces.m) {
        throw InvalidInput("matrix shape " + std::to_string(matrix.n()) + "x" + std::to_string(matrix.m()) +
                           " does not match the polytope (" + std::to_string(faces.n) + "x" +
                           std::to_string(faces.m) + ")");
    }
    const auto& cols = matrix.columns();
    if (std::any_of(cols.begin(), cols.end(), [](Column c) { return c == 0; })) {
        return false;
    }
    return std::all_of(faces.maximal_faces.begin(), faces.maximal_faces.end(),
                       [&](gale::FacetSet f) { return face_spans(f, cols, faces.n); });
}

std::vector<Block> enumerate_charmats_serial(const gale::FaceStructure& faces) {
    const SearchPlan plan = make_plan(faces);
    std::vector<Block> out;
    if (plan.m == plan.n) {
        out.emplace_back();
        return out;
    }
    auto columns = identity_prefix(plan);
    backtrack(plan, columns, plan.n, out);
    return out;
}

std::vector<Block> enumerate_charmats(const gale::FaceStructure& faces, int jobs) {
    const SearchPlan plan = make_plan(faces);
    if (plan.m == plan.n) {
        return {Block{}};
    }
    const int branches = (1 << plan.n) - 1;
    std::vector<std::vector<Block>> per_branch(static_cast<std::size_t>(branches));
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (int b = 0; b < branches; ++b) {
        auto columns = identity_prefix(plan);
        const Column c = static_cast<Column>(b + 1);
        columns[static_cast<std::size_t>(plan.n)] = c;
        const auto& closing = plan.faces_closing_at[static_cast<std::size_t>(plan.n)];
        const bool ok = std::all_of(closing.begin(), closing.end(),
                                    [&](gale::FacetSet f) { return face_spans(f, columns, plan.n); });
        if (ok) {
            backtrack(plan, columns, plan.n + 1, per_branch[static_cast<std::size_t>(b)]);
        }
    }

    std::vector<Block> out;
    for (auto& part : per_branch) {
        std::move(part.begin(), part.end(), std::back_inserter(out));
    }
    return out;
}

std::vector<Permutation> face_automorphisms(const gale::FaceStructure& faces) {
    if (faces.m > 10) {
        throw UnsupportedShape("automorphism search is brute force and limited to 10 facets");
    }
    auto sorted = faces.minimal_nonfaces;
    std::sort(sorted.begin(), sorted.end());
    Permutation perm(static_cast<std::size_t>(faces.m));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Permutation> out;
    do {
        std::vector<gale::FacetSet> image;
        image.reserve(sorted.size());
        for (gale::FacetSet e : sorted) {
            gale::FacetSet mapped = 0;
            for (gale::FacetSet s = e; s != 0; s &= s - 1) {
                mapped |= gale::FacetSet{1} << perm[static_cast<std::size_t>(std::countr_zero(s))];
            }
            image.push_back(mapped);
        }
        std::sort(image.begin(), image.end());
        if (image == sorted) {
            out.push_back(perm);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

Block apply_automorphism(const Block& block, const gale::FaceStructure& faces, const Permutation& perm) {
    const int n = faces.n;
    const int m = faces.m;
    if (static_cast<int>(perm.size()) != m || static_cast<int>(block.size()) != m - n) {
        throw InvalidInput("permutation or block does not match the polytope");
    }
    const auto full = CharMatrixZ2::with_identity_prefix(n, block).columns();
    std::vector<Column> moved(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i) {
        moved[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = full[static_cast<std::size_t>(i)];
    }
    // Coordinates of each column in the basis formed by the new first n columns.
    // basis[b]: vector with top bit b, combo[b]: which prefix columns sum to it.
    std::array<Column, 32> basis{};
    std::array<Column, 32> combo{};
    for (int j = 0; j < n; ++j) {
        Column v = moved[static_cast<std::size_t>(j)];
        Column used = Column{1} << j;
        while (v != 0) {
            const int top = 31 - std::countl_zero(v);
            if (basis[static_cast<std::size_t>(top)] == 0) {
                basis[static_cast<std::size_t>(top)] = v;
                combo[static_cast<std::size_t>(top)] = used;
                break;
            }
            v ^= basis[static_cast<std::size_t>(top)];
            used ^= combo[static_cast<std::size_t>(top)];
        }
        if (v == 0) {
            throw InvalidInput("permutation does not send the first vertex to a vertex");
        }
    }
    Block out;
    for (int i = n; i < m; ++i) {
        Column v = moved[static_cast<std::size_t>(i)];
        Column coords = 0;
        while (v != 0) {
            const int top = 31 - std::countl_zero(v);
            v ^= basis[static_cast<std::size_t>(top)];
            coords ^= combo[static_cast<std::size_t>(top)];
        }
        out.push_back(coords);
    }
    return out;
}

} // namespace rigidity::charmat
