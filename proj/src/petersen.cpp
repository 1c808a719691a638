#include "rigidity/petersen.hpp"

#include "rigidity/error.hpp"

#include <algorithm>

namespace rigidity::petersen {

const std::vector<std::pair<int, int>>& edges() {
    static const std::vector<std::pair<int, int>> list = {
        {0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},  // outer pentagon
        {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},  // spokes
        {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9},  // inner pentagram
    };
    return list;
}

bool adjacent(int u, int v) {
    const auto key = std::minmax(u, v);
    const auto& e = edges();
    return std::find(e.begin(), e.end(), std::pair<int, int>(key.first, key.second)) != e.end();
}

Labels petersen_labels(const gale::Weights& weights) {
    if (weights.size() != 5) {
        throw UnsupportedShape("Petersen labels are defined for pentagon weights");
    }
    const int a = weights[0], b = weights[1], c = weights[2], d = weights[3], e = weights[4];
    return {a, b, c, d, e, c + d - a, d + e - b, e + a - c, a + b - d, b + c - e};
}

namespace {

void extend(std::vector<int>& path, std::vector<bool>& used, std::vector<Cycle>& out) {
    if (path.size() == 5) {
        // Close the cycle; keep the direction with the smaller second vertex.
        if (adjacent(path.back(), path.front()) && path[1] < path[4]) {
            out.push_back({path[0], path[1], path[2], path[3], path[4]});
        }
        return;
    }
    for (int v = path.front() + 1; v < 10; ++v) {
        if (!used[static_cast<std::size_t>(v)] && adjacent(path.back(), v)) {
            used[static_cast<std::size_t>(v)] = true;
            path.push_back(v);
            extend(path, used, out);
            path.pop_back();
            used[static_cast<std::size_t>(v)] = false;
        }
    }
}

} // namespace

const std::vector<Cycle>& five_cycles() {
    static const std::vector<Cycle> cycles = [] {
        std::vector<Cycle> out;
        for (int start = 0; start < 10; ++start) {
            std::vector<int> path{start};
            std::vector<bool> used(10, false);
            used[static_cast<std::size_t>(start)] = true;
            extend(path, used, out);
        }
        std::sort(out.begin(), out.end());
        return out;
    }();
    return cycles;
}

std::vector<gale::Weights> directed_readings(const gale::Weights& weights) {
    const Labels labels = petersen_labels(weights);
    std::vector<gale::Weights> out;
    for (const Cycle& cyc : five_cycles()) {
        gale::Weights forward, backward;
        for (int i = 0; i < 5; ++i) {
            forward.push_back(labels[static_cast<std::size_t>(cyc[static_cast<std::size_t>(i)])]);
            backward.push_back(labels[static_cast<std::size_t>(cyc[static_cast<std::size_t>((5 - i) % 5)])]);
        }
        out.push_back(std::move(forward));
        out.push_back(std::move(backward));
    }
    return out;
}

TorClass tor_class_detail(const gale::Weights& weights) {
    if (weights.size() != 5) {
        throw UnsupportedShape("Tor classes via the Petersen graph are pentagon-only");
    }
    const gale::GaleDiagram validated(weights);
    TorClass out;
    for (auto& reading : directed_readings(weights)) {
        const bool positive = std::all_of(reading.begin(), reading.end(), [](int w) { return w >= 1; });
        if (positive) {
            out.members.push_back(gale::canonical_weights(reading));
        } else {
            out.rejected.push_back(std::move(reading));
        }
    }
    for (auto* list : {&out.members, &out.rejected}) {
        std::sort(list->begin(), list->end());
        list->erase(std::unique(list->begin(), list->end()), list->end());
    }
    return out;
}

std::vector<gale::Weights> tor_class(const gale::Weights& weights) { return tor_class_detail(weights).members; }

} // namespace rigidity::petersen
