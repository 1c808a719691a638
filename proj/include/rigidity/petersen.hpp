#pragma once

// Pentagon weight vectors with the same bigraded Betti numbers are exactly the
// all-positive label sequences read around 5-cycles of a labeled Petersen graph.
//
// Vertex layout: 0..4 are the outer pentagon carrying a, b, c, d, e; inner vertex
// 5+i hangs off outer vertex i by a spoke and carries
//   5: c+d-a   6: d+e-b   7: e+a-c   8: a+b-d   9: b+c-e
// and the inner vertices form the pentagram 5-7-9-6-8-5.

#include "rigidity/gale.hpp"

#include <array>
#include <vector>

namespace rigidity::petersen {

using Labels = std::array<int, 10>;
using Cycle = std::array<int, 5>;

/// Undirected edges of the graph, each as (u, v) with u < v.
const std::vector<std::pair<int, int>>& edges();
bool adjacent(int u, int v);

/// `weights` must have length 5 (UnsupportedShape otherwise).
Labels petersen_labels(const gale::Weights& weights);

/// The 12 undirected 5-cycles, each starting at its smallest vertex and traversed in
/// the direction whose second vertex is smaller; sorted.
const std::vector<Cycle>& five_cycles();

/// Label sequences for every cycle read in both directions from its canonical start:
/// 24 sequences, one per cycle and direction, i.e. all readings up to rotation.
std::vector<gale::Weights> directed_readings(const gale::Weights& weights);

struct TorClass {
    /// Canonical weight vectors, sorted ascending and deduplicated.
    std::vector<gale::Weights> members;
    /// Readings with a zero or negative label, as read (sorted, deduplicated).
    std::vector<gale::Weights> rejected;
};

TorClass tor_class_detail(const gale::Weights& weights);
std::vector<gale::Weights> tor_class(const gale::Weights& weights);

} // namespace rigidity::petersen
