#pragma once

// Graphs and labelings drawn from worked examples, 0-based.

#include "pinnacle/pinnacle.hpp"

namespace fixtures {

using pinnacle::Graph;
using pinnacle::Labeling;

/// a..e = 0..4.
inline Graph small_five() { return Graph(5, {{0, 1}, {1, 2}, {2, 4}, {4, 3}, {3, 1}, {1, 4}}); }
inline Labeling small_five_lambda1() { return Labeling{5, 2, 3, 1, 4}; }
inline Labeling small_five_lambda2() { return Labeling{1, 3, 5, 2, 4}; }

/// Petersen seeds {A1, A4, B3} and the resulting labels.
inline pinnacle::VertexSet petersen_seeds() { return {0, 3, 7}; }
inline Labeling petersen_seed_labels() { return Labeling{8, 2, 3, 9, 4, 5, 1, 10, 6, 7}; }

/// Petersen labeling with pinnacle set {4,7,10}, and the next one after a swap.
inline Labeling petersen_477() { return Labeling{7, 5, 3, 10, 6, 1, 8, 4, 9, 2}; }
inline Labeling petersen_4810() { return Labeling{8, 5, 3, 10, 6, 1, 7, 4, 9, 2}; }

/// Six vertices a..f with two incomparable bottom sets at k = 3.
inline Graph two_bottoms() { return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 5}, {4, 3}, {2, 4}, {5, 2}}); }

/// Triangle 0-1-2, path 2-3-4-5, triangle 5-6-7.
inline Graph barbell8() { return Graph(8, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 7}}); }
inline Labeling barbell8_labeling() { return Labeling{3, 1, 2, 6, 4, 5, 7, 8}; }

/// v1 v2 v3 r1 v4 v5 r2 v6 = 0..7.
inline Graph two_trees() { return Graph(8, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 7}, {5, 6}, {6, 7}}); }
inline Labeling two_trees_labeling() { return Labeling{2, 1, 4, 5, 3, 7, 8, 6}; }

/// Forest with components of sizes 1, 1, 2, 4.
inline Graph forest_1124() { return Graph(8, {{2, 3}, {4, 5}, {5, 6}, {6, 7}}); }

inline Graph two_edges() { return Graph(4, {{0, 1}, {2, 3}}); }

}  // namespace fixtures
