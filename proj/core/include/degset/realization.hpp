#pragma once

#include <string>
#include <vector>

#include "degset/types.hpp"

namespace degset {

/// Havel-Hakimi construction: repeatedly satisfies the vertex with the
/// largest remaining degree by connecting it to the next-largest remaining
/// vertices, breaking ties by index. Deterministic. Throws NotGraphic when
/// the sequence fails the Erdos-Gallai test.
Graph realize(const DegreeSequence& s);

/// Replaces vertex v by one new vertex per part, the i-th adjacent to a
/// contiguous block of parts[i] of v's sorted neighbors. Edge count is
/// preserved; all other degrees unchanged. Surviving vertices keep their
/// relative order (indices above v shift down by one); new vertices are
/// appended at the end.
Graph split_vertex(const Graph& g, int v, const std::vector<int>& parts);

/// Removes two nonadjacent vertices x, y of equal odd degree d >= 3 and
/// rewires their former edges through one new vertex z and (d-1) further
/// new vertices, all of degree 2. Edge count and all surviving degrees are
/// preserved; the multiplicity of d drops by two. Surviving vertices keep
/// their relative order; new vertices are appended as z, a_1..a_alpha,
/// b_1..b_alpha with alpha = (d-1)/2.
Graph reduce_odd_pair(const Graph& g, int x, int y);

/// Graphviz DOT form; lists every vertex so isolated ones render too.
std::string to_dot(const Graph& g);

/// One "u v" line per edge, 0-indexed.
std::string to_edge_list(const Graph& g);

}  // namespace degset
