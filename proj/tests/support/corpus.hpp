#pragma once

#include <random>
#include <vector>

#include "arithgraph/families.hpp"
#include "arithgraph/graph.hpp"

namespace testsupport {

using Rng = std::mt19937_64;

inline unsigned long rng_below(Rng& rng, unsigned long n) { return rng() % n; }

// 8-vertex strip of two quadrilaterals and two triangles; under the ordering
// v1..v8 every vertex is adjacent to the one two places later and to nothing
// beyond, which forces all critical groups on it to be cyclic.
arithgraph::Graph strip8_graph();

// Wheel on 7 vertices plus a chord between the opposite rim vertices v1, v4.
arithgraph::Graph w7_chord_graph();

// Uniform edge coin flips, rejecting disconnected or edgeless samples.
arithgraph::Graph random_connected_graph(Rng& rng, int n);

arithgraph::IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi);

}  // namespace testsupport
