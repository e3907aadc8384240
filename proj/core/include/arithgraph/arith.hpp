#pragma once

#include <vector>

#include "arithgraph/graph.hpp"

namespace arithgraph {

// A pair (r, s) of positive integer vertex labelings with gcd over r equal
// to 1 and s(v) r(v) = sum of r over the neighbors of v.  Equivalently the
// Laplacian Diag(s) - A annihilates r; that matrix always has rank n - 1.
struct ArithStructure {
    Graph graph;
    IntVec r, s;

    friend bool operator==(const ArithStructure&, const ArithStructure&) = default;
};

// Checks every invariant and returns the structure, or throws
// NonPositiveEntry / GcdNotOne / DefiningEquationViolated naming the
// offending vertex.
ArithStructure validate_structure(const Graph& g, IntVec r, IntVec s);

// r all ones, s the degree vector.
ArithStructure natural_structure(const Graph& g);

// Derives s(v) = (sum of r over neighbors) / r(v); throws DivisibilityFails
// when some division is not exact.
ArithStructure structure_from_r(const Graph& g, IntVec r);

// Recovers r as the primitive positive kernel vector of Diag(s) - A; throws
// KernelNotPositive or NotRankDeficientByOne when s admits no structure.
ArithStructure structure_from_s(const Graph& g, IntVec s);

IntMatrix laplacian(const ArithStructure& st);

// All structures whose r-entries are bounded by max_r, in lexicographic
// order of the r vector. Exhaustive within the bound, no claim beyond it.
std::vector<ArithStructure> enumerate_structures(const Graph& g, long max_r);

}  // namespace arithgraph
