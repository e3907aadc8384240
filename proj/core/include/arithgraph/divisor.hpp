#pragma once

#include <optional>

#include "arithgraph/arith.hpp"
#include "arithgraph/morphism.hpp"

namespace arithgraph {

// Integer labeling of the vertices of a graph, indexed by its fixed order.
struct Divisor {
    Graph graph;
    IntVec values;

    friend bool operator==(const Divisor&, const Divisor&) = default;
};

// Dot product with r; degree is taken against a structure, not the graph.
Int divisor_degree(const Divisor& d, const ArithStructure& st);

// L f, always of degree zero.
Divisor divisor_of_function(const IntVec& f, const ArithStructure& st);

// Witness f with L f = d when d is principal, nullopt otherwise. Witnesses
// are unique only modulo the span of r.
std::optional<IntVec> principal_witness(const Divisor& d, const ArithStructure& st);

// Fiber sums Phi^t d; preserves degree against the pullback structure.
Divisor pushforward(const HarmonicData& h, const Divisor& d);

// Weighted lift Dmu Phi xi; multiplies degree by deg(phi).
Divisor pullback_divisor(const HarmonicData& h, const Divisor& xi);

// s(v) - 2 at each vertex.
Divisor canonical_divisor(const ArithStructure& st);

// 2 mu - 2 + nu on the domain of a non-constant harmonic morphism.
Divisor ramification_divisor(const HarmonicData& h);

// deg_canonical = sum r(v)(s(v) - 2); genus solves 2g - 2 = deg_canonical
// and is reported as an exact rational with an integrality flag.
struct GenusData {
    Int deg_canonical;
    Rational genus;
    bool integral;
};

GenusData genus_data(const ArithStructure& st);

}  // namespace arithgraph
