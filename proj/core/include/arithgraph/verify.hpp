#pragma once

#include <optional>
#include <string>

#include "arithgraph/critical.hpp"
#include "arithgraph/divisor.hpp"
#include "arithgraph/morphism.hpp"

namespace arithgraph {

// Structured pass/fail evidence for one identity on one instance. Both sides
// are recomputed from definitions and compared exactly under `relation`.
struct TheoremReport {
    std::string theorem_id;
    std::string instance_summary;
    std::string lhs, rhs;
    std::string relation;  // "eq", "geq" or "divides"
    bool pass = false;
};

// 2 g2 - 2 = deg(phi)(2 g1 - 2) + sum_v r2(v)(2 mu(v) - 2 + nu(v))
TheoremReport check_riemann_hurwitz(const HarmonicData& h, const ArithStructure& st1);

// K2 = pullback(K1) + Ram, as vectors
TheoremReport check_canonical_ram_identity(const HarmonicData& h, const ArithStructure& st1);

// g2 >= g1 with exact rationals
TheoremReport check_genus_inequality(const HarmonicData& h, const ArithStructure& st1);

// |K1| divides |K2|
TheoremReport check_order_divisibility(const HarmonicData& h, const ArithStructure& st1);

// sum_v r(v) s(v) = sum_v r(v) deg(v)
TheoremReport check_s_deg_lemma(const ArithStructure& st);

// Invariant-factor obstruction to the existence of a non-constant harmonic
// morphism domain -> codomain, on structures enumerated up to max_r. The
// certificate is one-directional: its absence says nothing about existence,
// and the bound limits which structures are sampled.
struct ObstructionReport {
    long max_r = 0;
    std::size_t codomain_structures = 0;
    std::size_t domain_structures = 0;
    std::size_t codomain_max_factors = 0;
    std::size_t domain_max_factors = 0;
    bool obstruction_certified_within_bound = false;
    std::optional<std::size_t> harmonic_morphisms_found;  // cross-check when feasible
};

ObstructionReport morphism_obstruction(const Graph& domain, const Graph& codomain, long max_r);

}  // namespace arithgraph
