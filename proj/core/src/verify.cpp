#include "arithgraph/verify.hpp"

#include <algorithm>
#include <sstream>

#include "arithgraph/errors.hpp"

namespace arithgraph {

namespace {

std::string map_summary(const GraphMorphism& m) {
    std::ostringstream os;
    os << "phi=[";
    for (std::size_t v = 0; v < m.vertex_map().size(); ++v) {
        if (v) os << ',';
        os << m.codomain().label(m.vertex_map()[v]);
    }
    os << ']';
    return os.str();
}

std::string instance_summary(const HarmonicData& h, const ArithStructure& st1) {
    std::ostringstream os;
    os << "n2=" << h.morphism.domain().vertex_count() << " n1=" << h.morphism.codomain().vertex_count()
       << " " << map_summary(h.morphism) << " r1=" << to_string(st1.r);
    return os.str();
}

void require_usable(const HarmonicData& h, const ArithStructure& st1) {
    if (h.constant) fail("ConstantMorphism", "checks require a non-constant morphism");
    if (st1.graph != h.morphism.codomain())
        fail("GraphMismatch", "structure does not live on the morphism codomain");
}

}  // namespace

TheoremReport check_riemann_hurwitz(const HarmonicData& h, const ArithStructure& st1) {
    require_usable(h, st1);
    const ArithStructure st2 = pullback_structure(h, st1);

    const Int lhs = genus_data(st2).deg_canonical;  // 2 g2 - 2
    const Int rhs = h.degree * genus_data(st1).deg_canonical +
                    dot(st2.r, ramification_divisor(h).values);

    return TheoremReport{"riemann_hurwitz", instance_summary(h, st1), lhs.get_str(), rhs.get_str(),
                         "eq", lhs == rhs};
}

TheoremReport check_canonical_ram_identity(const HarmonicData& h, const ArithStructure& st1) {
    require_usable(h, st1);
    const ArithStructure st2 = pullback_structure(h, st1);

    const IntVec lhs = canonical_divisor(st2).values;
    const IntVec rhs =
        pullback_divisor(h, canonical_divisor(st1)).values + ramification_divisor(h).values;

    return TheoremReport{"canonical_ramification", instance_summary(h, st1), to_string(lhs),
                         to_string(rhs), "eq", lhs == rhs};
}

TheoremReport check_genus_inequality(const HarmonicData& h, const ArithStructure& st1) {
    require_usable(h, st1);
    const ArithStructure st2 = pullback_structure(h, st1);

    const Rational g2 = genus_data(st2).genus;
    const Rational g1 = genus_data(st1).genus;

    return TheoremReport{"genus_inequality", instance_summary(h, st1), g2.get_str(), g1.get_str(),
                         "geq", g2 >= g1};
}

TheoremReport check_order_divisibility(const HarmonicData& h, const ArithStructure& st1) {
    require_usable(h, st1);
    const ArithStructure st2 = pullback_structure(h, st1);

    const Int order1 = critical_group(st1).order();
    const Int order2 = critical_group(st2).order();

    return TheoremReport{"order_divisibility", instance_summary(h, st1), order1.get_str(),
                         order2.get_str(), "divides", order2 % order1 == 0};
}

TheoremReport check_s_deg_lemma(const ArithStructure& st) {
    const Int lhs = dot(st.r, st.s);
    const Int rhs = dot(st.r, st.graph.degree_vector());
    std::ostringstream os;
    os << "n=" << st.graph.vertex_count() << " r=" << to_string(st.r);
    return TheoremReport{"s_deg", os.str(), lhs.get_str(), rhs.get_str(), "eq", lhs == rhs};
}

ObstructionReport morphism_obstruction(const Graph& domain, const Graph& codomain, long max_r) {
    ObstructionReport report;
    report.max_r = max_r;

    std::size_t codomain_max = 0;
    const auto codomain_structures = enumerate_structures(codomain, max_r);
    for (const ArithStructure& st : codomain_structures)
        codomain_max = std::max(codomain_max, critical_group(st).factor_count());

    std::size_t domain_max = 0;
    const auto domain_structures = enumerate_structures(domain, max_r);
    for (const ArithStructure& st : domain_structures)
        domain_max = std::max(domain_max, critical_group(st).factor_count());

    report.codomain_structures = codomain_structures.size();
    report.domain_structures = domain_structures.size();
    report.codomain_max_factors = codomain_max;
    report.domain_max_factors = domain_max;
    report.obstruction_certified_within_bound = codomain_max > domain_max;

    // Exhaustive morphism search as a cross-check where the map space is small.
    double space = 1.0;
    for (std::size_t v = 0; v < domain.vertex_count(); ++v)
        space *= static_cast<double>(codomain.vertex_count());
    if (space <= 2e7) {
        report.harmonic_morphisms_found =
            enumerate_harmonic_morphisms(domain, codomain, false).size();
    }
    return report;
}

}  // namespace arithgraph
