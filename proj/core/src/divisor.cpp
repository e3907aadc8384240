#include "arithgraph/divisor.hpp"

#include <utility>

#include "arithgraph/errors.hpp"
#include "arithgraph/snf.hpp"

namespace arithgraph {

namespace {

void require_same_graph(const Graph& a, const Graph& b, const char* what) {
    if (a != b) fail("GraphMismatch", std::string(what) + " lives on a different graph");
}

}  // namespace

Int divisor_degree(const Divisor& d, const ArithStructure& st) {
    require_same_graph(d.graph, st.graph, "divisor");
    return dot(d.values, st.r);
}

Divisor divisor_of_function(const IntVec& f, const ArithStructure& st) {
    if (f.size() != st.graph.vertex_count())
        fail("LengthMismatch", "function vector has wrong length");
    return Divisor{st.graph, laplacian(st) * f};
}

std::optional<IntVec> principal_witness(const Divisor& d, const ArithStructure& st) {
    require_same_graph(d.graph, st.graph, "divisor");
    return solve_integer(laplacian(st), d.values);
}

Divisor pushforward(const HarmonicData& h, const Divisor& d) {
    require_same_graph(d.graph, h.morphism.domain(), "divisor");
    const std::size_t n1 = h.morphism.codomain().vertex_count();
    IntVec out(n1);
    for (std::size_t v = 0; v < d.values.size(); ++v)
        out[static_cast<std::size_t>(h.morphism(static_cast<int>(v)))] += d.values[v];
    return Divisor{h.morphism.codomain(), std::move(out)};
}

Divisor pullback_divisor(const HarmonicData& h, const Divisor& xi) {
    if (h.constant) fail("ConstantMorphism", "cannot pull back along a constant morphism");
    require_same_graph(xi.graph, h.morphism.codomain(), "divisor");
    const std::size_t n2 = h.morphism.domain().vertex_count();
    IntVec out(n2);
    for (std::size_t v = 0; v < n2; ++v)
        out[v] = h.mu[v] * xi.values[static_cast<std::size_t>(h.morphism(static_cast<int>(v)))];
    return Divisor{h.morphism.domain(), std::move(out)};
}

Divisor canonical_divisor(const ArithStructure& st) {
    IntVec values(st.s);
    for (Int& x : values) x -= 2;
    return Divisor{st.graph, std::move(values)};
}

Divisor ramification_divisor(const HarmonicData& h) {
    if (h.constant) fail("ConstantMorphism", "ramification requires a non-constant morphism");
    IntVec values(h.mu.size());
    for (std::size_t v = 0; v < values.size(); ++v) values[v] = 2 * h.mu[v] - 2 + h.nu[v];
    return Divisor{h.morphism.domain(), std::move(values)};
}

GenusData genus_data(const ArithStructure& st) {
    Int deg_k = 0;
    for (std::size_t v = 0; v < st.r.size(); ++v) deg_k += st.r[v] * (st.s[v] - 2);
    Rational genus(deg_k + 2, 2);
    genus.canonicalize();
    const bool integral = mpz_even_p(deg_k.get_mpz_t()) != 0;
    return GenusData{std::move(deg_k), std::move(genus), integral};
}

}  // namespace arithgraph
