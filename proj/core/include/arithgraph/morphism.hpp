#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "arithgraph/arith.hpp"
#include "arithgraph/graph.hpp"

namespace arithgraph {

// Vertex map between two graphs sending every edge either to an edge
// (horizontal) or to a single vertex (vertical).
class GraphMorphism {
public:
    static GraphMorphism build(Graph domain, Graph codomain,
                               const std::map<std::string, std::string>& vertex_map);
    static GraphMorphism build_indexed(Graph domain, Graph codomain, std::vector<int> vertex_map);

    const Graph& domain() const { return domain_; }
    const Graph& codomain() const { return codomain_; }
    const std::vector<int>& vertex_map() const { return map_; }
    int operator()(int v) const { return map_[static_cast<std::size_t>(v)]; }

    bool is_constant() const;
    bool is_vertical(const Edge& e) const { return (*this)(e.first) == (*this)(e.second); }

    // n2 x n1 zero-one matrix with a single 1 per row, at column phi(v).
    IntMatrix vertex_map_matrix() const;

    friend bool operator==(const GraphMorphism&, const GraphMorphism&) = default;

private:
    GraphMorphism() = default;

    Graph domain_, codomain_;
    std::vector<int> map_;
};

// First edge mapped to a distinct non-adjacent pair, if any; nullopt means
// the map is a graph morphism.
std::optional<Edge> morphism_violation(const Graph& domain, const Graph& codomain,
                                       const std::vector<int>& vertex_map);

// Multiplicity data of a harmonic morphism. For a constant morphism mu is
// zero, nu is the degree vector and degree is 0.
struct HarmonicData {
    GraphMorphism morphism;
    IntVec mu;      // horizontal multiplicities
    IntVec nu;      // vertical multiplicities
    Int degree;     // common edge preimage count
    bool constant;

    IntMatrix phi_matrix() const { return morphism.vertex_map_matrix(); }
};

// Vertex at which two codomain edges see different local counts.
struct NotHarmonicWitness {
    int vertex;
    Edge f1, f2;  // codomain edges incident to the image vertex
    long count_f1, count_f2;

    std::string describe(const GraphMorphism& m) const;
};

std::variant<HarmonicData, NotHarmonicWitness> analyze_harmonic(const GraphMorphism& m);

// As analyze_harmonic but throws NotHarmonic with the witness description.
HarmonicData require_harmonic(const GraphMorphism& m);

// Exact recomputation of the two harmonic matrix identities
//   A2 Phi = Dnu Phi + Dmu Phi A1      (adjacency identity)
//   Phi^t Dmu Phi = deg I              (degree identity)
struct MatrixIdentityReport {
    bool adjacency_identity = false;
    bool degree_identity = false;

    struct Mismatch {
        std::string identity;
        std::size_t row, col;
        Int lhs, rhs;
    };
    std::optional<Mismatch> first_mismatch;

    bool pass() const { return adjacency_identity && degree_identity; }
};

MatrixIdentityReport verify_matrix_identities(const HarmonicData& h);

// Visits every graph morphism domain -> codomain in lexicographic order of
// the vertex-map array, pruning partial maps on the first violated edge.
void for_each_morphism(const Graph& domain, const Graph& codomain,
                       const std::function<void(const std::vector<int>&)>& visit);

std::vector<GraphMorphism> enumerate_morphisms(const Graph& domain, const Graph& codomain);

std::vector<HarmonicData> enumerate_harmonic_morphisms(const Graph& domain, const Graph& codomain,
                                                       bool include_constant = false);

// Pullback of a structure on the codomain: r2 = r1 after phi,
// s2(v) = mu(v) s1(phi(v)) + nu(v). Always an arithmetical structure;
// also rechecks L2 Phi = Dmu Phi L1 exactly.
ArithStructure pullback_structure(const HarmonicData& h, const ArithStructure& on_codomain);

}  // namespace arithgraph
