#include <doctest.h>

#include <algorithm>
#include <set>

#include "arithgraph/errors.hpp"
#include "arithgraph/families.hpp"
#include "arithgraph/morphism.hpp"
#include "support/corpus.hpp"
#include "support/oracle.hpp"

using namespace arithgraph;

namespace {

const Graph w5 = wheel_graph(5);
const Graph c3 = cycle_graph(3, "x");

GraphMorphism fig_morphism() { return GraphMorphism::build_indexed(w5, c3, {0, 1, 1, 2, 2}); }

GraphMorphism identity_morphism(const Graph& g) {
    std::vector<int> map(g.vertex_count());
    for (std::size_t v = 0; v < map.size(); ++v) map[v] = static_cast<int>(v);
    return GraphMorphism::build_indexed(g, g, std::move(map));
}

}  // namespace

TEST_CASE("the wheel-to-cycle map is a morphism") {
    const GraphMorphism m = GraphMorphism::build(
        w5, c3, {{"v0", "x0"}, {"v1", "x1"}, {"v2", "x1"}, {"v3", "x2"}, {"v4", "x2"}});
    CHECK(m == fig_morphism());
    CHECK_FALSE(m.is_constant());
    CHECK(m.is_vertical({1, 2}));
    CHECK_FALSE(m.is_vertical({0, 1}));
}

TEST_CASE("maps sending an edge to a non-edge are rejected") {
    // adjacent vertices mapped onto two distinct leaves of a star
    const Graph star4 = star_graph(4, "x");
    const Graph p2 = path_graph(2);
    CHECK_THROWS_WITH_AS(GraphMorphism::build_indexed(p2, star4, {1, 2}),
                         doctest::Contains("NotAMorphism"), DomainError);
    CHECK(morphism_violation(p2, star4, {1, 2}) == Edge{0, 1});
    CHECK_FALSE(morphism_violation(p2, star4, {0, 2}).has_value());
}

TEST_CASE("harmonic analysis of the wheel-to-cycle map") {
    const HarmonicData h = require_harmonic(fig_morphism());
    CHECK(h.mu == ivec({2, 1, 1, 1, 1}));
    CHECK(h.nu == ivec({0, 1, 1, 1, 1}));
    CHECK(h.degree == 2);
    CHECK_FALSE(h.constant);

    const IntMatrix phi = h.phi_matrix();
    CHECK(phi == IntMatrix::from({{1, 0, 0}, {0, 1, 0}, {0, 1, 0}, {0, 0, 1}, {0, 0, 1}}));
}

TEST_CASE("harmonic analysis of the identity map") {
    const HarmonicData h = require_harmonic(identity_morphism(c3));
    CHECK(h.mu == ivec({1, 1, 1}));
    CHECK(h.nu == ivec({0, 0, 0}));
    CHECK(h.degree == 1);
}

TEST_CASE("harmonic analysis of the wheel-to-complete-graph map") {
    const GraphMorphism psi =
        GraphMorphism::build_indexed(wheel_graph(7), complete_graph(4, "x"), {0, 1, 2, 3, 1, 2, 3});
    const HarmonicData h = require_harmonic(psi);
    CHECK(h.mu == ivec({2, 1, 1, 1, 1, 1, 1}));
    CHECK(h.nu == IntVec(7));
    CHECK(h.degree == 2);
}

TEST_CASE("a non-harmonic morphism yields a witness vertex") {
    // x0,x1,x2 -> x0,x1,x0 on the triangle: at the first vertex one incident
    // codomain edge has a preimage and the other does not
    const auto result = analyze_harmonic(GraphMorphism::build_indexed(c3, c3, {0, 1, 0}));
    REQUIRE(std::holds_alternative<NotHarmonicWitness>(result));
    CHECK_THROWS_WITH_AS(require_harmonic(GraphMorphism::build_indexed(c3, c3, {0, 1, 0})),
                         doctest::Contains("NotHarmonic"), DomainError);
}

TEST_CASE("constant morphisms are harmonic of degree zero") {
    const auto result = analyze_harmonic(GraphMorphism::build_indexed(w5, c3, {1, 1, 1, 1, 1}));
    REQUIRE(std::holds_alternative<HarmonicData>(result));
    const HarmonicData& h = std::get<HarmonicData>(result);
    CHECK(h.constant);
    CHECK(h.degree == 0);
    CHECK(h.mu == IntVec(5));
    CHECK(h.nu == w5.degree_vector());
}

TEST_CASE("matrix identities hold on the worked example") {
    const auto report = verify_matrix_identities(require_harmonic(fig_morphism()));
    CHECK(report.adjacency_identity);
    CHECK(report.degree_identity);
    CHECK(report.pass());
    CHECK_FALSE(report.first_mismatch.has_value());
}

TEST_CASE("matrix identities hold for the identity morphism on any graph") {
    for (const Graph& g : {c3, w5, star_graph(4), complete_graph(4)})
        CHECK(verify_matrix_identities(require_harmonic(identity_morphism(g))).pass());
}

TEST_CASE("enumeration finds the worked morphism among wheel-to-cycle maps") {
    const auto all = enumerate_harmonic_morphisms(w5, c3, false);
    CHECK(std::any_of(all.begin(), all.end(), [&](const HarmonicData& h) {
        return h.morphism == fig_morphism();
    }));
    for (const HarmonicData& h : all) {
        CHECK(verify_matrix_identities(h).pass());
        CHECK_FALSE(h.constant);
    }
}

TEST_CASE("the triangle has exactly its six automorphisms as self-maps") {
    // brute force over all 27 maps, independent of the backtracking search
    long harmonic_count = 0;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) {
                const std::vector<int> map{a, b, c};
                if (morphism_violation(c3, c3, map)) continue;
                const auto result = analyze_harmonic(GraphMorphism::build_indexed(c3, c3, map));
                if (auto* h = std::get_if<HarmonicData>(&result); h && !h->constant) {
                    ++harmonic_count;
                    CHECK(h->degree == 1);
                }
            }
    CHECK(harmonic_count == 6);

    const auto found = enumerate_harmonic_morphisms(c3, c3, false);
    CHECK(found.size() == 6);
    CHECK(enumerate_harmonic_morphisms(c3, c3, true).size() == 9);
}

TEST_CASE("no harmonic morphism from the strip onto the 5-star") {
    CHECK(enumerate_harmonic_morphisms(testsupport::strip8_graph(), star_graph(5), false).empty());
}

TEST_CASE("enumeration order is lexicographic in the vertex map") {
    const auto found = enumerate_harmonic_morphisms(c3, c3, true);
    for (std::size_t i = 0; i + 1 < found.size(); ++i)
        CHECK(found[i].morphism.vertex_map() < found[i + 1].morphism.vertex_map());
}

TEST_CASE("non-constant harmonic morphisms are surjective on vertices and edges") {
    for (const HarmonicData& h : enumerate_harmonic_morphisms(w5, c3, false)) {
        std::set<int> vertex_image;
        for (int x : h.morphism.vertex_map()) vertex_image.insert(x);
        CHECK(vertex_image.size() == c3.vertex_count());

        std::set<Edge> edge_image;
        for (const Edge& e : w5.edges()) {
            if (h.morphism.is_vertical(e)) continue;
            int a = h.morphism(e.first), b = h.morphism(e.second);
            edge_image.insert({std::min(a, b), std::max(a, b)});
        }
        CHECK(edge_image.size() == c3.edges().size());
    }
}

TEST_CASE("Diag(Phi c) Phi = Phi Diag(c) for random c") {
    testsupport::Rng rng(123);
    for (const HarmonicData& h : enumerate_harmonic_morphisms(w5, c3, true)) {
        const IntMatrix phi = h.phi_matrix();
        IntVec c(c3.vertex_count());
        for (Int& x : c) x = static_cast<long>(testsupport::rng_below(rng, 19)) - 9;
        CHECK(IntMatrix::diagonal(phi * c) * phi == phi * IntMatrix::diagonal(c));
    }
}

TEST_CASE("the adjacency identity characterizes harmonic maps empirically") {
    const Graph star4 = star_graph(4, "x");
    std::vector<std::pair<Graph, Graph>> pairs = {
        {w5, c3}, {c3, c3}, {star4, c3}, {w5, star4}, {c3, star4}};
    testsupport::Rng rng(271828);
    for (int i = 0; i < 6; ++i) {
        Graph domain = testsupport::random_connected_graph(
            rng, 2 + static_cast<int>(testsupport::rng_below(rng, 4)));
        Graph codomain = testsupport::random_connected_graph(
            rng, 2 + static_cast<int>(testsupport::rng_below(rng, 4)));
        pairs.emplace_back(std::move(domain), std::move(codomain));
    }
    for (const auto& [domain, codomain] : pairs) {
        for_each_morphism(domain, codomain, [&](const std::vector<int>& map) {
            const bool identity_holds = testsupport::oracle_adjacency_identity(domain, codomain, map);
            const auto result =
                analyze_harmonic(GraphMorphism::build_indexed(domain, codomain, map));
            CHECK(identity_holds == std::holds_alternative<HarmonicData>(result));
        });
    }
}

TEST_CASE("pullback reproduces the worked structure") {
    const HarmonicData h = require_harmonic(fig_morphism());
    const ArithStructure st1 = validate_structure(c3, ivec({2, 1, 3}), ivec({2, 5, 1}));
    const ArithStructure st2 = pullback_structure(h, st1);
    CHECK(st2.r == ivec({2, 1, 1, 3, 3}));
    CHECK(st2.s == ivec({4, 6, 6, 2, 2}));
}

TEST_CASE("pullback sends natural structure to natural structure") {
    for (const HarmonicData& h : enumerate_harmonic_morphisms(w5, c3, false))
        CHECK(pullback_structure(h, natural_structure(c3)) == natural_structure(w5));
}

TEST_CASE("pullback of the wheel-to-complete-graph structures") {
    const GraphMorphism psi =
        GraphMorphism::build_indexed(wheel_graph(7), complete_graph(4, "x"), {0, 1, 2, 3, 1, 2, 3});
    const HarmonicData h = require_harmonic(psi);
    const ArithStructure st1 =
        validate_structure(complete_graph(4, "x"), ivec({1, 1, 1, 3}), ivec({5, 5, 5, 1}));
    const ArithStructure st2 = pullback_structure(h, st1);
    CHECK(st2.r == ivec({1, 1, 1, 3, 1, 1, 3}));
    CHECK(st2.s == ivec({10, 5, 5, 1, 5, 5, 1}));
}

TEST_CASE("pullback refuses constant morphisms and mismatched structures") {
    const auto constant = std::get<HarmonicData>(
        analyze_harmonic(GraphMorphism::build_indexed(w5, c3, {0, 0, 0, 0, 0})));
    CHECK_THROWS_WITH_AS(pullback_structure(constant, natural_structure(c3)),
                         doctest::Contains("ConstantMorphism"), DomainError);
    CHECK_THROWS_WITH_AS(pullback_structure(require_harmonic(fig_morphism()),
                                            natural_structure(w5)),
                         doctest::Contains("GraphMismatch"), DomainError);
}
