#include "arithgraph/morphism.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "arithgraph/errors.hpp"

namespace arithgraph {

GraphMorphism GraphMorphism::build(Graph domain, Graph codomain,
                                   const std::map<std::string, std::string>& vertex_map) {
    std::vector<int> map(domain.vertex_count(), -1);
    for (const auto& [from, to] : vertex_map) {
        map[static_cast<std::size_t>(domain.index_of(from))] = codomain.index_of(to);
    }
    for (std::size_t v = 0; v < map.size(); ++v)
        if (map[v] < 0)
            fail("IncompleteMap", "no image given for vertex '" + domain.label(static_cast<int>(v)) + "'");
    return build_indexed(std::move(domain), std::move(codomain), std::move(map));
}

GraphMorphism GraphMorphism::build_indexed(Graph domain, Graph codomain,
                                           std::vector<int> vertex_map) {
    if (vertex_map.size() != domain.vertex_count())
        fail("IncompleteMap", "vertex map has wrong length");
    for (int x : vertex_map)
        if (x < 0 || x >= static_cast<int>(codomain.vertex_count()))
            fail("UnknownVertex", "vertex map image index " + std::to_string(x) + " out of range");
    if (auto bad = morphism_violation(domain, codomain, vertex_map)) {
        fail("NotAMorphism", "edge " + domain.edge_name(*bad) + " maps to non-adjacent vertices '" +
                                 codomain.label(vertex_map[static_cast<std::size_t>(bad->first)]) +
                                 "', '" +
                                 codomain.label(vertex_map[static_cast<std::size_t>(bad->second)]) +
                                 "'");
    }
    GraphMorphism m;
    m.domain_ = std::move(domain);
    m.codomain_ = std::move(codomain);
    m.map_ = std::move(vertex_map);
    return m;
}

bool GraphMorphism::is_constant() const {
    return std::all_of(map_.begin(), map_.end(), [&](int x) { return x == map_[0]; });
}

IntMatrix GraphMorphism::vertex_map_matrix() const {
    IntMatrix phi(domain_.vertex_count(), codomain_.vertex_count());
    for (std::size_t v = 0; v < map_.size(); ++v)
        phi(v, static_cast<std::size_t>(map_[v])) = 1;
    return phi;
}

std::optional<Edge> morphism_violation(const Graph& domain, const Graph& codomain,
                                       const std::vector<int>& vertex_map) {
    for (const Edge& e : domain.edges()) {
        int a = vertex_map[static_cast<std::size_t>(e.first)];
        int b = vertex_map[static_cast<std::size_t>(e.second)];
        if (a != b && !codomain.adjacent(a, b)) return e;
    }
    return std::nullopt;
}

std::string NotHarmonicWitness::describe(const GraphMorphism& m) const {
    return "at vertex " + m.domain().label(vertex) + ": edge " + m.codomain().edge_name(f1) +
           " has " + std::to_string(count_f1) + " preimages but edge " + m.codomain().edge_name(f2) +
           " has " + std::to_string(count_f2);
}

std::variant<HarmonicData, NotHarmonicWitness> analyze_harmonic(const GraphMorphism& m) {
    const Graph& g2 = m.domain();
    const Graph& g1 = m.codomain();
    const std::size_t n2 = g2.vertex_count();

    // codomain edges incident to each codomain vertex
    std::vector<std::vector<std::size_t>> incident(g1.vertex_count());
    for (std::size_t f = 0; f < g1.edges().size(); ++f) {
        incident[static_cast<std::size_t>(g1.edges()[f].first)].push_back(f);
        incident[static_cast<std::size_t>(g1.edges()[f].second)].push_back(f);
    }
    auto edge_index = [&](int a, int b) -> std::size_t {
        Edge e{std::min(a, b), std::max(a, b)};
        auto it = std::lower_bound(g1.edges().begin(), g1.edges().end(), e);
        return static_cast<std::size_t>(it - g1.edges().begin());
    };

    IntVec mu(n2), nu(n2);
    std::vector<long> local(g1.edges().size(), 0);
    for (std::size_t v = 0; v < n2; ++v) {
        const int x = m(static_cast<int>(v));
        long vertical = 0;
        for (std::size_t f : incident[static_cast<std::size_t>(x)]) local[f] = 0;
        for (int w : g2.neighbors(static_cast<int>(v))) {
            if (m(w) == x)
                ++vertical;
            else
                ++local[edge_index(x, m(w))];
        }
        const std::size_t first = incident[static_cast<std::size_t>(x)].front();
        for (std::size_t f : incident[static_cast<std::size_t>(x)]) {
            if (local[f] != local[first]) {
                return NotHarmonicWitness{static_cast<int>(v), g1.edges()[first], g1.edges()[f],
                                          local[first], local[f]};
            }
        }
        mu[v] = local[first];
        nu[v] = vertical;
    }

    const bool constant = m.is_constant();
    Int degree = 0;
    if (!constant) {
        // Non-constant harmonic maps hit every codomain edge the same number
        // of times; anything else is a bug in the analysis above.
        std::vector<long> preimages(g1.edges().size(), 0);
        for (const Edge& e : g2.edges()) {
            int a = m(e.first), b = m(e.second);
            if (a != b) ++preimages[edge_index(a, b)];
        }
        for (long c : preimages)
            if (c != preimages[0])
                throw std::logic_error("harmonic morphism with non-uniform edge preimage counts");
        degree = preimages[0];
    }

    return HarmonicData{m, std::move(mu), std::move(nu), std::move(degree), constant};
}

HarmonicData require_harmonic(const GraphMorphism& m) {
    auto result = analyze_harmonic(m);
    if (auto* witness = std::get_if<NotHarmonicWitness>(&result))
        fail("NotHarmonic", witness->describe(m));
    return std::get<HarmonicData>(std::move(result));
}

MatrixIdentityReport verify_matrix_identities(const HarmonicData& h) {
    const IntMatrix phi = h.phi_matrix();
    const IntMatrix a2 = h.morphism.domain().adjacency_matrix();
    const IntMatrix a1 = h.morphism.codomain().adjacency_matrix();
    const IntMatrix d_mu = IntMatrix::diagonal(h.mu);
    const IntMatrix d_nu = IntMatrix::diagonal(h.nu);

    MatrixIdentityReport report;
    report.adjacency_identity = true;
    report.degree_identity = true;

    const IntMatrix lhs1 = a2 * phi;
    const IntMatrix rhs1 = d_nu * phi + d_mu * phi * a1;
    for (std::size_t i = 0; i < lhs1.rows() && report.adjacency_identity; ++i)
        for (std::size_t j = 0; j < lhs1.cols(); ++j)
            if (lhs1(i, j) != rhs1(i, j)) {
                report.adjacency_identity = false;
                report.first_mismatch = {"adjacency", i, j, lhs1(i, j), rhs1(i, j)};
                break;
            }

    const IntMatrix lhs2 = phi.transposed() * d_mu * phi;
    IntMatrix rhs2 = IntMatrix::identity(a1.rows());
    for (std::size_t i = 0; i < rhs2.rows(); ++i) rhs2(i, i) = h.degree;
    for (std::size_t i = 0; i < lhs2.rows() && report.degree_identity; ++i)
        for (std::size_t j = 0; j < lhs2.cols(); ++j)
            if (lhs2(i, j) != rhs2(i, j)) {
                report.degree_identity = false;
                if (!report.first_mismatch)
                    report.first_mismatch = {"degree", i, j, lhs2(i, j), rhs2(i, j)};
                break;
            }

    return report;
}

void for_each_morphism(const Graph& domain, const Graph& codomain,
                       const std::function<void(const std::vector<int>&)>& visit) {
    const std::size_t n2 = domain.vertex_count();
    const int n1 = static_cast<int>(codomain.vertex_count());
    std::vector<int> map(n2, -1);

    // earlier-placed neighbors of each vertex, for prefix feasibility
    std::vector<std::vector<int>> back_neighbors(n2);
    for (std::size_t v = 0; v < n2; ++v)
        for (int w : domain.neighbors(static_cast<int>(v)))
            if (w < static_cast<int>(v)) back_neighbors[v].push_back(w);

    auto extend = [&](auto&& self, std::size_t v) -> void {
        if (v == n2) {
            visit(map);
            return;
        }
        for (int x = 0; x < n1; ++x) {
            bool ok = true;
            for (int w : back_neighbors[v]) {
                int y = map[static_cast<std::size_t>(w)];
                if (y != x && !codomain.adjacent(y, x)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            map[v] = x;
            self(self, v + 1);
        }
        map[v] = -1;
    };
    extend(extend, 0);
}

std::vector<GraphMorphism> enumerate_morphisms(const Graph& domain, const Graph& codomain) {
    std::vector<GraphMorphism> out;
    for_each_morphism(domain, codomain, [&](const std::vector<int>& map) {
        out.push_back(GraphMorphism::build_indexed(domain, codomain, map));
    });
    return out;
}

std::vector<HarmonicData> enumerate_harmonic_morphisms(const Graph& domain, const Graph& codomain,
                                                       bool include_constant) {
    std::vector<HarmonicData> out;
    for_each_morphism(domain, codomain, [&](const std::vector<int>& map) {
        auto result = analyze_harmonic(GraphMorphism::build_indexed(domain, codomain, map));
        if (auto* h = std::get_if<HarmonicData>(&result)) {
            if (include_constant || !h->constant) out.push_back(std::move(*h));
        }
    });
    return out;
}

ArithStructure pullback_structure(const HarmonicData& h, const ArithStructure& on_codomain) {
    if (h.constant) fail("ConstantMorphism", "cannot pull back along a constant morphism");
    if (on_codomain.graph != h.morphism.codomain())
        fail("GraphMismatch", "structure does not live on the morphism codomain");

    const std::size_t n2 = h.morphism.domain().vertex_count();
    IntVec r2(n2), s2(n2);
    for (std::size_t v = 0; v < n2; ++v) {
        const auto x = static_cast<std::size_t>(h.morphism(static_cast<int>(v)));
        r2[v] = on_codomain.r[x];
        s2[v] = h.mu[v] * on_codomain.s[x] + h.nu[v];
    }
    ArithStructure pulled = validate_structure(h.morphism.domain(), std::move(r2), std::move(s2));

    // L2 Phi = Dmu Phi L1, rechecked exactly on every pullback.
    const IntMatrix phi = h.phi_matrix();
    if (laplacian(pulled) * phi != IntMatrix::diagonal(h.mu) * phi * laplacian(on_codomain))
        throw std::logic_error("pullback violates the Laplacian intertwining identity");
    return pulled;
}

}  // namespace arithgraph
