#include "arithgraph/graph.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <vector>

#include "arithgraph/errors.hpp"

namespace arithgraph {

Graph Graph::build(std::vector<std::string> labels,
                   const std::vector<std::pair<std::string, std::string>>& edges) {
    std::unordered_map<std::string, int> index;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (!index.emplace(labels[i], static_cast<int>(i)).second)
            fail("DuplicateLabel", "vertex label '" + labels[i] + "' appears twice");
    }
    std::vector<Edge> indexed;
    indexed.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        auto ia = index.find(a);
        auto ib = index.find(b);
        if (ia == index.end()) fail("UnknownVertex", "edge endpoint '" + a + "' is not a vertex");
        if (ib == index.end()) fail("UnknownVertex", "edge endpoint '" + b + "' is not a vertex");
        indexed.emplace_back(std::min(ia->second, ib->second), std::max(ia->second, ib->second));
    }
    return build_indexed(std::move(labels), std::move(indexed));
}

Graph Graph::build_indexed(std::vector<std::string> labels, std::vector<Edge> edges) {
    const std::size_t n = labels.size();
    if (n < 2) fail("TooFewVertices", "need at least 2 vertices, got " + std::to_string(n));
    if (edges.empty()) fail("EmptyEdgeSet", "graph must have at least one edge");

    for (Edge& e : edges) {
        if (e.first > e.second) std::swap(e.first, e.second);
        if (e.first == e.second)
            fail("LoopEdge", "loop at vertex '" + labels[static_cast<std::size_t>(e.first)] + "'");
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        if (edges[i] == edges[i + 1]) {
            const Edge& e = edges[i];
            fail("DuplicateEdge", "edge ('" + labels[static_cast<std::size_t>(e.first)] + "','" +
                                      labels[static_cast<std::size_t>(e.second)] +
                                      "') appears twice");
        }
    }

    Graph g;
    g.labels_ = std::move(labels);
    g.edges_ = std::move(edges);
    g.adj_.assign(n, {});
    for (const Edge& e : g.edges_) {
        g.adj_[static_cast<std::size_t>(e.first)].push_back(e.second);
        g.adj_[static_cast<std::size_t>(e.second)].push_back(e.first);
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());

    // connectivity by depth-first traversal from vertex 0
    std::vector<bool> seen(n, false);
    std::vector<int> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        for (int w : g.adj_[static_cast<std::size_t>(v)])
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                queue.push_back(w);
            }
    }
    for (std::size_t v = 0; v < n; ++v)
        if (!seen[v]) fail("Disconnected", "vertex '" + g.labels_[v] + "' is unreachable");

    return g;
}

int Graph::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return static_cast<int>(i);
    fail("UnknownVertex", "no vertex labeled '" + label + "'");
}

bool Graph::adjacent(int a, int b) const {
    const auto& nbrs = adj_[static_cast<std::size_t>(a)];
    return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

IntMatrix Graph::adjacency_matrix() const {
    IntMatrix a(vertex_count(), vertex_count());
    for (const Edge& e : edges_) {
        a(static_cast<std::size_t>(e.first), static_cast<std::size_t>(e.second)) = 1;
        a(static_cast<std::size_t>(e.second), static_cast<std::size_t>(e.first)) = 1;
    }
    return a;
}

IntVec Graph::degree_vector() const {
    IntVec d(vertex_count());
    for (std::size_t v = 0; v < vertex_count(); ++v) d[v] = degree(static_cast<int>(v));
    return d;
}

std::string Graph::edge_name(const Edge& e) const {
    return "(" + label(e.first) + "," + label(e.second) + ")";
}

}  // namespace arithgraph
