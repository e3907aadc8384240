#include "arithgraph/families.hpp"

#include "arithgraph/errors.hpp"

namespace arithgraph {

namespace {

std::vector<std::string> numbered_labels(int n, const std::string& prefix) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
    return labels;
}

}  // namespace

Graph path_graph(int n, const std::string& prefix) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::build_indexed(numbered_labels(n, prefix), std::move(edges));
}

Graph cycle_graph(int n, const std::string& prefix) {
    if (n < 3) fail("TooFewVertices", "cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, n - 1);
    return Graph::build_indexed(numbered_labels(n, prefix), std::move(edges));
}

Graph star_graph(int n, const std::string& prefix) {
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
    return Graph::build_indexed(numbered_labels(n, prefix), std::move(edges));
}

Graph complete_graph(int n, const std::string& prefix) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::build_indexed(numbered_labels(n, prefix), std::move(edges));
}

Graph wheel_graph(int n, const std::string& prefix) {
    if (n < 4) fail("TooFewVertices", "wheel needs at least 4 vertices");
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
    for (int i = 1; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(1, n - 1);
    return Graph::build_indexed(numbered_labels(n, prefix), std::move(edges));
}

}  // namespace arithgraph
