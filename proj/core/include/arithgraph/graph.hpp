#pragma once

#include <string>
#include <utility>
#include <vector>

#include "arithgraph/intmat.hpp"

namespace arithgraph {

using Edge = std::pair<int, int>;  // normalized: first < second

// Finite simple connected loopless graph with a fixed vertex ordering.
// Immutable after construction; every matrix and vector in the library
// indexes against the label order fixed here.
class Graph {
public:
    Graph() = default;  // empty placeholder; validated graphs come from build()

    static Graph build(std::vector<std::string> labels,
                       const std::vector<std::pair<std::string, std::string>>& edges);
    static Graph build_indexed(std::vector<std::string> labels, std::vector<Edge> edges);

    std::size_t vertex_count() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
    int index_of(const std::string& label) const;  // throws UnknownVertex

    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    bool adjacent(int a, int b) const;
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

    IntMatrix adjacency_matrix() const;
    IntVec degree_vector() const;

    std::string edge_name(const Edge& e) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::string> labels_;
    std::vector<Edge> edges_;            // sorted lexicographically
    std::vector<std::vector<int>> adj_;  // sorted neighbor lists
};

}  // namespace arithgraph
