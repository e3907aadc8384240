#include "support/corpus.hpp"

#include "arithgraph/errors.hpp"

namespace testsupport {

using namespace arithgraph;

Graph strip8_graph() {
    return Graph::build_indexed(
        {"v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8"},
        {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}, {4, 6}, {5, 7}, {6, 7}});
}

Graph w7_chord_graph() {
    Graph w7 = wheel_graph(7);
    std::vector<Edge> edges(w7.edges());
    edges.emplace_back(1, 4);
    return Graph::build_indexed(w7.labels(), std::move(edges));
}

Graph random_connected_graph(Rng& rng, int n) {
    for (;;) {
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() & 1) edges.emplace_back(i, j);
        std::vector<std::string> labels;
        for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
        try {
            return Graph::build_indexed(std::move(labels), std::move(edges));
        } catch (const DomainError&) {
            // disconnected or edgeless; resample
        }
    }
}

IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
    IntMatrix m(rows, cols);
    const unsigned long span = static_cast<unsigned long>(hi - lo + 1);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = lo + static_cast<long>(rng_below(rng, span));
    return m;
}

}  // namespace testsupport
