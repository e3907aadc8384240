#pragma once

#include <string>

#include "arithgraph/graph.hpp"

namespace arithgraph {

// Standard graph families with labels <prefix>0, <prefix>1, ...
Graph path_graph(int n, const std::string& prefix = "v");
Graph cycle_graph(int n, const std::string& prefix = "v");
Graph star_graph(int n, const std::string& prefix = "v");      // vertex 0 is the center
Graph complete_graph(int n, const std::string& prefix = "v");
Graph wheel_graph(int n, const std::string& prefix = "v");     // vertex 0 is the hub, n >= 4

}  // namespace arithgraph
