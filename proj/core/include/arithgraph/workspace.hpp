#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "arithgraph/arith.hpp"
#include "arithgraph/divisor.hpp"
#include "arithgraph/morphism.hpp"

namespace arithgraph {

// Bundle of named objects loaded from a single JSON document. Every
// cross-reference is resolved and every object validated at load time.
// Integers are serialized as decimal strings throughout.
struct NamedStructure {
    std::string graph_name;
    ArithStructure structure;

    friend bool operator==(const NamedStructure&, const NamedStructure&) = default;
};

struct NamedMorphism {
    std::string domain_name, codomain_name;
    GraphMorphism morphism;

    friend bool operator==(const NamedMorphism&, const NamedMorphism&) = default;
};

struct NamedDivisor {
    std::string graph_name;
    Divisor divisor;

    friend bool operator==(const NamedDivisor&, const NamedDivisor&) = default;
};

struct Workspace {
    std::map<std::string, Graph> graphs;
    std::map<std::string, NamedStructure> structures;
    std::map<std::string, NamedMorphism> morphisms;
    std::map<std::string, NamedDivisor> divisors;

    const Graph& graph(const std::string& name) const;
    const NamedStructure& structure(const std::string& name) const;
    const NamedMorphism& morphism(const std::string& name) const;
    const NamedDivisor& divisor(const std::string& name) const;

    friend bool operator==(const Workspace&, const Workspace&) = default;
};

Workspace parse_workspace(const std::string& json_text);
Workspace load_workspace(const std::filesystem::path& file);

// Deterministic: identical workspaces serialize to identical bytes.
std::string serialize_workspace(const Workspace& ws, bool pretty = false);

}  // namespace arithgraph
