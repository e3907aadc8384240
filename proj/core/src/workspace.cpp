#include "arithgraph/workspace.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "arithgraph/errors.hpp"

namespace arithgraph {

using nlohmann::json;

namespace {

Int parse_int(const json& j) {
    if (!j.is_string()) fail("InvalidInteger", "integers must be decimal strings, got " + j.dump());
    try {
        return Int(j.get<std::string>());
    } catch (const std::invalid_argument&) {
        fail("InvalidInteger", "cannot parse '" + j.get<std::string>() + "' as an integer");
    }
}

IntVec parse_int_vec(const json& j) {
    if (!j.is_array()) fail("InvalidDocument", "expected an array of integer strings");
    IntVec v;
    v.reserve(j.size());
    for (const json& e : j) v.push_back(parse_int(e));
    return v;
}

json int_vec_json(const IntVec& v) {
    json out = json::array();
    for (const Int& x : v) out.push_back(x.get_str());
    return out;
}

const json& field(const json& j, const char* key, const std::string& context) {
    auto it = j.find(key);
    if (it == j.end()) fail("InvalidDocument", context + " is missing field '" + key + "'");
    return *it;
}

Graph parse_graph(const json& j, const std::string& name) {
    std::vector<std::string> labels =
        field(j, "vertices", "graph '" + name + "'").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> edges;
    for (const json& e : field(j, "edges", "graph '" + name + "'")) {
        if (!e.is_array() || e.size() != 2)
            fail("InvalidDocument", "graph '" + name + "' has a malformed edge " + e.dump());
        edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return Graph::build(std::move(labels), edges);
}

json graph_json(const Graph& g) {
    json edges = json::array();
    for (const Edge& e : g.edges())
        edges.push_back(json::array({g.label(e.first), g.label(e.second)}));
    return json{{"vertices", g.labels()}, {"edges", std::move(edges)}};
}

}  // namespace

const Graph& Workspace::graph(const std::string& name) const {
    auto it = graphs.find(name);
    if (it == graphs.end()) fail("UnknownGraph", "no graph named '" + name + "'");
    return it->second;
}

const NamedStructure& Workspace::structure(const std::string& name) const {
    auto it = structures.find(name);
    if (it == structures.end()) fail("UnknownStructure", "no structure named '" + name + "'");
    return it->second;
}

const NamedMorphism& Workspace::morphism(const std::string& name) const {
    auto it = morphisms.find(name);
    if (it == morphisms.end()) fail("UnknownMorphism", "no morphism named '" + name + "'");
    return it->second;
}

const NamedDivisor& Workspace::divisor(const std::string& name) const {
    auto it = divisors.find(name);
    if (it == divisors.end()) fail("UnknownDivisor", "no divisor named '" + name + "'");
    return it->second;
}

namespace {

Workspace parse_document(const json& doc);

}  // namespace

Workspace parse_workspace(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        fail("InvalidDocument", std::string("not valid JSON: ") + e.what());
    }
    try {
        return parse_document(doc);
    } catch (const json::exception& e) {
        fail("InvalidDocument", std::string("malformed workspace: ") + e.what());
    }
}

namespace {

Workspace parse_document(const json& doc) {
    Workspace ws;
    if (doc.contains("graphs"))
        for (const auto& [name, j] : doc["graphs"].items()) ws.graphs.emplace(name, parse_graph(j, name));

    if (doc.contains("structures"))
        for (const auto& [name, j] : doc["structures"].items()) {
            const std::string graph_name = field(j, "graph", "structure '" + name + "'");
            const Graph& g = ws.graph(graph_name);
            ArithStructure st = validate_structure(g, parse_int_vec(field(j, "r", name)),
                                                   parse_int_vec(field(j, "s", name)));
            ws.structures.emplace(name, NamedStructure{graph_name, std::move(st)});
        }

    if (doc.contains("morphisms"))
        for (const auto& [name, j] : doc["morphisms"].items()) {
            const std::string domain_name = field(j, "domain", "morphism '" + name + "'");
            const std::string codomain_name = field(j, "codomain", "morphism '" + name + "'");
            const auto map =
                field(j, "map", "morphism '" + name + "'").get<std::map<std::string, std::string>>();
            GraphMorphism m =
                GraphMorphism::build(ws.graph(domain_name), ws.graph(codomain_name), map);
            ws.morphisms.emplace(name, NamedMorphism{domain_name, codomain_name, std::move(m)});
        }

    if (doc.contains("divisors"))
        for (const auto& [name, j] : doc["divisors"].items()) {
            const std::string graph_name = field(j, "graph", "divisor '" + name + "'");
            const Graph& g = ws.graph(graph_name);
            IntVec values = parse_int_vec(field(j, "values", name));
            if (values.size() != g.vertex_count())
                fail("LengthMismatch", "divisor '" + name + "' has wrong length");
            ws.divisors.emplace(name, NamedDivisor{graph_name, Divisor{g, std::move(values)}});
        }

    return ws;
}

}  // namespace

Workspace load_workspace(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) fail("FileNotFound", "cannot open '" + file.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_workspace(buffer.str());
}

std::string serialize_workspace(const Workspace& ws, bool pretty) {
    json doc;
    doc["graphs"] = json::object();
    for (const auto& [name, g] : ws.graphs) doc["graphs"][name] = graph_json(g);

    doc["structures"] = json::object();
    for (const auto& [name, s] : ws.structures)
        doc["structures"][name] = json{{"graph", s.graph_name},
                                       {"r", int_vec_json(s.structure.r)},
                                       {"s", int_vec_json(s.structure.s)}};

    doc["morphisms"] = json::object();
    for (const auto& [name, m] : ws.morphisms) {
        json map = json::object();
        const Graph& dom = m.morphism.domain();
        const Graph& cod = m.morphism.codomain();
        for (std::size_t v = 0; v < dom.vertex_count(); ++v)
            map[dom.label(static_cast<int>(v))] = cod.label(m.morphism(static_cast<int>(v)));
        doc["morphisms"][name] =
            json{{"domain", m.domain_name}, {"codomain", m.codomain_name}, {"map", std::move(map)}};
    }

    doc["divisors"] = json::object();
    for (const auto& [name, d] : ws.divisors)
        doc["divisors"][name] =
            json{{"graph", d.graph_name}, {"values", int_vec_json(d.divisor.values)}};

    return pretty ? doc.dump(2) + "\n" : doc.dump() + "\n";
}

}  // namespace arithgraph
