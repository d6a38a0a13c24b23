#include "klab/io.hpp"

#include <fstream>

#include <json.hpp>

namespace klab {

using nlohmann::json;

std::string graph_to_json(const Graph& g) {
    json j;
    j["n"] = g.size();
    j["edges"] = json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    if (g.target_degree()) j["d"] = *g.target_degree();
    return j.dump();
}

Graph graph_from_json(const std::string& text) {
    json j = json::parse(text);
    if (!j.contains("n") || !j.contains("edges")) throw InvalidData("graph json missing fields");
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw InvalidData("malformed edge");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    Graph g(j.at("n").get<int>(), edges);
    if (j.contains("d")) g = g.with_target_degree(j.at("d").get<int>());
    return g;
}

void write_graph_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << graph_to_json(g) << "\n";
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return graph_from_json(text);
}

std::string resampling_to_json(const ResamplingData& data) {
    json j;
    j["center"] = data.center;
    j["ell"] = data.ell;
    j["entries"] = json::array();
    for (const auto& e : data.entries) j["entries"].push_back({e.l, e.a, e.b, e.c});
    j["admissible"] = data.admissible;
    return j.dump();
}

ResamplingData resampling_from_json(const std::string& text) {
    json j = json::parse(text);
    ResamplingData data;
    data.center = j.at("center").get<int>();
    data.ell = j.at("ell").get<int>();
    for (const auto& e : j.at("entries")) {
        if (!e.is_array() || e.size() != 4) throw InvalidData("malformed resampling entry");
        data.entries.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>(), e[3].get<int>()});
    }
    data.admissible = j.at("admissible").get<std::vector<int>>();
    return data;
}

}  // namespace klab
