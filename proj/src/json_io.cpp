#include "cmlat/json_io.hpp"

#include <fstream>

#include "cmlat/errors.hpp"

namespace cmlat {

WhiteGraph graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw InputError("white graph JSON needs \"vertices\" and \"edges\"");
    if (!j["vertices"].is_number_integer() || j["vertices"].get<long long>() <= 0)
        throw InputError("\"vertices\" must be a positive integer");
    WhiteGraph g(j["vertices"].get<std::size_t>());
    if (!j["edges"].is_array()) throw InputError("\"edges\" must be a list of pairs");
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw InputError("\"edges\" entries must be pairs of vertex indices");
        long long u = e[0].get<long long>(), v = e[1].get<long long>();
        if (u < 0 || v < 0 || u >= static_cast<long long>(g.size()) ||
            v >= static_cast<long long>(g.size()))
            throw InputError("edge endpoint out of range");
        g.add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    }
    return g;
}

Json graph_to_json(const WhiteGraph& g) {
    Json edges = Json::array();
    for (auto [u, v, m] : g.edge_list())
        for (long long i = 0; i < m; ++i) edges.push_back({u, v});
    return Json{{"vertices", g.size()}, {"edges", edges}};
}

Json goeritz_to_json(const WhiteGraph& g) {
    std::size_t deleted = g.size() - 1;
    auto m = goeritz_matrix(g, deleted);
    Json rows = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const Integer& x : row) r.push_back(static_cast<long long>(x));
        rows.push_back(r);
    }
    return Json{{"deleted", deleted}, {"matrix", rows}};
}

PDCode pd_from_json(const Json& j) {
    const Json* list = &j;
    if (j.is_object()) {
        if (!j.contains("pd")) throw InputError("planar code JSON needs a \"pd\" list");
        list = &j["pd"];
    }
    if (!list->is_array() || list->empty())
        throw InputError("planar code must be a non-empty list of 4-tuples");
    PDCode pd;
    for (const auto& x : *list) {
        if (!x.is_array() || x.size() != 4)
            throw InputError("each crossing must be a 4-tuple of arc labels");
        std::array<long long, 4> cr{};
        for (int k = 0; k < 4; ++k) {
            if (!x[k].is_number_integer())
                throw InputError("arc labels must be integers");
            cr[k] = x[k].get<long long>();
        }
        pd.crossings.push_back(cr);
    }
    return pd;
}

Json parse_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded()) throw InputError("invalid JSON in " + path);
    return j;
}

WhiteGraph graph_from_file(const std::string& path, bool* nugatory) {
    Json j = parse_json_file(path);
    WhiteGraph g = (j.is_object() && j.contains("vertices"))
                       ? graph_from_json(j)
                       : pd_to_white_graph(pd_from_json(j)).graph;
    if (nugatory) *nugatory = !g.cut_edges().empty();
    return g;
}

Json ambient_to_json(const AmbientVector& x) {
    return Json{{"f", x.f}, {"e", x.e}};
}

Json spec_to_json(const ChangemakerLatticeSpec& spec) {
    Json ws = Json::array();
    for (const auto& w : spec.w) ws.push_back(ambient_to_json(w));
    return Json{{"pq", spec.pq.str()},     {"n", spec.n},
                {"r", spec.r},             {"sigma", spec.sigma},
                {"expansion", spec.a},     {"ambient_dim", spec.ambient_dim()},
                {"rank", spec.rank()},     {"orthogonal_to", ws}};
}

Json labeling_to_json(const VertexLabeling& lab) {
    Json labels = Json::array();
    for (const auto& l : lab.labels) labels.push_back(ambient_to_json(l));
    return Json{{"spec", spec_to_json(lab.spec)}, {"labels", labels}};
}

}  // namespace cmlat
