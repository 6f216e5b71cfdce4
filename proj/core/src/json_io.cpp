#include "matchorient/json_io.hpp"

namespace matchorient {

using nlohmann::json;

json graph_json(const Graph& g) {
    json j;
    j["vertices"] = g.labels();
    auto edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back({g.label(e.u), g.label(e.v)});
    j["edges"] = edges;
    return j;
}

json factor_json(const Graph& g, const OneFactor& f) {
    auto arr = json::array();
    for (int e : f.edges) arr.push_back({g.label(g.edge(e).u), g.label(g.edge(e).v)});
    return arr;
}

json orientation_json(const Graph& g, const Orientation& o) {
    json j;
    j["bits"] = o.reversed;
    auto arcs = json::array();
    for (int e = 0; e < g.edge_count(); ++e)
        arcs.push_back({g.label(o.tail(g, e)), g.label(o.head(g, e))});
    j["arcs"] = arcs;
    return j;
}

json cycle_json(const Graph& g, const PathSeq& verts) {
    auto arr = json::array();
    for (int v : verts) arr.push_back(g.label(v));
    return arr;
}

json zero_sum_json(const Graph& g, const ParitySystem& sys, const ZeroSumCertificate& c) {
    json j;
    auto cycles = json::array();
    for (std::size_t i : c.cycle_indices) cycles.push_back(cycle_json(g, sys.cycles[i].verts));
    j["cycles"] = cycles;
    j["class"] = c.odd_set ? "odd" : "even";
    j["odd_oriented_under_reference"] = c.odd_oriented_ref ? 1 : 0;
    return j;
}

json verdict_json(const Graph& g, const ParitySystem& sys, const OrientationVerdict& v) {
    json j;
    j["exists"] = v.exists;
    if (v.witness) {
        auto bits = json::array();
        for (auto b : v.witness->reversed) bits.push_back(static_cast<int>(b));
        j["witness"] = bits;
        j["witness_arcs"] = orientation_json(g, *v.witness)["arcs"];
    }
    if (v.certificate) j["certificate"] = zero_sum_json(g, sys, *v.certificate);
    return j;
}

json cut_json(const Graph& g, const Cut& cut) {
    json j;
    auto side = json::array();
    for (int v : cut.side) side.push_back(g.label(v));
    auto edges = json::array();
    for (int e : cut.edges) edges.push_back({g.label(g.edge(e).u), g.label(g.edge(e).v)});
    j["side"] = side;
    j["edges"] = edges;
    return j;
}

json ear_decomposition_json(const Graph& g, const EarDecomposition& dec) {
    auto stages = json::array();
    for (const EarStage& st : dec.stages) {
        json s;
        auto edges = json::array();
        for (int e : st.edge_ids) edges.push_back({g.label(g.edge(e).u), g.label(g.edge(e).v)});
        s["edges"] = edges;
        auto ears = json::array();
        for (const PathSeq& p : st.ears) ears.push_back(cycle_json(g, p));
        s["ears"] = ears;
        auto fct = json::array();
        for (int e : st.factor_edges) fct.push_back({g.label(g.edge(e).u), g.label(g.edge(e).v)});
        s["factor"] = fct;
        stages.push_back(std::move(s));
    }
    return json{{"stages", stages}};
}

json wagner_certificate_json(const Graph& g, const WagnerCertificate& cert) {
    json j;
    auto removed = json::array();
    for (int re : cert.r)
        removed.push_back({g.label(g.edge(re).u), g.label(g.edge(re).v)});
    j["removed_pair"] = removed;
    j["w_factor"] = factor_json(g, cert.w_factor);
    auto side = [&](const std::vector<int>& vs) {
        auto arr = json::array();
        for (int v : vs) arr.push_back(g.label(v));
        return arr;
    };
    j["bipartition"] = {{"x", side(cert.bipartition.x)}, {"y", side(cert.bipartition.y)}};
    j["skew_cycles"] = {cycle_json(g, cert.skew.c1), cycle_json(g, cert.skew.c2)};
    j["subsequence_side"] = cert.skew.subsequence_side;
    return j;
}

json catalog_entry_json(const CatalogEntry& e) {
    json j;
    j["name"] = e.name;
    j["graph"] = graph_json(e.graph);
    json factors = json::object();
    for (const auto& [name, f] : e.factors) factors[name] = factor_json(e.graph, f);
    j["factors"] = factors;
    json orients = json::object();
    for (const auto& [name, o] : e.orientations)
        orients[name] = orientation_json(e.graph, o)["arcs"];
    j["orientations"] = orients;
    json verdicts = json::object();
    for (const auto& fv : e.factor_verdicts)
        verdicts[fv.factor] = {{"even", fv.even_feasible}, {"odd", fv.odd_feasible}};
    j["factor_verdicts"] = verdicts;
    j["pfaffian"] = e.pfaffian;
    j["bad"] = e.bad;
    j["wagner_member"] = e.wagner_member;
    return j;
}

}  // namespace matchorient
