#include "matchorient/splitting.hpp"

#include <algorithm>
#include <set>

namespace matchorient {

namespace {

struct SplitSite {
    int a, b;          // e0 endpoints, a < b
    int b1, b2;        // other neighbours of a, sorted
    int a1, a2;        // other neighbours of b, sorted
};

SplitSite split_site(const Graph& g, int e0) {
    if (e0 < 0 || e0 >= g.edge_count()) throw split_error("e0 is not an edge");
    SplitSite s;
    s.a = g.edge(e0).u;
    s.b = g.edge(e0).v;
    if (g.degree(s.a) != 3 || g.degree(s.b) != 3)
        throw split_error("both endpoints of e0 must have degree 3");
    auto na = g.neighbors(s.a), nb = g.neighbors(s.b);
    for (int x : na)
        if (x != s.b && std::find(nb.begin(), nb.end(), x) != nb.end())
            throw split_error("e0 endpoints share a neighbour");
    std::vector<int> bs, as;
    for (int x : na)
        if (x != s.b) bs.push_back(x);
    for (int x : nb)
        if (x != s.a) as.push_back(x);
    s.b1 = bs[0];
    s.b2 = bs[1];
    s.a1 = as[0];
    s.a2 = as[1];
    return s;
}

}  // namespace

SplitResult e0_split(const Graph& g, const SplitSpec& spec) {
    SplitSite s = split_site(g, spec.e0);
    std::pair<int, int> p1, p2;
    if (spec.choice == SplitChoice::r1) {
        p1 = {s.a1, s.b1};
        p2 = {s.a2, s.b2};
    } else {
        p1 = {s.a1, s.b2};
        p2 = {s.a2, s.b1};
    }

    bool simple = !g.has_edge(p1.first, p1.second) && !g.has_edge(p2.first, p2.second) &&
                  !(p1 == p2);
    std::vector<std::pair<std::string, std::string>> pairs;
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (ed.u == s.a || ed.v == s.a || ed.u == s.b || ed.v == s.b) continue;
        pairs.emplace_back(g.label(ed.u), g.label(ed.v));
    }
    SplitResult res;
    res.added_pairs = {std::make_pair(g.label(p1.first), g.label(p1.second)),
                       std::make_pair(g.label(p2.first), g.label(p2.second))};
    pairs.push_back(res.added_pairs[0]);
    pairs.push_back(res.added_pairs[1]);
    res.is_simple = simple;
    res.graph = Graph::from_labeled_edges(std::move(pairs), {}, !simple);
    return res;
}

std::optional<SpecialSplitResult> special_e0_split(const Graph& g, const WagnerCertificate& cert,
                                                   int e0) {
    if (!validate_certificate(g, cert)) throw certificate_error("invalid certificate");
    if (!std::binary_search(cert.w_factor.edges.begin(), cert.w_factor.edges.end(), e0))
        return std::nullopt;

    std::set<int> special;
    for (int re : cert.r) {
        special.insert(g.edge(re).u);
        special.insert(g.edge(re).v);
    }
    int p = g.edge(e0).u, q = g.edge(e0).v;
    // One endpoint sits in each side of the bipartition; the side labelling is
    // arbitrary, so the "y is not special" clause reads: not both special.
    if (special.count(p) && special.count(q)) return std::nullopt;
    bool adjacent_special = false;
    for (int v : {p, q})
        for (int w : g.neighbors(v))
            if (special.count(w)) adjacent_special = true;
    if (!adjacent_special) return std::nullopt;

    try {
        split_site(g, e0);  // degree-3 endpoints, no shared neighbour
    } catch (const split_error&) {
        return std::nullopt;
    }

    for (SplitChoice choice : {SplitChoice::r1, SplitChoice::r2}) {
        SplitResult sr = e0_split(g, SplitSpec{e0, choice});
        if (!sr.is_simple) continue;
        SpecialSplitResult out{std::move(sr), choice, {}};
        for (int e : cert.w_factor.edges) {
            if (e == e0) continue;
            auto u = out.split.graph.vertex_by_label(g.label(g.edge(e).u));
            auto v = out.split.graph.vertex_by_label(g.label(g.edge(e).v));
            out.residual_factor.edges.push_back(*out.split.graph.find_edge(*u, *v));
        }
        std::sort(out.residual_factor.edges.begin(), out.residual_factor.edges.end());
        return out;
    }
    return std::nullopt;
}

namespace {

std::string fresh_split_label(const Graph& g, int k) {
    std::string base = "s" + std::to_string(k);
    while (g.vertex_by_label(base)) base += "'";
    return base;
}

}  // namespace

Graph glue(const Graph& g, std::pair<int, int> e1, std::pair<int, int> e2) {
    auto id1 = g.find_edge(e1.first, e1.second);
    auto id2 = g.find_edge(e2.first, e2.second);
    if (!id1 || !id2) throw glue_error("glue sites must be edges");
    if (*id1 == *id2) throw glue_error("glue sites must be distinct edges");
    std::set<int> ends{e1.first, e1.second, e2.first, e2.second};
    if (ends.size() != 4) throw glue_error("glue sites must be independent edges");

    // a joins the b-side endpoints, b joins the a-side endpoints.
    std::string la = fresh_split_label(g, 0);
    std::string lb = fresh_split_label(g, 1);
    std::vector<std::pair<std::string, std::string>> pairs;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (e == *id1 || e == *id2) continue;
        pairs.emplace_back(g.label(g.edge(e).u), g.label(g.edge(e).v));
    }
    pairs.emplace_back(la, lb);
    pairs.emplace_back(la, g.label(e1.second));
    pairs.emplace_back(la, g.label(e2.second));
    pairs.emplace_back(lb, g.label(e1.first));
    pairs.emplace_back(lb, g.label(e2.first));
    return Graph::from_labeled_edges(std::move(pairs));
}

}  // namespace matchorient
