#include "matchorient/alternating.hpp"

#include <algorithm>
#include <set>

namespace matchorient {

AltCycle make_alt_cycle(const Graph& g, const OneFactor& f, const PathSeq& verts) {
    AltCycle c;
    c.verts = canonical_cycle(verts);
    check_walk(g, c.verts, true);
    std::vector<bool> in_f(static_cast<std::size_t>(g.edge_count()), false);
    for (int e : f.edges) in_f[static_cast<std::size_t>(e)] = true;
    const std::size_t n = c.verts.size();
    if (n % 2 != 0) throw precondition_error("alternating cycle must be even");
    int last_was_f = -1;
    for (std::size_t i = 0; i < n; ++i) {
        int e = *g.find_edge(c.verts[i], c.verts[(i + 1) % n]);
        c.edges.push_back(e);
        int is_f = in_f[static_cast<std::size_t>(e)] ? 1 : 0;
        if (is_f) c.f_edges.push_back(e);
        if (last_was_f == is_f)
            throw precondition_error("cycle does not alternate factor/non-factor edges");
        last_was_f = is_f;
    }
    std::sort(c.edges.begin(), c.edges.end());
    std::sort(c.f_edges.begin(), c.f_edges.end());
    return c;
}

std::vector<AltCycle> enumerate_alternating_cycles(const Graph& g, const OneFactor& f,
                                                   std::size_t cap) {
    if (!is_one_factor(g, f)) throw precondition_error("f is not a 1-factor of g");
    if (!g.is_simple()) throw precondition_error("alternating cycles expect a simple graph");

    std::vector<bool> in_f(static_cast<std::size_t>(g.edge_count()), false);
    for (int e : f.edges) in_f[static_cast<std::size_t>(e)] = true;

    std::set<PathSeq> seen;
    std::vector<AltCycle> out;
    std::vector<bool> on_path(static_cast<std::size_t>(g.vertex_count()), false);
    PathSeq path;

    // Seeded from each factor edge, traversed low->high endpoint; a cycle is
    // recorded only from its minimal factor edge, which makes every cycle
    // appear exactly once.
    for (int seed : f.edges) {
        int a = g.edge(seed).u, b = g.edge(seed).v;
        path = {a, b};
        on_path[static_cast<std::size_t>(a)] = on_path[static_cast<std::size_t>(b)] = true;

        // state: at path.back(), the last edge was a factor edge; try non-factor
        // continuations, each followed by the forced factor edge.
        auto dfs = [&](auto&& self, int v) -> void {
            for (int e : g.incident_edges(v)) {
                if (in_f[static_cast<std::size_t>(e)]) continue;
                int w = g.other_end(e, v);
                if (w == a && path.size() >= 4) {
                    if (out.size() >= cap) throw cycle_cap_error("cycle cap exceeded");
                    PathSeq canon = canonical_cycle(path);
                    if (seen.insert(canon).second) out.push_back(make_alt_cycle(g, f, canon));
                    continue;
                }
                if (on_path[static_cast<std::size_t>(w)]) continue;
                int fe = factor_edge_at(g, f, w);
                if (fe < seed) continue;  // cycle owned by a smaller seed
                int x = g.other_end(fe, w);
                if (on_path[static_cast<std::size_t>(x)]) continue;
                path.push_back(w);
                path.push_back(x);
                on_path[static_cast<std::size_t>(w)] = on_path[static_cast<std::size_t>(x)] = true;
                self(self, x);
                on_path[static_cast<std::size_t>(w)] = on_path[static_cast<std::size_t>(x)] = false;
                path.pop_back();
                path.pop_back();
            }
        };
        dfs(dfs, b);
        on_path[static_cast<std::size_t>(a)] = on_path[static_cast<std::size_t>(b)] = false;
    }
    std::sort(out.begin(), out.end());
    return out;
}

int omega(const Graph& g, const Orientation& o, const PathSeq& walk, bool closed) {
    check_walk(g, walk, closed);
    int count = 0;
    const std::size_t n = walk.size();
    const std::size_t pairs = closed ? n : n - 1;
    for (std::size_t i = 0; i < pairs; ++i) {
        int u = walk[i], v = walk[(i + 1) % n];
        int e = *g.find_edge(u, v);
        if (o.directed_from(g, e, u)) ++count;
    }
    return count % 2;
}

std::vector<std::size_t> CycleClassification::even_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < parity.size(); ++i)
        if (parity[i] == 0) out.push_back(i);
    return out;
}

std::vector<std::size_t> CycleClassification::odd_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < parity.size(); ++i)
        if (parity[i] == 1) out.push_back(i);
    return out;
}

bool CycleClassification::all_even() const {
    return std::all_of(parity.begin(), parity.end(), [](int p) { return p == 0; });
}

bool CycleClassification::all_odd() const {
    return std::all_of(parity.begin(), parity.end(), [](int p) { return p == 1; });
}

CycleClassification classify_cycles(const Graph& g, const Orientation& o, const OneFactor& f,
                                    std::size_t cap) {
    CycleClassification res;
    res.cycles = enumerate_alternating_cycles(g, f, cap);
    res.parity.reserve(res.cycles.size());
    for (const AltCycle& c : res.cycles) res.parity.push_back(omega(g, o, c.verts, true));
    return res;
}

}  // namespace matchorient
