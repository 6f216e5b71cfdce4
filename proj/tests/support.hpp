#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "matchorient/alternating.hpp"
#include "matchorient/graph.hpp"
#include "matchorient/matching.hpp"

namespace motest {

using namespace matchorient;

// Independent oracle: every simple cycle, by exhaustive DFS anchored at the
// cycle's smallest vertex. Intended for small graphs only.
inline std::vector<PathSeq> all_simple_cycles(const Graph& g) {
    std::set<PathSeq> seen;
    std::vector<int> path;
    std::vector<bool> on_path(static_cast<std::size_t>(g.vertex_count()), false);
    auto dfs = [&](auto&& self, int v, int anchor) -> void {
        for (int e : g.incident_edges(v)) {
            int w = g.other_end(e, v);
            if (w == anchor && path.size() >= 3) {
                seen.insert(canonical_cycle(path));
                continue;
            }
            if (w <= anchor || on_path[static_cast<std::size_t>(w)]) continue;
            path.push_back(w);
            on_path[static_cast<std::size_t>(w)] = true;
            self(self, w, anchor);
            on_path[static_cast<std::size_t>(w)] = false;
            path.pop_back();
        }
    };
    for (int v = 0; v < g.vertex_count(); ++v) {
        path = {v};
        on_path[static_cast<std::size_t>(v)] = true;
        dfs(dfs, v, v);
        on_path[static_cast<std::size_t>(v)] = false;
    }
    return {seen.begin(), seen.end()};
}

inline bool cycle_is_alternating(const Graph& g, const OneFactor& f, const PathSeq& c) {
    if (c.size() % 2 != 0) return false;
    std::vector<bool> in_f(static_cast<std::size_t>(g.edge_count()), false);
    for (int e : f.edges) in_f[static_cast<std::size_t>(e)] = true;
    int prev = -1;
    for (std::size_t i = 0; i < c.size(); ++i) {
        auto e = g.find_edge(c[i], c[(i + 1) % c.size()]);
        if (!e) return false;
        int cur = in_f[static_cast<std::size_t>(*e)] ? 1 : 0;
        if (cur == prev) return false;
        prev = cur;
    }
    return true;
}

// Oracle route to the alternating cycles: filter all simple cycles.
inline std::vector<PathSeq> alternating_cycles_by_filter(const Graph& g, const OneFactor& f) {
    std::vector<PathSeq> out;
    for (const PathSeq& c : all_simple_cycles(g))
        if (cycle_is_alternating(g, f, c)) out.push_back(c);
    return out;
}

struct OrientationSearch {
    bool even_exists = false;
    bool odd_exists = false;
};

// Exhaustive check over all 2^|E| orientations.
inline OrientationSearch exhaustive_orientation_search(const Graph& g, const OneFactor& f) {
    auto cycles = enumerate_alternating_cycles(g, f);
    std::vector<std::uint32_t> cycle_mask;
    std::vector<int> base;  // omega under the reference orientation
    Orientation ref = Orientation::reference(g);
    for (const AltCycle& c : cycles) {
        std::uint32_t m = 0;
        for (int e : c.edges) m |= std::uint32_t(1) << e;
        cycle_mask.push_back(m);
        base.push_back(omega(g, ref, c.verts, true));
    }
    OrientationSearch res;
    if (cycles.empty()) {
        res.even_exists = res.odd_exists = true;
        return res;
    }
    const std::uint32_t full = std::uint32_t(1) << g.edge_count();
    for (std::uint32_t flips = 0; flips < full; ++flips) {
        bool all_even = true, all_odd = true;
        for (std::size_t i = 0; i < cycle_mask.size(); ++i) {
            int w = base[i] ^ (std::popcount(flips & cycle_mask[i]) & 1);
            (w == 0 ? all_odd : all_even) = false;
            if (!all_even && !all_odd) break;
        }
        res.even_exists |= all_even;
        res.odd_exists |= all_odd;
        if (res.even_exists && res.odd_exists) break;
    }
    return res;
}

// Random connected graph with a perfect matching and at most max_edges edges.
inline Graph random_matchable_graph(std::mt19937& rng, int max_edges = 12) {
    while (true) {
        std::uniform_int_distribution<int> nd(2, 4);
        int n = 2 * nd(rng);
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::set<std::pair<int, int>> edges;
        for (int i = 0; i < n; i += 2) {
            int a = perm[static_cast<std::size_t>(i)], b = perm[static_cast<std::size_t>(i + 1)];
            edges.emplace(std::min(a, b), std::max(a, b));
        }
        std::uniform_int_distribution<int> extra_d(0, max_edges - n / 2);
        int extra = extra_d(rng);
        std::uniform_int_distribution<int> vd(0, n - 1);
        for (int t = 0; t < extra * 3 && static_cast<int>(edges.size()) < max_edges; ++t) {
            int a = vd(rng), b = vd(rng);
            if (a == b) continue;
            edges.emplace(std::min(a, b), std::max(a, b));
        }
        Graph g = Graph::from_index_edges(n, {edges.begin(), edges.end()});
        if (g.connected() && g.edge_count() <= max_edges) return g;
    }
}

// Random simple cubic graph via the pairing model; retries until simple.
inline Graph random_cubic_graph(std::mt19937& rng, int n) {
    while (true) {
        std::vector<int> stubs;
        for (int v = 0; v < n; ++v)
            for (int k = 0; k < 3; ++k) stubs.push_back(v);
        std::shuffle(stubs.begin(), stubs.end(), rng);
        std::set<std::pair<int, int>> edges;
        bool ok = true;
        for (std::size_t i = 0; i < stubs.size(); i += 2) {
            int a = stubs[i], b = stubs[i + 1];
            if (a == b || !edges.emplace(std::min(a, b), std::max(a, b)).second) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        Graph g = Graph::from_index_edges(n, {edges.begin(), edges.end()});
        if (g.connected()) return g;
    }
}

}  // namespace motest
