#include "matchorient/matching.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

namespace matchorient {

namespace {

void require_mask_scale(const Graph& g) {
    if (g.vertex_count() > 62)
        throw precondition_error("matching routines are exhaustive; graph too large");
    if (!g.is_simple()) throw precondition_error("matching routines expect a simple graph");
}

// Backtracking over the lowest uncovered vertex, memoized on the covered set.
struct PmSearch {
    const Graph& g;
    std::uint64_t full;
    std::unordered_map<std::uint64_t, bool> memo;

    explicit PmSearch(const Graph& g_, std::uint64_t preset) : g(g_) {
        full = (g.vertex_count() == 0) ? 0 : ((std::uint64_t(1) << g.vertex_count()) - 1);
        memo.reserve(1024);
        covered_preset = preset;
    }
    std::uint64_t covered_preset = 0;

    bool feasible(std::uint64_t covered) {
        if (covered == full) return true;
        auto it = memo.find(covered);
        if (it != memo.end()) return it->second;
        int v = 0;
        while (covered & (std::uint64_t(1) << v)) ++v;
        bool ok = false;
        for (int e : g.incident_edges(v)) {
            int w = g.other_end(e, v);
            if (covered & (std::uint64_t(1) << w)) continue;
            if (feasible(covered | (std::uint64_t(1) << v) | (std::uint64_t(1) << w))) {
                ok = true;
                break;
            }
        }
        memo.emplace(covered, ok);
        return ok;
    }

    bool run() {
        int free_count = 0;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (!(covered_preset & (std::uint64_t(1) << v))) ++free_count;
        if (free_count % 2 != 0) return false;
        return feasible(covered_preset);
    }
};

bool has_pm_avoiding(const Graph& g, std::uint64_t blocked) {
    PmSearch s(g, blocked);
    return s.run();
}

std::uint64_t vertex_mask(const std::vector<int>& vs) {
    std::uint64_t m = 0;
    for (int v : vs) m |= std::uint64_t(1) << v;
    return m;
}

void enumerate_rec(const Graph& g, std::uint64_t covered, std::uint64_t full,
                   std::vector<int>& current, std::vector<OneFactor>& out) {
    if (covered == full) {
        out.push_back(OneFactor{current});
        return;
    }
    int v = 0;
    while (covered & (std::uint64_t(1) << v)) ++v;
    for (int e : g.incident_edges(v)) {
        int w = g.other_end(e, v);
        if (covered & (std::uint64_t(1) << w)) continue;
        current.push_back(e);
        enumerate_rec(g, covered | (std::uint64_t(1) << v) | (std::uint64_t(1) << w), full,
                      current, out);
        current.pop_back();
    }
}

}  // namespace

MatchingSet enumerate_perfect_matchings(const Graph& g) {
    require_mask_scale(g);
    MatchingSet set;
    if (g.vertex_count() % 2 != 0) return set;
    std::uint64_t full =
        (g.vertex_count() == 0) ? 0 : ((std::uint64_t(1) << g.vertex_count()) - 1);
    std::vector<int> current;
    enumerate_rec(g, 0, full, current, set.matchings);
    // The recursion picks edges in increasing index at each lowest uncovered
    // vertex, which already yields lexicographic order; keep it guaranteed.
    std::sort(set.matchings.begin(), set.matchings.end());
    return set;
}

bool has_perfect_matching(const Graph& g) {
    require_mask_scale(g);
    return has_pm_avoiding(g, 0);
}

std::optional<OneFactor> first_perfect_matching(const Graph& g) {
    require_mask_scale(g);
    if (g.vertex_count() % 2 != 0) return std::nullopt;
    std::uint64_t full =
        (g.vertex_count() == 0) ? 0 : ((std::uint64_t(1) << g.vertex_count()) - 1);
    std::uint64_t covered = 0;
    std::vector<int> chosen;
    while (covered != full) {
        int v = 0;
        while (covered & (std::uint64_t(1) << v)) ++v;
        bool advanced = false;
        for (int e : g.incident_edges(v)) {
            int w = g.other_end(e, v);
            if (covered & (std::uint64_t(1) << w)) continue;
            std::uint64_t next = covered | (std::uint64_t(1) << v) | (std::uint64_t(1) << w);
            if (has_pm_avoiding(g, next)) {
                chosen.push_back(e);
                covered = next;
                advanced = true;
                break;
            }
        }
        if (!advanced) return std::nullopt;
    }
    std::sort(chosen.begin(), chosen.end());
    return OneFactor{chosen};
}

ExtendibilityReport is_one_extendible(const Graph& g) {
    require_mask_scale(g);
    ExtendibilityReport rep;
    rep.one_extendible = true;
    if (g.vertex_count() > 0 && g.edge_count() == 0) {
        rep.one_extendible = false;
        return rep;
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (!has_pm_avoiding(g, vertex_mask({ed.u, ed.v}))) {
            rep.one_extendible = false;
            rep.offending_edge = e;
            return rep;
        }
    }
    return rep;
}

bool is_bicritical(const Graph& g) {
    require_mask_scale(g);
    if (g.vertex_count() < 2 || g.vertex_count() % 2 != 0 || g.edge_count() == 0) return false;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (!has_pm_avoiding(g, vertex_mask({u, v}))) return false;
    return true;
}

int odd_component_count(const Graph& g, const std::vector<int>& removed) {
    int c0 = 0;
    for (const auto& comp : g.components_without(removed))
        if (comp.size() % 2 == 1) ++c0;
    return c0;
}

namespace {

template <typename Pred>
std::vector<Barrier> collect_barriers(const Graph& g, int max_size, Pred&& qualifies) {
    std::vector<Barrier> out;
    const int n = g.vertex_count();
    max_size = std::min(max_size, n);
    std::vector<int> pick;
    auto rec = [&](auto&& self, int start, int remaining) -> void {
        if (remaining == 0) {
            int c0 = odd_component_count(g, pick);
            if (qualifies(c0, static_cast<int>(pick.size())))
                out.push_back(Barrier{pick, c0, pick.size() <= 1});
            return;
        }
        for (int v = start; v < n; ++v) {
            pick.push_back(v);
            self(self, v + 1, remaining - 1);
            pick.pop_back();
        }
    };
    // Size-major order: all subsets of size s before size s+1.
    for (int s = 0; s <= max_size; ++s) rec(rec, 0, s);
    return out;
}

}  // namespace

std::vector<Barrier> barriers(const Graph& g, int max_size) {
    return collect_barriers(g, max_size, [](int c0, int s) { return c0 > s; });
}

std::vector<Barrier> exact_barriers(const Graph& g, int max_size) {
    return collect_barriers(g, max_size, [](int c0, int s) { return c0 == s && c0 > 0; });
}

bool is_e0_bad(const Graph& g, int e, int e0) {
    require_mask_scale(g);
    if (e < 0 || e0 < 0 || e >= g.edge_count() || e0 >= g.edge_count())
        throw precondition_error("edge index out of range");
    if (e == e0) return true;
    const Edge& ee = g.edge(e);
    const Edge& e0e = g.edge(e0);
    // Matchings through e that avoid e0: block e's endpoints, drop e0, and add
    // e back implicitly by requiring the rest to be matchable.
    if (ee.u == e0e.u || ee.u == e0e.v || ee.v == e0e.u || ee.v == e0e.v) {
        // Adjacent edges can never occur together, so "every matching with e
        // contains e0" holds only if e lies in no matching at all.
        return !has_pm_avoiding(g, vertex_mask({ee.u, ee.v}));
    }
    Graph without = g.without_edges({e0});
    return !has_pm_avoiding(without, vertex_mask({ee.u, ee.v}));
}

std::optional<std::vector<int>> tutte_deficiency_check(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> pick;
    std::optional<std::vector<int>> hit;
    auto rec_exact = [&](auto&& self, int start, int remaining) -> bool {
        if (remaining == 0)
            return odd_component_count(g, pick) > static_cast<int>(pick.size());
        for (int v = start; v < n; ++v) {
            pick.push_back(v);
            if (self(self, v + 1, remaining - 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    for (int s = 0; s <= n; ++s) {
        if (rec_exact(rec_exact, 0, s)) return pick;
    }
    return std::nullopt;
}

}  // namespace matchorient
