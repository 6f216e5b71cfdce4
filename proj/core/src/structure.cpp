#include "matchorient/structure.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace matchorient {

namespace {

Graph subgraph_from_edges(const Graph& g, const std::vector<int>& edge_ids) {
    std::vector<std::pair<std::string, std::string>> pairs;
    pairs.reserve(edge_ids.size());
    for (int e : edge_ids)
        pairs.emplace_back(g.label(g.edge(e).u), g.label(g.edge(e).v));
    return Graph::from_labeled_edges(std::move(pairs));
}

}  // namespace

Graph stage_graph(const Graph& g, const EarStage& stage) {
    return subgraph_from_edges(g, stage.edge_ids);
}

EarDecomposition f_reducible_ear_decomposition(const Graph& g, const OneFactor& f) {
    if (!g.connected()) throw precondition_error("ear decomposition expects a connected graph");
    if (!is_one_factor(g, f)) throw precondition_error("f is not a 1-factor of g");
    if (!is_one_extendible(g).one_extendible)
        throw precondition_error("ear decomposition expects a 1-extendable graph");

    const MatchingSet all = enumerate_perfect_matchings(g);
    std::vector<bool> in_f(static_cast<std::size_t>(g.edge_count()), false);
    for (int e : f.edges) in_f[static_cast<std::size_t>(e)] = true;

    EarDecomposition dec;
    std::vector<bool> edge_in(static_cast<std::size_t>(g.edge_count()), false);
    std::vector<bool> vert_in(static_cast<std::size_t>(g.vertex_count()), false);

    auto push_stage = [&](std::vector<PathSeq> ears) {
        EarStage st;
        st.ears = std::move(ears);
        for (int e = 0; e < g.edge_count(); ++e)
            if (edge_in[static_cast<std::size_t>(e)]) {
                st.edge_ids.push_back(e);
                if (in_f[static_cast<std::size_t>(e)]) st.factor_edges.push_back(e);
            }
        dec.stages.push_back(std::move(st));
    };

    int seed = f.edges.front();
    edge_in[static_cast<std::size_t>(seed)] = true;
    vert_in[static_cast<std::size_t>(g.edge(seed).u)] = true;
    vert_in[static_cast<std::size_t>(g.edge(seed).v)] = true;
    int edges_in_count = 1;
    push_stage({});

    while (edges_in_count < g.edge_count()) {
        // Frontier edge: exactly one end inside if possible, else both ends.
        int chosen = -1;
        for (int e = 0; e < g.edge_count() && chosen == -1; ++e) {
            if (edge_in[static_cast<std::size_t>(e)]) continue;
            bool u_in = vert_in[static_cast<std::size_t>(g.edge(e).u)];
            bool v_in = vert_in[static_cast<std::size_t>(g.edge(e).v)];
            if (u_in != v_in) chosen = e;
        }
        for (int e = 0; e < g.edge_count() && chosen == -1; ++e) {
            if (edge_in[static_cast<std::size_t>(e)]) continue;
            if (vert_in[static_cast<std::size_t>(g.edge(e).u)] &&
                vert_in[static_cast<std::size_t>(g.edge(e).v)])
                chosen = e;
        }
        if (chosen == -1) throw precondition_error("graph is not connected to the seed factor edge");

        const OneFactor* m = nullptr;
        for (const OneFactor& cand : all.matchings) {
            if (std::binary_search(cand.edges.begin(), cand.edges.end(), chosen)) {
                m = &cand;
                break;
            }
        }
        if (m == nullptr) throw precondition_error("1-extendability invariant violated");

        // Candidate ears: path components of (M \ stage) union (F \ F_stage)
        // whose endpoints lie in the current stage.
        std::vector<int> h_edges;
        for (int e : m->edges)
            if (!edge_in[static_cast<std::size_t>(e)]) h_edges.push_back(e);
        for (int e : f.edges)
            if (!edge_in[static_cast<std::size_t>(e)] &&
                !std::binary_search(m->edges.begin(), m->edges.end(), e))
                h_edges.push_back(e);

        std::vector<std::vector<int>> h_inc(static_cast<std::size_t>(g.vertex_count()));
        for (int e : h_edges) {
            h_inc[static_cast<std::size_t>(g.edge(e).u)].push_back(e);
            h_inc[static_cast<std::size_t>(g.edge(e).v)].push_back(e);
        }
        std::vector<PathSeq> candidates;
        std::vector<bool> edge_seen(static_cast<std::size_t>(g.edge_count()), false);
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (!vert_in[static_cast<std::size_t>(v)]) continue;
            for (int e0 : h_inc[static_cast<std::size_t>(v)]) {
                if (edge_seen[static_cast<std::size_t>(e0)]) continue;
                PathSeq path{v};
                int prev = v, e = e0;
                bool closes_in_stage = false;
                while (true) {
                    edge_seen[static_cast<std::size_t>(e)] = true;
                    int w = g.other_end(e, prev);
                    path.push_back(w);
                    if (vert_in[static_cast<std::size_t>(w)]) {
                        closes_in_stage = true;
                        break;
                    }
                    const auto& inc = h_inc[static_cast<std::size_t>(w)];
                    if (inc.size() < 2) break;  // dangling; not adjoinable
                    e = (inc[0] == e) ? inc[1] : inc[0];
                    prev = w;
                }
                if (closes_in_stage) {
                    if (path.back() < path.front()) std::reverse(path.begin(), path.end());
                    candidates.push_back(std::move(path));
                }
            }
        }
        std::sort(candidates.begin(), candidates.end(),
                  [](const PathSeq& a, const PathSeq& b) {
                      return a.size() != b.size() ? a.size() < b.size() : a < b;
                  });

        // Minimal non-empty subset whose adjunction stays 1-extendable. By the
        // construction the full set always works, so a minimal one exists; a
        // removable system has at most two ears, which the tests assert.
        auto try_subset = [&](const std::vector<std::size_t>& subset) -> bool {
            std::vector<int> trial_edges;
            for (int e = 0; e < g.edge_count(); ++e)
                if (edge_in[static_cast<std::size_t>(e)]) trial_edges.push_back(e);
            for (std::size_t ci : subset) {
                const PathSeq& p = candidates[ci];
                for (std::size_t i = 0; i + 1 < p.size(); ++i)
                    trial_edges.push_back(*g.find_edge(p[i], p[i + 1]));
            }
            Graph trial = subgraph_from_edges(g, trial_edges);
            return is_one_extendible(trial).one_extendible;
        };

        std::vector<std::size_t> chosen_subset;
        const std::size_t k = candidates.size();
        std::vector<std::size_t> subset;
        auto search = [&](auto&& self, std::size_t start, std::size_t want) -> bool {
            if (subset.size() == want) return try_subset(subset);
            for (std::size_t i = start; i < k; ++i) {
                subset.push_back(i);
                if (self(self, i + 1, want)) return true;
                subset.pop_back();
            }
            return false;
        };
        for (std::size_t want = 1; want <= k && chosen_subset.empty(); ++want) {
            subset.clear();
            if (search(search, 0, want)) chosen_subset = subset;
        }
        if (chosen_subset.empty())
            throw precondition_error("no removable ear system found; construction invariant violated");

        std::vector<PathSeq> ears;
        for (std::size_t ci : chosen_subset) {
            const PathSeq& p = candidates[ci];
            for (std::size_t i = 0; i + 1 < p.size(); ++i) {
                int e = *g.find_edge(p[i], p[i + 1]);
                if (!edge_in[static_cast<std::size_t>(e)]) {
                    edge_in[static_cast<std::size_t>(e)] = true;
                    ++edges_in_count;
                }
            }
            for (int v : p) vert_in[static_cast<std::size_t>(v)] = true;
            ears.push_back(p);
        }
        push_stage(std::move(ears));
    }
    return dec;
}

Cut make_cut(const Graph& g, std::vector<int> side) {
    std::sort(side.begin(), side.end());
    side.erase(std::unique(side.begin(), side.end()), side.end());
    std::vector<bool> in(static_cast<std::size_t>(g.vertex_count()), false);
    for (int v : side) in[static_cast<std::size_t>(v)] = true;
    Cut cut;
    cut.side = std::move(side);
    for (int e = 0; e < g.edge_count(); ++e)
        if (in[static_cast<std::size_t>(g.edge(e).u)] != in[static_cast<std::size_t>(g.edge(e).v)])
            cut.edges.push_back(e);
    return cut;
}

namespace {

std::string fresh_label(const Graph& g) {
    std::string label = "*";
    while (g.vertex_by_label(label)) label += "*";
    return label;
}

Graph contract_side(const Graph& g, const std::vector<bool>& in_side) {
    std::string star = fresh_label(g);
    std::set<std::pair<std::string, std::string>> pairs;
    std::vector<std::string> isolated{star};
    for (const Edge& e : g.edges()) {
        bool ui = in_side[static_cast<std::size_t>(e.u)], vi = in_side[static_cast<std::size_t>(e.v)];
        if (ui && vi) continue;
        std::string a = ui ? star : g.label(e.u);
        std::string b = vi ? star : g.label(e.v);
        if (b < a) std::swap(a, b);  // consistent order so the set removes parallels
        pairs.emplace(a, b);
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!in_side[static_cast<std::size_t>(v)]) isolated.push_back(g.label(v));
    return Graph::from_labeled_edges({pairs.begin(), pairs.end()}, std::move(isolated));
}

}  // namespace

Shores cut_shores(const Graph& g, const Cut& cut) {
    std::vector<bool> in(static_cast<std::size_t>(g.vertex_count()), false);
    for (int v : cut.side) in[static_cast<std::size_t>(v)] = true;
    std::vector<bool> out = in;
    out.flip();
    return Shores{contract_side(g, in), contract_side(g, out)};
}

std::vector<TightCutReport> enumerate_tight_cuts(const Graph& g, int exhaustive_limit) {
    const int n = g.vertex_count();
    if (n > exhaustive_limit)
        throw search_cap_error("cut enumeration is exhaustive; graph exceeds the limit");
    if (n > 62) throw search_cap_error("cut enumeration limited to 62 vertices");
    MatchingSet ms = enumerate_perfect_matchings(g);

    std::vector<TightCutReport> out;
    const std::uint64_t full = (n == 0) ? 0 : ((std::uint64_t(1) << n) - 1);
    for (std::uint64_t mask = 1; mask < full; mask += 2) {  // vertex 0 stays on the side
        TightCutReport rep;
        std::vector<int> side;
        for (int v = 0; v < n; ++v)
            if (mask & (std::uint64_t(1) << v)) side.push_back(v);
        rep.cut = make_cut(g, side);
        for (std::size_t mi = 0; mi < ms.matchings.size(); ++mi) {
            int crossing = 0;
            for (int e : rep.cut.edges)
                if (std::binary_search(ms.matchings[mi].edges.begin(),
                                       ms.matchings[mi].edges.end(), e))
                    ++crossing;
            if (crossing == 1) rep.f_tight_for.push_back(mi);
        }
        rep.tight = !ms.matchings.empty() && rep.f_tight_for.size() == ms.matchings.size();
        rep.trivial = rep.cut.side.size() == 1 || rep.cut.side.size() == static_cast<std::size_t>(n - 1);
        if (rep.tight) rep.shores = cut_shores(g, rep.cut);
        out.push_back(std::move(rep));
    }
    return out;
}

bool has_nontrivial_tight_cut(const Graph& g) {
    for (const TightCutReport& rep : enumerate_tight_cuts(g))
        if (rep.tight && !rep.trivial) return true;
    return false;
}

bool is_brick(const Graph& g) {
    if (g.vertex_count() < 4 || bipartition(g).has_value()) return false;
    return vertex_connectivity_at_least(g, 3) && is_bicritical(g);
}

bool is_brick_by_definition(const Graph& g) {
    if (!g.connected() || bipartition(g).has_value()) return false;
    if (!is_one_extendible(g).one_extendible) return false;
    return !has_nontrivial_tight_cut(g);
}

bool is_brace(const Graph& g) {
    if (!g.connected() || !bipartition(g).has_value()) return false;
    if (!is_one_extendible(g).one_extendible) return false;
    return !has_nontrivial_tight_cut(g);
}

namespace {

void decompose(const Graph& g, std::vector<Graph>& pieces, std::mt19937_64* rng) {
    std::vector<const TightCutReport*> nontrivial;
    auto reports = enumerate_tight_cuts(g);
    for (const TightCutReport& rep : reports)
        if (rep.tight && !rep.trivial) nontrivial.push_back(&rep);
    if (nontrivial.empty()) {
        pieces.push_back(g);
        return;
    }
    std::size_t pick = 0;
    if (rng != nullptr)
        pick = std::uniform_int_distribution<std::size_t>(0, nontrivial.size() - 1)(*rng);
    const Shores& sh = *nontrivial[pick]->shores;
    decompose(sh.side_contracted, pieces, rng);
    decompose(sh.complement_contracted, pieces, rng);
}

void sort_pieces(std::vector<Graph>& pieces) {
    std::sort(pieces.begin(), pieces.end(), [](const Graph& a, const Graph& b) {
        if (a.vertex_count() != b.vertex_count()) return a.vertex_count() < b.vertex_count();
        if (a.edge_count() != b.edge_count()) return a.edge_count() < b.edge_count();
        return a.to_edge_list() < b.to_edge_list();
    });
}

}  // namespace

std::vector<Graph> tight_cut_decomposition(const Graph& g) {
    if (!is_one_extendible(g).one_extendible)
        throw precondition_error("tight cut decomposition expects a 1-extendable graph");
    std::vector<Graph> pieces;
    decompose(g, pieces, nullptr);
    sort_pieces(pieces);
    return pieces;
}

std::vector<Graph> tight_cut_decomposition_seeded(const Graph& g, std::uint64_t seed) {
    if (!is_one_extendible(g).one_extendible)
        throw precondition_error("tight cut decomposition expects a 1-extendable graph");
    std::mt19937_64 rng(seed);
    std::vector<Graph> pieces;
    decompose(g, pieces, &rng);
    sort_pieces(pieces);
    return pieces;
}

StructureCuts barrier_and_2separation_cuts(const Graph& g) {
    if (!g.connected() || !is_one_extendible(g).one_extendible)
        throw precondition_error("expects a connected 1-extendable graph");
    if (g.vertex_count() > 16)
        throw search_cap_error("barrier search is exhaustive; graph exceeds the limit");
    StructureCuts res;
    std::set<std::pair<int, std::vector<int>>> seen;  // (kind, cut edges)

    for (const Barrier& b : exact_barriers(g, g.vertex_count())) {
        if (b.trivial) continue;
        for (const auto& comp : g.components_without(b.vertices)) {
            if (comp.size() % 2 == 0 || comp.size() < 3) continue;
            Cut cut = make_cut(g, comp);
            if (seen.emplace(0, cut.edges).second)
                res.cuts.push_back(TaggedCut{std::move(cut), CutKind::barrier});
        }
    }

    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v = u + 1; v < g.vertex_count(); ++v) {
            auto comps = g.components_without({u, v});
            if (comps.size() < 2) continue;
            if (odd_component_count(g, {u, v}) == 2) continue;  // a barrier 2-separation
            if (comps.size() > 2) {
                res.unclassified_two_separations.emplace_back(u, v);
                continue;
            }
            for (int keep : {u, v}) {
                std::vector<int> side = comps[0];
                side.push_back(keep);
                Cut cut = make_cut(g, side);
                if (seen.emplace(1, cut.edges).second)
                    res.cuts.push_back(TaggedCut{std::move(cut), CutKind::two_separation});
            }
        }
    }
    return res;
}

}  // namespace matchorient
