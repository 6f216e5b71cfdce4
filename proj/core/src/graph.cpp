#include "matchorient/graph.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace matchorient {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// Numeric labels sort by value ahead of everything else; ties and the rest
// sort lexicographically. Keeps "1".."10" in the order people expect.
bool label_less(const std::string& a, const std::string& b) {
    bool na = all_digits(a), nb = all_digits(b);
    if (na != nb) return na;
    if (na && nb) {
        if (a.size() != b.size()) return a.size() < b.size();
    }
    return a < b;
}

}  // namespace

Graph Graph::build(std::vector<std::string> labels, std::vector<std::pair<int, int>> edges,
                   bool multi_ok) {
    Graph g;
    g.labels_ = std::move(labels);
    g.multi_ok_ = multi_ok;
    g.edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a == b) throw loop_error("self-loop at vertex '" + g.labels_[static_cast<std::size_t>(a)] + "'");
        g.edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    if (!multi_ok) {
        auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
        if (dup != g.edges_.end())
            throw multi_edge_error("repeated edge " + g.labels_[static_cast<std::size_t>(dup->u)] +
                                   " " + g.labels_[static_cast<std::size_t>(dup->v)]);
    }
    g.build_index();
    return g;
}

void Graph::build_index() {
    incident_.assign(labels_.size(), {});
    for (int e = 0; e < edge_count(); ++e) {
        incident_[static_cast<std::size_t>(edges_[static_cast<std::size_t>(e)].u)].push_back(e);
        incident_[static_cast<std::size_t>(edges_[static_cast<std::size_t>(e)].v)].push_back(e);
    }
}

Graph Graph::from_labeled_edges(std::vector<std::pair<std::string, std::string>> edges,
                                std::vector<std::string> isolated_vertices, bool multi_ok) {
    std::set<std::string> seen;
    for (const auto& [a, b] : edges) {
        seen.insert(a);
        seen.insert(b);
    }
    for (const auto& v : isolated_vertices) seen.insert(v);
    std::vector<std::string> labels(seen.begin(), seen.end());
    std::sort(labels.begin(), labels.end(), label_less);
    std::map<std::string, int> id;
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) id[labels[static_cast<std::size_t>(i)]] = i;
    std::vector<std::pair<int, int>> idx_edges;
    idx_edges.reserve(edges.size());
    for (const auto& [a, b] : edges) idx_edges.emplace_back(id[a], id[b]);
    return build(std::move(labels), std::move(idx_edges), multi_ok);
}

Graph Graph::from_index_edges(int n, std::vector<std::pair<int, int>> edges, bool multi_ok) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    for (auto [a, b] : edges)
        if (a < 0 || b < 0 || a >= n || b >= n) throw parse_error("edge endpoint out of range");
    return build(std::move(labels), std::move(edges), multi_ok);
}

Graph Graph::parse_edge_list(const std::string& text, bool multi_ok) {
    std::vector<std::pair<std::string, std::string>> edges;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue;  // blank or comment-only line
        if (!(ls >> b) || (ls >> extra))
            throw parse_error("expected two vertex labels per line, got: '" + line + "'");
        edges.emplace_back(a, b);
    }
    if (edges.empty()) throw parse_error("no edges in input");
    return from_labeled_edges(std::move(edges), {}, multi_ok);
}

namespace {

std::string json_label(const nlohmann::json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw parse_error("vertex labels must be strings or integers");
}

}  // namespace

Graph Graph::parse_json(const std::string& text, bool multi_ok) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("edges") || !j["edges"].is_array())
        throw parse_error("expected {\"vertices\":[...], \"edges\":[[a,b],...]}");
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) throw parse_error("each edge must be a pair");
        edges.emplace_back(json_label(e[0]), json_label(e[1]));
    }
    std::vector<std::string> isolated;
    if (j.contains("vertices"))
        for (const auto& v : j["vertices"]) isolated.push_back(json_label(v));
    return from_labeled_edges(std::move(edges), std::move(isolated), multi_ok);
}

Graph Graph::parse(const std::string& text, bool multi_ok) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{' ? parse_json(text, multi_ok) : parse_edge_list(text, multi_ok);
    }
    throw parse_error("empty input");
}

std::string Graph::to_edge_list() const {
    std::ostringstream out;
    for (const Edge& e : edges_)
        out << labels_[static_cast<std::size_t>(e.u)] << ' ' << labels_[static_cast<std::size_t>(e.v)] << '\n';
    return out.str();
}

std::string Graph::to_json(bool pretty) const {
    nlohmann::json j;
    j["vertices"] = labels_;
    auto edges = nlohmann::json::array();
    for (const Edge& e : edges_)
        edges.push_back({labels_[static_cast<std::size_t>(e.u)], labels_[static_cast<std::size_t>(e.v)]});
    j["edges"] = edges;
    return pretty ? j.dump(2) : j.dump();
}

std::optional<int> Graph::find_edge(int u, int v) const {
    Edge key{std::min(u, v), std::max(u, v)};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || !(*it == key)) return std::nullopt;
    return static_cast<int>(it - edges_.begin());
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    out.reserve(incident_[static_cast<std::size_t>(v)].size());
    for (int e : incident_[static_cast<std::size_t>(v)]) out.push_back(other_end(e, v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<int> Graph::vertex_by_label(const std::string& s) const {
    for (int v = 0; v < vertex_count(); ++v)
        if (labels_[static_cast<std::size_t>(v)] == s) return v;
    return std::nullopt;
}

bool Graph::is_simple() const {
    return std::adjacent_find(edges_.begin(), edges_.end()) == edges_.end();
}

Graph Graph::simplified() const {
    std::vector<Edge> dedup = edges_;
    dedup.erase(std::unique(dedup.begin(), dedup.end()), dedup.end());
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(dedup.size());
    for (const Edge& e : dedup) pairs.emplace_back(e.u, e.v);
    return build(labels_, std::move(pairs), false);
}

Graph Graph::without_edges(const std::vector<int>& edge_ids) const {
    std::vector<bool> drop(static_cast<std::size_t>(edge_count()), false);
    for (int e : edge_ids) drop[static_cast<std::size_t>(e)] = true;
    std::vector<std::pair<int, int>> pairs;
    for (int e = 0; e < edge_count(); ++e)
        if (!drop[static_cast<std::size_t>(e)])
            pairs.emplace_back(edges_[static_cast<std::size_t>(e)].u, edges_[static_cast<std::size_t>(e)].v);
    return build(labels_, std::move(pairs), multi_ok_);
}

Graph Graph::without_vertices(const std::vector<int>& vertex_ids) const {
    std::vector<bool> drop(static_cast<std::size_t>(vertex_count()), false);
    for (int v : vertex_ids) drop[static_cast<std::size_t>(v)] = true;
    std::vector<int> keep;
    for (int v = 0; v < vertex_count(); ++v)
        if (!drop[static_cast<std::size_t>(v)]) keep.push_back(v);
    return induced(keep);
}

Graph Graph::induced(const std::vector<int>& vertex_ids) const {
    std::vector<std::string> labels;
    std::vector<bool> in(static_cast<std::size_t>(vertex_count()), false);
    for (int v : vertex_ids) in[static_cast<std::size_t>(v)] = true;
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const Edge& e : edges_)
        if (in[static_cast<std::size_t>(e.u)] && in[static_cast<std::size_t>(e.v)])
            pairs.emplace_back(labels_[static_cast<std::size_t>(e.u)], labels_[static_cast<std::size_t>(e.v)]);
    for (int v : vertex_ids) labels.push_back(labels_[static_cast<std::size_t>(v)]);
    return from_labeled_edges(std::move(pairs), std::move(labels), multi_ok_);
}

std::vector<std::vector<int>> Graph::components_without(const std::vector<int>& removed) const {
    std::vector<int> state(static_cast<std::size_t>(vertex_count()), 0);  // 0 fresh, 1 removed, 2 seen
    for (int v : removed) state[static_cast<std::size_t>(v)] = 1;
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < vertex_count(); ++s) {
        if (state[static_cast<std::size_t>(s)] != 0) continue;
        std::vector<int> comp, stack{s};
        state[static_cast<std::size_t>(s)] = 2;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int e : incident_[static_cast<std::size_t>(v)]) {
                int w = other_end(e, v);
                if (state[static_cast<std::size_t>(w)] == 0) {
                    state[static_cast<std::size_t>(w)] = 2;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::vector<std::vector<int>> Graph::components() const { return components_without({}); }

bool Graph::connected() const { return components().size() <= 1; }

Orientation Orientation::from_directed_labels(
    const Graph& g, const std::vector<std::pair<std::string, std::string>>& arcs) {
    Orientation o = Orientation::reference(g);
    std::vector<bool> covered(static_cast<std::size_t>(g.edge_count()), false);
    for (const auto& [t, h] : arcs) {
        auto tv = g.vertex_by_label(t), hv = g.vertex_by_label(h);
        if (!tv || !hv) throw precondition_error("unknown vertex label in arc " + t + "->" + h);
        auto e = g.find_edge(*tv, *hv);
        if (!e) throw precondition_error("arc " + t + "->" + h + " is not an edge");
        if (covered[static_cast<std::size_t>(*e)])
            throw precondition_error("edge " + t + " " + h + " directed twice");
        covered[static_cast<std::size_t>(*e)] = true;
        o.reversed[static_cast<std::size_t>(*e)] = (*tv == g.edge(*e).v) ? 1 : 0;
    }
    for (bool c : covered)
        if (!c) throw precondition_error("orientation must direct every edge");
    return o;
}

Orientation Orientation::flipped_all() const {
    Orientation o = *this;
    for (auto& b : o.reversed) b ^= 1;
    return o;
}

bool is_one_factor(const Graph& g, const OneFactor& f) {
    std::vector<int> cover(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int e : f.edges) {
        if (e < 0 || e >= g.edge_count()) return false;
        ++cover[static_cast<std::size_t>(g.edge(e).u)];
        ++cover[static_cast<std::size_t>(g.edge(e).v)];
    }
    for (int c : cover)
        if (c != 1) return false;
    return true;
}

OneFactor factor_from_labels(const Graph& g,
                             const std::vector<std::pair<std::string, std::string>>& edges) {
    OneFactor f;
    for (const auto& [a, b] : edges) {
        auto av = g.vertex_by_label(a), bv = g.vertex_by_label(b);
        if (!av || !bv) throw precondition_error("unknown vertex label in factor: " + a + " " + b);
        auto e = g.find_edge(*av, *bv);
        if (!e) throw precondition_error("factor pair " + a + " " + b + " is not an edge");
        f.edges.push_back(*e);
    }
    std::sort(f.edges.begin(), f.edges.end());
    if (!is_one_factor(g, f)) throw precondition_error("edge set is not a 1-factor");
    return f;
}

int factor_edge_at(const Graph& g, const OneFactor& f, int v) {
    for (int e : f.edges)
        if (g.edge(e).u == v || g.edge(e).v == v) return e;
    throw precondition_error("vertex not covered by factor");
}

PathSeq canonical_cycle(const PathSeq& cycle) {
    const std::size_t n = cycle.size();
    PathSeq best;
    for (int dir = 0; dir < 2; ++dir) {
        PathSeq c = cycle;
        if (dir) std::reverse(c.begin(), c.end());
        for (std::size_t r = 0; r < n; ++r) {
            PathSeq rot(c.begin() + static_cast<std::ptrdiff_t>(r), c.end());
            rot.insert(rot.end(), c.begin(), c.begin() + static_cast<std::ptrdiff_t>(r));
            if (best.empty() || rot < best) best = std::move(rot);
        }
    }
    return best;
}

void check_walk(const Graph& g, const PathSeq& walk, bool closed) {
    if (walk.size() < 2) throw walk_error("walk needs at least two vertices");
    for (std::size_t i = 0; i + 1 < walk.size(); ++i)
        if (!g.has_edge(walk[i], walk[i + 1])) throw walk_error("walk uses a non-edge");
    if (closed && !g.has_edge(walk.back(), walk.front()))
        throw walk_error("cycle wrap pair is not an edge");
}

namespace {

bool connected_after_removal(const Graph& g, const std::vector<int>& removed) {
    auto comps = g.components_without(removed);
    return comps.size() <= 1;
}

bool any_subset_disconnects(const Graph& g, int size) {
    std::vector<int> pick(static_cast<std::size_t>(size));
    const int n = g.vertex_count();
    // Plain combination walk; size is at most 3.
    auto rec = [&](auto&& self, int depth, int start) -> bool {
        if (depth == size) return !connected_after_removal(g, pick);
        for (int v = start; v < n; ++v) {
            pick[static_cast<std::size_t>(depth)] = v;
            if (self(self, depth + 1, v + 1)) return true;
        }
        return false;
    };
    return rec(rec, 0, 0);
}

}  // namespace

bool vertex_connectivity_at_least(const Graph& g, int k) {
    if (k < 1 || k > 4) throw precondition_error("connectivity check supports only 1 <= k <= 4");
    if (g.vertex_count() == 0) return false;
    if (!g.connected()) return false;
    if (k == 1) return true;
    if (g.vertex_count() < k + 1) return false;
    for (int s = 1; s < k; ++s)
        if (any_subset_disconnects(g, s)) return false;
    return true;
}

std::optional<Bipartition> bipartition_after_removing(const Graph& g,
                                                      const std::vector<int>& removed_edges) {
    std::vector<bool> drop(static_cast<std::size_t>(g.edge_count()), false);
    for (int e : removed_edges) drop[static_cast<std::size_t>(e)] = true;
    std::vector<int> color(static_cast<std::size_t>(g.vertex_count()), -1);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (color[static_cast<std::size_t>(s)] != -1) continue;
        color[static_cast<std::size_t>(s)] = 0;  // least vertex of the component lands in x
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int e : g.incident_edges(v)) {
                if (drop[static_cast<std::size_t>(e)]) continue;
                int w = g.other_end(e, v);
                if (color[static_cast<std::size_t>(w)] == -1) {
                    color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(v)];
                    stack.push_back(w);
                } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition b;
    for (int v = 0; v < g.vertex_count(); ++v)
        (color[static_cast<std::size_t>(v)] == 0 ? b.x : b.y).push_back(v);
    return b;
}

SuppressionResult suppress_even_subdivision(const Graph& g) {
    if (!g.connected()) throw precondition_error("suppression expects a connected graph");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) < 2) throw precondition_error("suppression expects min degree >= 2");

    SuppressionResult res;
    std::vector<int> anchors;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) >= 3) anchors.push_back(v);

    if (anchors.empty()) {  // a bare cycle: nothing to suppress
        res.base = g;
        res.parity_ok = true;
        res.base_vertex_ids.resize(static_cast<std::size_t>(g.vertex_count()));
        for (int v = 0; v < g.vertex_count(); ++v) res.base_vertex_ids[static_cast<std::size_t>(v)] = v;
        for (const Edge& e : g.edges()) res.base_edge_paths.push_back({e.u, e.v});
        return res;
    }

    std::vector<bool> used(static_cast<std::size_t>(g.edge_count()), false);
    std::vector<std::pair<std::string, std::string>> base_pairs;
    std::vector<PathSeq> chains;
    res.parity_ok = true;
    for (int a : anchors) {
        for (int e0 : g.incident_edges(a)) {
            if (used[static_cast<std::size_t>(e0)]) continue;
            PathSeq chain{a};
            int prev = a, e = e0;
            while (true) {
                used[static_cast<std::size_t>(e)] = true;
                int w = g.other_end(e, prev);
                chain.push_back(w);
                if (g.degree(w) >= 3) break;
                // degree-2 interior: continue along the other incident edge
                const auto& inc = g.incident_edges(w);
                e = (inc[0] == e) ? inc[1] : inc[0];
                prev = w;
            }
            if ((chain.size() - 1) % 2 == 0) res.parity_ok = false;
            if (chain.front() == chain.back()) {
                res.simple = false;
                res.dropped_loops.push_back(std::move(chain));
                continue;
            }
            base_pairs.emplace_back(g.label(chain.front()), g.label(chain.back()));
            chains.push_back(std::move(chain));
        }
    }

    std::sort(base_pairs.begin(), base_pairs.end());
    bool parallel = std::adjacent_find(base_pairs.begin(), base_pairs.end()) != base_pairs.end();
    if (parallel) res.simple = false;
    res.base = Graph::from_labeled_edges(base_pairs, {}, !res.simple);

    res.base_vertex_ids.resize(static_cast<std::size_t>(res.base.vertex_count()));
    for (int v = 0; v < res.base.vertex_count(); ++v)
        res.base_vertex_ids[static_cast<std::size_t>(v)] = *g.vertex_by_label(res.base.label(v));

    // Match chains to base edges; parallel chains are assigned in discovery order.
    res.base_edge_paths.assign(static_cast<std::size_t>(res.base.edge_count()), {});
    std::vector<bool> taken(static_cast<std::size_t>(res.base.edge_count()), false);
    for (PathSeq& chain : chains) {
        int bu = *res.base.vertex_by_label(g.label(chain.front()));
        int bv = *res.base.vertex_by_label(g.label(chain.back()));
        Edge key{std::min(bu, bv), std::max(bu, bv)};
        for (int be = 0; be < res.base.edge_count(); ++be) {
            if (!taken[static_cast<std::size_t>(be)] && res.base.edge(be) == key) {
                taken[static_cast<std::size_t>(be)] = true;
                res.base_edge_paths[static_cast<std::size_t>(be)] = std::move(chain);
                break;
            }
        }
    }
    return res;
}

}  // namespace matchorient
