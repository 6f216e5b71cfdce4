#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matchorient/errors.hpp"

namespace matchorient {

// Endpoints are dense vertex ids with u < v.
struct Edge {
    int u = 0;
    int v = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Finite undirected graph. Vertices are dense ids 0..n-1 obtained by sorting
// the original labels (numeric labels by value, then the rest lexicographically);
// the labels are kept for IO. The edge list is sorted by normalized endpoints so
// edge indices are stable and reproducible. Immutable after construction.
//
// Parallel edges are permitted only when multi_ok is set; self-loops never are.
class Graph {
  public:
    Graph() = default;

    static Graph from_labeled_edges(std::vector<std::pair<std::string, std::string>> edges,
                                    std::vector<std::string> isolated_vertices = {},
                                    bool multi_ok = false);
    static Graph from_index_edges(int n, std::vector<std::pair<int, int>> edges,
                                  bool multi_ok = false);

    // "a b" per line, '#' starts a comment.
    static Graph parse_edge_list(const std::string& text, bool multi_ok = false);
    // {"vertices":[...], "edges":[[a,b],...]}
    static Graph parse_json(const std::string& text, bool multi_ok = false);
    // Sniffs the format: leading '{' means JSON.
    static Graph parse(const std::string& text, bool multi_ok = false);

    std::string to_edge_list() const;
    std::string to_json(bool pretty = false) const;

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
    std::optional<int> find_edge(int u, int v) const;
    bool has_edge(int u, int v) const { return find_edge(u, v).has_value(); }
    const std::vector<int>& incident_edges(int v) const {
        return incident_[static_cast<std::size_t>(v)];
    }
    std::vector<int> neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(incident_[static_cast<std::size_t>(v)].size()); }
    int other_end(int e, int v) const {
        const Edge& ed = edge(e);
        return ed.u == v ? ed.v : ed.u;
    }

    const std::string& label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<int> vertex_by_label(const std::string& s) const;

    bool multi_ok() const { return multi_ok_; }
    // True when no parallel edges are actually present.
    bool is_simple() const;
    // Copy with parallel edges collapsed and multi_ok cleared.
    Graph simplified() const;

    Graph without_edges(const std::vector<int>& edge_ids) const;
    Graph without_vertices(const std::vector<int>& vertex_ids) const;
    Graph induced(const std::vector<int>& vertex_ids) const;

    bool connected() const;
    std::vector<std::vector<int>> components() const;
    std::vector<std::vector<int>> components_without(const std::vector<int>& removed_vertices) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.labels_ == b.labels_ && a.edges_ == b.edges_;
    }

  private:
    std::vector<std::string> labels_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> incident_;
    bool multi_ok_ = false;

    void build_index();
    static Graph build(std::vector<std::string> labels, std::vector<std::pair<int, int>> edges,
                       bool multi_ok);
};

// Direction assignment, one bit per edge of the host graph.
// Bit 0 = the reference direction (lower id -> higher id), 1 = reversed.
struct Orientation {
    std::vector<std::uint8_t> reversed;

    static Orientation reference(const Graph& g) {
        return Orientation{std::vector<std::uint8_t>(static_cast<std::size_t>(g.edge_count()), 0)};
    }
    // Arcs given tail-first by label; every edge must appear exactly once.
    static Orientation from_directed_labels(
        const Graph& g, const std::vector<std::pair<std::string, std::string>>& arcs);

    int tail(const Graph& g, int e) const {
        const Edge& ed = g.edge(e);
        return reversed[static_cast<std::size_t>(e)] ? ed.v : ed.u;
    }
    int head(const Graph& g, int e) const {
        const Edge& ed = g.edge(e);
        return reversed[static_cast<std::size_t>(e)] ? ed.u : ed.v;
    }
    // True iff the edge is directed from `from` to the other endpoint.
    bool directed_from(const Graph& g, int e, int from) const { return tail(g, e) == from; }

    Orientation flipped_all() const;
};

// Perfect matching, stored as sorted edge indices.
struct OneFactor {
    std::vector<int> edges;
    friend bool operator==(const OneFactor&, const OneFactor&) = default;
    friend auto operator<=>(const OneFactor&, const OneFactor&) = default;
};

bool is_one_factor(const Graph& g, const OneFactor& f);
OneFactor factor_from_labels(const Graph& g,
                             const std::vector<std::pair<std::string, std::string>>& edges);
// Edge index of the unique f-edge covering v.
int factor_edge_at(const Graph& g, const OneFactor& f, int v);

using PathSeq = std::vector<int>;  // vertex ids, consecutive entries adjacent

// Lexicographically least rotation over both traversal directions.
PathSeq canonical_cycle(const PathSeq& cycle);

// Walk validation: consecutive pairs (and the wrap pair when closed) must be edges.
void check_walk(const Graph& g, const PathSeq& walk, bool closed);

// True iff no vertex set of size < k disconnects g (exhaustive; k <= 4).
bool vertex_connectivity_at_least(const Graph& g, int k);

struct Bipartition {
    std::vector<int> x, y;  // sorted vertex ids
};

// 2-coloring of g minus the given edges, if one exists. Per connected
// component the class holding the least vertex id goes to x.
std::optional<Bipartition> bipartition_after_removing(const Graph& g,
                                                      const std::vector<int>& removed_edges);
inline std::optional<Bipartition> bipartition(const Graph& g) {
    return bipartition_after_removing(g, {});
}

struct SuppressionResult {
    Graph base;
    bool parity_ok = false;  // true iff every suppressed chain has odd length
    bool simple = true;      // false when suppression created parallel edges or loops
    // For each base edge, the path it stands for in the input graph (input ids).
    std::vector<PathSeq> base_edge_paths;
    // base vertex id -> input vertex id
    std::vector<int> base_vertex_ids;
    // Chains that closed on a single branch vertex; they cannot be kept as edges.
    std::vector<PathSeq> dropped_loops;
};

// Contracts maximal chains of degree-2 vertices into single base edges, so the
// input is an even subdivision of the base exactly when parity_ok holds.
// A graph with max degree 2 is returned unchanged.
SuppressionResult suppress_even_subdivision(const Graph& g);

}  // namespace matchorient
