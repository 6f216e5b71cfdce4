#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "matchorient/graph.hpp"
#include "matchorient/matching.hpp"

namespace matchorient {

// One stage of an ear decomposition, recorded against the host graph: the
// stage's edge set, the ears adjoined at this stage (host vertex ids) and the
// induced factor edges. Stage 0 is a single factor edge with no ears.
struct EarStage {
    std::vector<int> edge_ids;
    std::vector<PathSeq> ears;
    std::vector<int> factor_edges;
};

struct EarDecomposition {
    std::vector<EarStage> stages;
};

Graph stage_graph(const Graph& g, const EarStage& stage);

// Grows the graph from a factor edge, adjoining at each step a minimal
// removable set of factor-alternating ears taken from M union F for a
// 1-factor M through a frontier edge. Every stage is 1-extendable and carries
// the induced factor.
EarDecomposition f_reducible_ear_decomposition(const Graph& g, const OneFactor& f);

struct Cut {
    std::vector<int> side;   // sorted vertex ids; canonical side contains vertex 0
    std::vector<int> edges;  // sorted edge ids crossing the cut
};

Cut make_cut(const Graph& g, std::vector<int> side);

struct Shores {
    Graph side_contracted;        // the cut side identified to one vertex
    Graph complement_contracted;  // the complement identified to one vertex
};

// Shores of a cut: one side identified to a single fresh vertex, parallel
// edges deleted. The contracted vertex is labelled "*".
Shores cut_shores(const Graph& g, const Cut& cut);

struct TightCutReport {
    Cut cut;
    std::vector<std::size_t> f_tight_for;  // indices into the graph's MatchingSet
    bool tight = false;                    // f-tight for every 1-factor
    bool trivial = false;                  // one side is a singleton
    std::optional<Shores> shores;          // populated for tight cuts
};

// Classifies every cut of g (sides up to complement symmetry) against the
// full matching set. Exhaustive; refuses graphs above the vertex limit.
std::vector<TightCutReport> enumerate_tight_cuts(const Graph& g, int exhaustive_limit = 16);

bool has_nontrivial_tight_cut(const Graph& g);

// 3-connected and bicritical.
bool is_brick(const Graph& g);
// Definition route: connected, non-bipartite, 1-extendable, no non-trivial
// tight cut. Cross-checks the other route in tests.
bool is_brick_by_definition(const Graph& g);
bool is_brace(const Graph& g);

// Recursively splits on non-trivial tight cuts until every piece is a brick
// or brace; returns the final pieces as simple graphs. The deterministic
// variant always splits on the first cut in enumeration order; the seeded
// variant picks uniformly among the available cuts.
std::vector<Graph> tight_cut_decomposition(const Graph& g);
std::vector<Graph> tight_cut_decomposition_seeded(const Graph& g, std::uint64_t seed);

enum class CutKind { barrier, two_separation };

struct TaggedCut {
    Cut cut;
    CutKind kind;
};

struct StructureCuts {
    std::vector<TaggedCut> cuts;
    // 2-separations that left more than two components; no cut is defined for
    // them and they are reported as-is.
    std::vector<std::pair<int, int>> unclassified_two_separations;
};

// Barrier cuts for each non-trivial exact barrier's non-trivial odd component,
// plus 2-separation cuts for each non-barrier 2-separation with exactly two
// components.
StructureCuts barrier_and_2separation_cuts(const Graph& g);

}  // namespace matchorient
