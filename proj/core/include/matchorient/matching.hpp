#pragma once

#include <optional>
#include <vector>

#include "matchorient/graph.hpp"

namespace matchorient {

// All perfect matchings, duplicate-free, in lexicographic order of their
// sorted edge-index sets.
struct MatchingSet {
    std::vector<OneFactor> matchings;
};

MatchingSet enumerate_perfect_matchings(const Graph& g);

bool has_perfect_matching(const Graph& g);
// Lexicographically least perfect matching, if any.
std::optional<OneFactor> first_perfect_matching(const Graph& g);

struct ExtendibilityReport {
    bool one_extendible = false;
    std::optional<int> offending_edge;  // first edge in no perfect matching
};

// Every edge lies in at least one perfect matching. Edgeless graphs with
// vertices are not 1-extendable; the empty graph is.
ExtendibilityReport is_one_extendible(const Graph& g);

// g - u - v has a perfect matching for every pair of distinct vertices.
bool is_bicritical(const Graph& g);

struct Barrier {
    std::vector<int> vertices;
    int odd_components = 0;
    bool trivial = false;  // empty or singleton
};

// Number of odd components of g minus the given vertices.
int odd_component_count(const Graph& g, const std::vector<int>& removed);

// Vertex sets S with strictly more odd components in g-S than |S|,
// enumerated by size then lexicographically, up to max_size.
std::vector<Barrier> barriers(const Graph& g, int max_size);

// Vertex sets S with exactly |S| odd components in g-S. For graphs with a
// perfect matching this is the largest deficiency Tutte's condition allows,
// which is what the structural cut machinery quantifies over.
std::vector<Barrier> exact_barriers(const Graph& g, int max_size);

// Every perfect matching through e also contains e0.
bool is_e0_bad(const Graph& g, int e, int e0);

// First vertex set violating Tutte's condition c0(g-S) <= |S|, or absent
// when the graph has a perfect matching.
std::optional<std::vector<int>> tutte_deficiency_check(const Graph& g);

}  // namespace matchorient
