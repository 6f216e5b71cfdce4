#pragma once

#include <optional>
#include <vector>

#include "matchorient/graph.hpp"

namespace matchorient {

// Brute-force isomorphism test for small simple graphs (intended for <= 12
// vertices). Returns a vertex map a->b when the graphs are isomorphic.
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b);

inline bool isomorphic(const Graph& a, const Graph& b) {
    return find_isomorphism(a, b).has_value();
}

// Multiset equality up to isomorphism.
bool isomorphic_multisets(std::vector<Graph> a, std::vector<Graph> b);

}  // namespace matchorient
