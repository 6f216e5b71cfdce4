#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "matchorient/graph.hpp"
#include "matchorient/wagner.hpp"

namespace matchorient {

enum class SplitChoice { r1, r2 };

// Splitting site: a factor-style edge e0 = (a,b) whose endpoints have degree 3
// and no common neighbour. With b1 < b2 the other neighbours of a and
// a1 < a2 the other neighbours of b, choice r1 adds {(a1,b1),(a2,b2)} and
// choice r2 adds {(a1,b2),(a2,b1)}.
struct SplitSpec {
    int e0 = -1;
    SplitChoice choice = SplitChoice::r1;
};

struct SplitResult {
    Graph graph;     // multigraph (flagged) when a chosen pair already existed
    bool is_simple = true;
    std::array<std::pair<std::string, std::string>, 2> added_pairs;  // by label
};

// Removes both endpoints of e0 and reconnects their remaining neighbours with
// the chosen pairing. Throws split_error when the site is not splittable.
SplitResult e0_split(const Graph& g, const SplitSpec& spec);

struct SpecialSplitResult {
    SplitResult split;
    SplitChoice choice;
    OneFactor residual_factor;  // w_factor minus e0, in the split graph
};

// Special splitting at e0: e0 must belong to the certified factor, at most one
// endpoint may be special (an endpoint of the removed pair r), and some
// special vertex must neighbour an endpoint. Returns whichever choice yields a
// simple graph, preferring r1; absent when e0 does not qualify or both
// choices create parallel edges.
std::optional<SpecialSplitResult> special_e0_split(const Graph& g, const WagnerCertificate& cert,
                                                   int e0);

// Converse construction. The edges are passed as ordered pairs (a_i, b_i);
// a fresh vertex is joined to b1, b2 and another to a1, a2, plus the edge
// between the two fresh vertices. Calling it with the pairs an e0_split added
// (in the orientation the split used) rebuilds the original graph up to the
// labels of the two fresh vertices.
Graph glue(const Graph& g, std::pair<int, int> e1, std::pair<int, int> e2);

}  // namespace matchorient
