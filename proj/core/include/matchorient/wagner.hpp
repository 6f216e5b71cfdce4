#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "matchorient/alternating.hpp"
#include "matchorient/graph.hpp"

namespace matchorient {

// Two independent edges whose endpoint tuple order appears as a cyclic
// subsequence in exactly one of two given cycles.
struct SkewWitness {
    std::pair<int, int> e;  // (u1, u2), vertex ids
    std::pair<int, int> f;  // (v1, v2)
    PathSeq c1, c2;
    int subsequence_side = 0;  // 1 or 2: the cycle containing (u1,u2,v1,v2)
};

// Witness iff (u1,u2,v1,v2) occurs as a cyclic subsequence (over rotations and
// both traversal directions) of exactly one cycle. Equivalently, the two
// cycles traverse the edge pair with different relative senses. Throws
// skew_precondition_error when the edges are not independent or not on both
// cycles.
std::optional<SkewWitness> are_skew(const PathSeq& c1, const PathSeq& c2,
                                    std::pair<int, int> e, std::pair<int, int> f);

struct WagnerCertificate {
    std::array<int, 2> r{};  // edge ids in g, sorted; g - r is bipartite and 1-extendable
    OneFactor w_factor;      // 1-factor of g avoiding r
    Bipartition bipartition; // of g - r
    SkewWitness skew;        // w_factor-alternating cycles of g through both r edges
};

bool validate_certificate(const Graph& g, const WagnerCertificate& cert);

// First certificate for the given factor: edge pairs r disjoint from f in
// lexicographic order, then cycle pairs.
std::optional<WagnerCertificate> wagner_certificate_for_factor(const Graph& g, const OneFactor& f);

// Generalized-Wagner membership: edge pairs r in lexicographic order, for each
// the 1-factors of g - r, for each the alternating cycle pairs; first hit wins.
std::optional<WagnerCertificate> wagner_membership(const Graph& g);

// All 1-factors witnessed by some certificate. Exhaustive by definition.
std::vector<OneFactor> w_factors(const Graph& g);

struct SubcubicReduction {
    Graph graph;
    WagnerCertificate certificate;  // remapped to the reduced graph
};

// While some vertex has degree >= 4: pick an edge at it outside the witness
// cycles and the factor, delete every edge forced to occur with it, and carry
// the certificate across. Ends with maximum degree 3.
SubcubicReduction reduce_to_subcubic(const Graph& g, const WagnerCertificate& cert);

struct CentralSubgraph {
    Graph subgraph;
    WagnerCertificate certificate;  // in the subgraph's coordinates
};

// Subgraph H whose induced factor slice is a 1-factor of H and certifies
// membership with that slice as the witnessed factor. The whole graph is
// tried first, then smaller subgraphs by descending edge count. Throws
// search_cap_error past the candidate budget.
std::optional<CentralSubgraph> find_central_w_subgraph(const Graph& g, const OneFactor& f,
                                                       std::size_t cap = std::size_t(1) << 20);

// Inside the union of the two witness cycles, finds a cycle plus two crossing
// internally disjoint alternating chord paths forming an even subdivision of
// K4 whose vertices the factor matches internally.
Graph central_k4_subdivision(const Graph& g, const WagnerCertificate& cert);

}  // namespace matchorient
