#pragma once

#include <cstddef>
#include <vector>

#include "matchorient/graph.hpp"

namespace matchorient {

// Even cycle alternating between factor and non-factor edges, stored in
// canonical vertex order (lex-least rotation over both directions).
struct AltCycle {
    PathSeq verts;
    std::vector<int> edges;    // sorted edge ids on the cycle
    std::vector<int> f_edges;  // sorted factor edge ids on the cycle

    friend bool operator==(const AltCycle& a, const AltCycle& b) { return a.verts == b.verts; }
    friend bool operator<(const AltCycle& a, const AltCycle& b) {
        return a.verts.size() != b.verts.size() ? a.verts.size() < b.verts.size()
                                                : a.verts < b.verts;
    }
};

inline constexpr std::size_t kDefaultCycleCap = 1'000'000;

// Complete, duplicate-free, sorted list of f-alternating cycles. DFS seeded
// from each factor edge, traversing the unique factor edge and then any
// non-factor edge in turn. Throws cycle_cap_error past the cap.
std::vector<AltCycle> enumerate_alternating_cycles(const Graph& g, const OneFactor& f,
                                                   std::size_t cap = kDefaultCycleCap);

AltCycle make_alt_cycle(const Graph& g, const OneFactor& f, const PathSeq& verts);

// Parity of the number of consecutive pairs traversed tail-to-head. For even
// closed walks the value is rotation- and direction-independent; open or odd
// walks are evaluated exactly as given.
int omega(const Graph& g, const Orientation& o, const PathSeq& walk, bool closed);

struct CycleClassification {
    std::vector<AltCycle> cycles;
    std::vector<int> parity;  // aligned with cycles; 0 = evenly oriented
    std::vector<std::size_t> even_indices() const;
    std::vector<std::size_t> odd_indices() const;
    bool all_even() const;
    bool all_odd() const;
};

// Tags every f-alternating cycle with its omega value; the orientation is an
// even f-orientation exactly when the odd class is empty.
CycleClassification classify_cycles(const Graph& g, const Orientation& o, const OneFactor& f,
                                    std::size_t cap = kDefaultCycleCap);

}  // namespace matchorient
