#pragma once

#include <optional>
#include <vector>

#include "matchorient/alternating.hpp"
#include "matchorient/gf2.hpp"
#include "matchorient/graph.hpp"

namespace matchorient {

// GF(2) linear system whose solvability encodes even/odd f-orientation
// existence. Relative to the reference orientation with flip vector x,
// omega_x(C) = rhs_reference[C] XOR (incidence . x)[C], so an even
// f-orientation exists exactly when incidence . x = rhs_reference is solvable,
// and a failed elimination returns a cycle combination certificate.
struct ParitySystem {
    std::vector<AltCycle> cycles;       // deterministic row order
    std::vector<Gf2Vector> incidence;   // row per cycle, column per edge
    Gf2Vector rhs_reference;            // omega of each cycle under the reference orientation
    int edge_count = 0;
};

ParitySystem build_parity_system(const Graph& g, const OneFactor& f,
                                 std::size_t cap = kDefaultCycleCap);

// Recomputes the incidence/rhs invariants; used by tests.
bool validate_parity_system(const Graph& g, const ParitySystem& sys);

enum class Target { even, odd };

// Set S of alternating cycles covering every involved edge an even number of
// times. `odd_set` is the cardinality parity; `odd_oriented_ref` is the parity
// of oddly oriented members under the reference orientation, an
// orientation-invariant quantity for zero-sum sets.
struct ZeroSumCertificate {
    std::vector<std::size_t> cycle_indices;  // into ParitySystem::cycles
    bool odd_set = false;
    bool odd_oriented_ref = false;
};

struct OrientationVerdict {
    bool exists = false;
    std::optional<Orientation> witness;
    std::optional<ZeroSumCertificate> certificate;
};

// Decides existence of an orientation making every alternating cycle carry
// the target parity. Witnesses flip the reference orientation with free
// variables at zero; infeasibility yields a zero-sum obstruction whose
// wrong-parity member count is odd.
OrientationVerdict solve_orientation(const ParitySystem& sys, Target target);

// Deterministic basis of the left null space, decoded as zero-sum sets.
std::vector<ZeroSumCertificate> zero_sum_basis(const ParitySystem& sys);

bool validate_zero_sum(const ParitySystem& sys, const ZeroSumCertificate& cert);

struct BadnessReport {
    bool bad = false;
    std::optional<ZeroSumCertificate> witness;  // odd evenly-oriented count under reference
};

// A zero-sum set with an odd number of evenly oriented members exists. For a
// combination y with cycle set S, that count has parity |S| + y.rhs under any
// orientation, so scanning a null-space basis decides it.
BadnessReport is_bad(const Graph& g, const OneFactor& f);

// Odd orientation existence for the lexicographically first 1-factor; the
// property does not depend on the factor chosen.
bool is_pfaffian(const Graph& g);

// Factor edges x->y, all other edges y->x; an even f-orientation of a
// bipartite graph by construction.
Orientation canonical_orientation(const Graph& g, const OneFactor& f, const Bipartition& bip);

}  // namespace matchorient
