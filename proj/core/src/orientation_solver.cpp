#include "matchorient/orientation_solver.hpp"

#include <algorithm>

#include "matchorient/matching.hpp"

namespace matchorient {

ParitySystem build_parity_system(const Graph& g, const OneFactor& f, std::size_t cap) {
    ParitySystem sys;
    sys.edge_count = g.edge_count();
    sys.cycles = enumerate_alternating_cycles(g, f, cap);
    sys.incidence.reserve(sys.cycles.size());
    sys.rhs_reference = Gf2Vector(sys.cycles.size());
    Orientation ref = Orientation::reference(g);
    for (std::size_t i = 0; i < sys.cycles.size(); ++i) {
        Gf2Vector row(static_cast<std::size_t>(g.edge_count()));
        for (int e : sys.cycles[i].edges) row.set(static_cast<std::size_t>(e), true);
        sys.incidence.push_back(std::move(row));
        sys.rhs_reference.set(i, omega(g, ref, sys.cycles[i].verts, true) == 1);
    }
    return sys;
}

bool validate_parity_system(const Graph& g, const ParitySystem& sys) {
    if (sys.edge_count != g.edge_count()) return false;
    Orientation ref = Orientation::reference(g);
    for (std::size_t i = 0; i < sys.cycles.size(); ++i) {
        const AltCycle& c = sys.cycles[i];
        if (sys.incidence[i].popcount() != c.verts.size()) return false;
        for (int e : c.edges)
            if (!sys.incidence[i].get(static_cast<std::size_t>(e))) return false;
        if (sys.rhs_reference.get(i) != (omega(g, ref, c.verts, true) == 1)) return false;
    }
    return true;
}

namespace {

ZeroSumCertificate decode_combination(const ParitySystem& sys, const Gf2Vector& y) {
    ZeroSumCertificate cert;
    cert.cycle_indices = y.set_bits();
    cert.odd_set = cert.cycle_indices.size() % 2 == 1;
    cert.odd_oriented_ref = y.dot(sys.rhs_reference);
    return cert;
}

}  // namespace

OrientationVerdict solve_orientation(const ParitySystem& sys, Target target) {
    Gf2Vector rhs = sys.rhs_reference;
    if (target == Target::odd)
        for (std::size_t i = 0; i < rhs.size(); ++i) rhs.flip(i);

    Gf2SolveResult sol = gf2_solve(sys.incidence, rhs, static_cast<std::size_t>(sys.edge_count));

    OrientationVerdict v;
    v.exists = sol.feasible;
    if (sol.feasible) {
        Orientation o;
        o.reversed.assign(static_cast<std::size_t>(sys.edge_count), 0);
        for (int e = 0; e < sys.edge_count; ++e)
            o.reversed[static_cast<std::size_t>(e)] =
                sol.solution.get(static_cast<std::size_t>(e)) ? 1 : 0;
        v.witness = std::move(o);
    } else {
        v.certificate = decode_combination(sys, sol.infeasible_combination);
    }
    return v;
}

std::vector<ZeroSumCertificate> zero_sum_basis(const ParitySystem& sys) {
    Gf2SolveResult sol =
        gf2_solve(sys.incidence, sys.rhs_reference, static_cast<std::size_t>(sys.edge_count));
    std::vector<ZeroSumCertificate> out;
    out.reserve(sol.left_null_basis.size());
    for (const Gf2Vector& y : sol.left_null_basis) {
        ZeroSumCertificate cert = decode_combination(sys, y);
        if (!validate_zero_sum(sys, cert)) throw certificate_error("null vector failed validation");
        out.push_back(std::move(cert));
    }
    return out;
}

bool validate_zero_sum(const ParitySystem& sys, const ZeroSumCertificate& cert) {
    // Def: every edge of the union occurs in an even number of members.
    std::vector<int> cover(static_cast<std::size_t>(sys.edge_count), 0);
    for (std::size_t idx : cert.cycle_indices)
        for (int e : sys.cycles[idx].edges) ++cover[static_cast<std::size_t>(e)];
    for (int c : cover)
        if (c % 2 != 0) return false;
    if (cert.odd_set != (cert.cycle_indices.size() % 2 == 1)) return false;
    int odd_ref = 0;
    for (std::size_t idx : cert.cycle_indices)
        if (sys.rhs_reference.get(idx)) odd_ref ^= 1;
    return cert.odd_oriented_ref == (odd_ref == 1);
}

BadnessReport is_bad(const Graph& g, const OneFactor& f) {
    ParitySystem sys = build_parity_system(g, f);
    BadnessReport rep;
    for (const ZeroSumCertificate& cert : zero_sum_basis(sys)) {
        bool evenly_oriented_odd = (cert.cycle_indices.size() % 2) ^
                                   (cert.odd_oriented_ref ? 1u : 0u);
        if (evenly_oriented_odd) {
            rep.bad = true;
            rep.witness = cert;
            return rep;
        }
    }
    return rep;
}

bool is_pfaffian(const Graph& g) {
    auto f = first_perfect_matching(g);
    if (!f) throw no_factor_error("graph has no 1-factor");
    ParitySystem sys = build_parity_system(g, *f);
    return solve_orientation(sys, Target::odd).exists;
}

Orientation canonical_orientation(const Graph& g, const OneFactor& f, const Bipartition& bip) {
    std::vector<int> side(static_cast<std::size_t>(g.vertex_count()), -1);
    for (int v : bip.x) side[static_cast<std::size_t>(v)] = 0;
    for (int v : bip.y) side[static_cast<std::size_t>(v)] = 1;
    for (int s : side)
        if (s == -1) throw bipartite_error("bipartition does not cover the graph");
    for (const Edge& e : g.edges())
        if (side[static_cast<std::size_t>(e.u)] == side[static_cast<std::size_t>(e.v)])
            throw bipartite_error("graph is not bipartite for the given bipartition");
    if (!is_one_factor(g, f)) throw precondition_error("f is not a 1-factor");

    std::vector<bool> in_f(static_cast<std::size_t>(g.edge_count()), false);
    for (int e : f.edges) in_f[static_cast<std::size_t>(e)] = true;
    Orientation o = Orientation::reference(g);
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        bool u_in_x = side[static_cast<std::size_t>(ed.u)] == 0;
        bool tail_is_u = in_f[static_cast<std::size_t>(e)] ? u_in_x : !u_in_x;
        o.reversed[static_cast<std::size_t>(e)] = tail_is_u ? 0 : 1;
    }
    return o;
}

}  // namespace matchorient
