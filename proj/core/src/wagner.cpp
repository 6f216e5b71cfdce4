#include "matchorient/wagner.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "matchorient/iso.hpp"
#include "matchorient/matching.hpp"

namespace matchorient {

namespace {

// Direction in which the cycle traverses edge (a,b): +1 for a->b, -1 for
// b->a, 0 when the edge is not on the cycle.
int traversal_sense(const PathSeq& cycle, int a, int b) {
    const std::size_t n = cycle.size();
    for (std::size_t i = 0; i < n; ++i) {
        int x = cycle[i], y = cycle[(i + 1) % n];
        if (x == a && y == b) return 1;
        if (x == b && y == a) return -1;
    }
    return 0;
}

bool independent(std::pair<int, int> e, std::pair<int, int> f) {
    return e.first != f.first && e.first != f.second && e.second != f.first &&
           e.second != f.second;
}

}  // namespace

std::optional<SkewWitness> are_skew(const PathSeq& c1, const PathSeq& c2,
                                    std::pair<int, int> e, std::pair<int, int> f) {
    if (e.first == e.second || f.first == f.second || !independent(e, f))
        throw skew_precondition_error("skewness needs two independent edges");
    int se1 = traversal_sense(c1, e.first, e.second);
    int sf1 = traversal_sense(c1, f.first, f.second);
    int se2 = traversal_sense(c2, e.first, e.second);
    int sf2 = traversal_sense(c2, f.first, f.second);
    if (se1 == 0 || sf1 == 0 || se2 == 0 || sf2 == 0)
        throw skew_precondition_error("both edges must lie on both cycles");
    // Relative sense is direction-of-traversal invariant; the tuple
    // (u1,u2,v1,v2) occurs in a cycle exactly when its senses agree.
    int sigma1 = se1 * sf1;
    int sigma2 = se2 * sf2;
    if (sigma1 == sigma2) return std::nullopt;
    SkewWitness w;
    w.e = e;
    w.f = f;
    w.c1 = c1;
    w.c2 = c2;
    w.subsequence_side = sigma1 > 0 ? 1 : 2;
    return w;
}

namespace {

bool edge_on_cycle(const PathSeq& cycle, const Edge& ed) {
    return traversal_sense(cycle, ed.u, ed.v) != 0;
}

// Skew witness for factor f over the alternating cycles through both r edges.
std::optional<SkewWitness> find_skew_pair(const Graph& g, const std::vector<AltCycle>& cycles,
                                          int re, int rf) {
    const Edge& ee = g.edge(re);
    const Edge& fe = g.edge(rf);
    std::vector<const AltCycle*> through;
    for (const AltCycle& c : cycles)
        if (edge_on_cycle(c.verts, ee) && edge_on_cycle(c.verts, fe)) through.push_back(&c);
    for (std::size_t i = 0; i < through.size(); ++i) {
        for (std::size_t j = i + 1; j < through.size(); ++j) {
            auto w = are_skew(through[i]->verts, through[j]->verts, {ee.u, ee.v}, {fe.u, fe.v});
            if (w) return w;
        }
    }
    return std::nullopt;
}

bool factor_avoids(const OneFactor& f, int e) {
    return !std::binary_search(f.edges.begin(), f.edges.end(), e);
}

std::optional<WagnerCertificate> certificate_for(const Graph& g, const OneFactor& f, int re,
                                                 int rf, const std::vector<AltCycle>& cycles) {
    auto bip = bipartition_after_removing(g, {re, rf});
    if (!bip) return std::nullopt;
    if (!is_one_extendible(g.without_edges({re, rf})).one_extendible) return std::nullopt;
    auto skew = find_skew_pair(g, cycles, re, rf);
    if (!skew) return std::nullopt;
    WagnerCertificate cert;
    cert.r = {re, rf};
    cert.w_factor = f;
    cert.bipartition = *bip;
    cert.skew = *skew;
    return cert;
}

}  // namespace

bool validate_certificate(const Graph& g, const WagnerCertificate& cert) {
    int re = cert.r[0], rf = cert.r[1];
    if (re < 0 || rf < 0 || re >= g.edge_count() || rf >= g.edge_count() || re == rf) return false;
    if (!independent({g.edge(re).u, g.edge(re).v}, {g.edge(rf).u, g.edge(rf).v})) return false;
    if (!is_one_factor(g, cert.w_factor)) return false;
    if (!factor_avoids(cert.w_factor, re) || !factor_avoids(cert.w_factor, rf)) return false;
    if (!is_one_extendible(g).one_extendible) return false;
    auto bip = bipartition_after_removing(g, {re, rf});
    if (!bip) return false;
    if (!is_one_extendible(g.without_edges({re, rf})).one_extendible) return false;
    // The witness cycles must be alternating cycles of g through both edges
    // and genuinely skew.
    for (const PathSeq* c : {&cert.skew.c1, &cert.skew.c2}) {
        try {
            make_alt_cycle(g, cert.w_factor, *c);
        } catch (const std::exception&) {
            return false;
        }
        if (!edge_on_cycle(*c, g.edge(re)) || !edge_on_cycle(*c, g.edge(rf))) return false;
    }
    try {
        auto w = are_skew(cert.skew.c1, cert.skew.c2, {g.edge(re).u, g.edge(re).v},
                          {g.edge(rf).u, g.edge(rf).v});
        return w.has_value();
    } catch (const skew_precondition_error&) {
        return false;
    }
}

std::optional<WagnerCertificate> wagner_certificate_for_factor(const Graph& g,
                                                               const OneFactor& f) {
    if (!g.is_simple()) throw precondition_error("expects a simple graph");
    if (!is_one_factor(g, f)) throw precondition_error("f is not a 1-factor of g");
    if (!is_one_extendible(g).one_extendible) return std::nullopt;
    auto cycles = enumerate_alternating_cycles(g, f);
    for (int re = 0; re < g.edge_count(); ++re) {
        if (!factor_avoids(f, re)) continue;
        for (int rf = re + 1; rf < g.edge_count(); ++rf) {
            if (!factor_avoids(f, rf)) continue;
            if (!independent({g.edge(re).u, g.edge(re).v}, {g.edge(rf).u, g.edge(rf).v}))
                continue;
            if (auto cert = certificate_for(g, f, re, rf, cycles)) return cert;
        }
    }
    return std::nullopt;
}

std::optional<WagnerCertificate> wagner_membership(const Graph& g) {
    if (!g.is_simple()) throw precondition_error("expects a simple graph");
    if (!is_one_extendible(g).one_extendible) return std::nullopt;
    MatchingSet ms = enumerate_perfect_matchings(g);
    std::map<std::vector<int>, std::vector<AltCycle>> cycle_cache;
    for (int re = 0; re < g.edge_count(); ++re) {
        for (int rf = re + 1; rf < g.edge_count(); ++rf) {
            if (!independent({g.edge(re).u, g.edge(re).v}, {g.edge(rf).u, g.edge(rf).v}))
                continue;
            if (!bipartition_after_removing(g, {re, rf})) continue;
            if (!is_one_extendible(g.without_edges({re, rf})).one_extendible) continue;
            for (const OneFactor& f : ms.matchings) {
                if (!factor_avoids(f, re) || !factor_avoids(f, rf)) continue;
                auto [it, fresh] = cycle_cache.try_emplace(f.edges);
                if (fresh) it->second = enumerate_alternating_cycles(g, f);
                if (auto cert = certificate_for(g, f, re, rf, it->second)) return cert;
            }
        }
    }
    return std::nullopt;
}

std::vector<OneFactor> w_factors(const Graph& g) {
    std::vector<OneFactor> out;
    if (!is_one_extendible(g).one_extendible) return out;
    for (const OneFactor& f : enumerate_perfect_matchings(g).matchings)
        if (wagner_certificate_for_factor(g, f)) out.push_back(f);
    return out;
}

namespace {

WagnerCertificate remap_certificate(const Graph& from, const Graph& to,
                                    const WagnerCertificate& cert) {
    // Vertices survive edge deletions with identical ids; only edge indices move.
    auto remap_edge = [&](int e) {
        auto ne = to.find_edge(from.edge(e).u, from.edge(e).v);
        if (!ne) throw certificate_error("certificate edge vanished during reduction");
        return *ne;
    };
    WagnerCertificate out = cert;
    out.r = {remap_edge(cert.r[0]), remap_edge(cert.r[1])};
    std::sort(out.r.begin(), out.r.end());
    out.w_factor.edges.clear();
    for (int e : cert.w_factor.edges) out.w_factor.edges.push_back(remap_edge(e));
    std::sort(out.w_factor.edges.begin(), out.w_factor.edges.end());
    return out;
}

}  // namespace

SubcubicReduction reduce_to_subcubic(const Graph& g, const WagnerCertificate& cert) {
    if (!validate_certificate(g, cert)) throw certificate_error("invalid certificate");
    Graph cur = g;
    WagnerCertificate cur_cert = cert;
    while (true) {
        bool high_degree = false;
        for (int v = 0; v < cur.vertex_count(); ++v)
            if (cur.degree(v) >= 4) high_degree = true;
        if (!high_degree) break;

        std::set<int> protected_edges(cur_cert.w_factor.edges.begin(),
                                      cur_cert.w_factor.edges.end());
        for (const PathSeq* c : {&cur_cert.skew.c1, &cur_cert.skew.c2}) {
            const std::size_t n = c->size();
            for (std::size_t i = 0; i < n; ++i)
                protected_edges.insert(*cur.find_edge((*c)[i], (*c)[(i + 1) % n]));
        }
        // Deletion candidates at the high-degree vertices, in order. The
        // witness cycles and the factor stay out of bounds.
        std::vector<int> candidates;
        for (int v = 0; v < cur.vertex_count(); ++v) {
            if (cur.degree(v) < 4) continue;
            for (int e : cur.incident_edges(v))
                if (!protected_edges.count(e)) candidates.push_back(e);
        }
        if (candidates.empty())
            throw certificate_error("high-degree vertex with every edge protected");

        bool advanced = false;
        for (int e0 : candidates) {
            std::vector<int> bad;
            for (int e = 0; e < cur.edge_count(); ++e)
                if (is_e0_bad(cur, e, e0)) bad.push_back(e);
            Graph next = cur.without_edges(bad);
            WagnerCertificate next_cert;
            try {
                next_cert = remap_certificate(cur, next, cur_cert);
            } catch (const certificate_error&) {
                continue;
            }
            if (!validate_certificate(next, next_cert)) continue;
            cur = std::move(next);
            cur_cert = std::move(next_cert);
            advanced = true;
            break;
        }
        if (!advanced) throw certificate_error("degree reduction could not keep the certificate");
    }
    return SubcubicReduction{std::move(cur), std::move(cur_cert)};
}

namespace {

// Edge-subset subgraphs whose vertex set the factor matches internally,
// tried from the whole graph downward.
struct SubgraphScan {
    const Graph& g;
    const OneFactor& f;
    std::size_t budget;

    std::optional<CentralSubgraph> check(const std::vector<int>& edge_ids) {
        if (budget == 0) throw search_cap_error("central subgraph search budget exhausted");
        --budget;
        std::vector<std::pair<std::string, std::string>> pairs;
        for (int e : edge_ids) pairs.emplace_back(g.label(g.edge(e).u), g.label(g.edge(e).v));
        Graph h = Graph::from_labeled_edges(std::move(pairs));
        if (!h.connected()) return std::nullopt;
        // factor slice inside h
        OneFactor fh;
        for (int e : f.edges) {
            auto hu = h.vertex_by_label(g.label(g.edge(e).u));
            auto hv = h.vertex_by_label(g.label(g.edge(e).v));
            if (hu && hv) {
                auto he = h.find_edge(*hu, *hv);
                if (!he) return std::nullopt;
                fh.edges.push_back(*he);
            } else if (hu || hv) {
                return std::nullopt;  // factor edge leaves the subgraph
            }
        }
        std::sort(fh.edges.begin(), fh.edges.end());
        if (!is_one_factor(h, fh)) return std::nullopt;
        if (auto cert = wagner_certificate_for_factor(h, fh))
            return CentralSubgraph{std::move(h), std::move(*cert)};
        return std::nullopt;
    }
};

}  // namespace

std::optional<CentralSubgraph> find_central_w_subgraph(const Graph& g, const OneFactor& f,
                                                       std::size_t cap) {
    if (!is_one_factor(g, f)) throw precondition_error("f is not a 1-factor of g");
    SubgraphScan scan{g, f, cap};

    std::vector<int> all_edges(static_cast<std::size_t>(g.edge_count()));
    for (int e = 0; e < g.edge_count(); ++e) all_edges[static_cast<std::size_t>(e)] = e;
    if (auto hit = scan.check(all_edges)) return hit;

    // Drop k edges at a time, k ascending, subsets in lexicographic order.
    const int m = g.edge_count();
    std::vector<int> drop;
    std::vector<bool> dropped(static_cast<std::size_t>(m), false);
    std::optional<CentralSubgraph> found;
    auto rec = [&](auto&& self, int start, int remaining) -> bool {
        if (remaining == 0) {
            std::vector<int> keep;
            for (int e = 0; e < m; ++e)
                if (!dropped[static_cast<std::size_t>(e)]) keep.push_back(e);
            if (auto hit = scan.check(keep)) {
                found = std::move(hit);
                return true;
            }
            return false;
        }
        for (int e = start; e < m; ++e) {
            dropped[static_cast<std::size_t>(e)] = true;
            if (self(self, e + 1, remaining - 1)) return true;
            dropped[static_cast<std::size_t>(e)] = false;
        }
        return false;
    };
    for (int k = 1; k < m && !found; ++k) rec(rec, 0, k);
    return found;
}

Graph central_k4_subdivision(const Graph& g, const WagnerCertificate& cert) {
    if (!validate_certificate(g, cert)) throw certificate_error("invalid certificate");

    // Work inside the union of the two witness cycles.
    std::set<int> union_edges;
    for (const PathSeq* c : {&cert.skew.c1, &cert.skew.c2}) {
        const std::size_t n = c->size();
        for (std::size_t i = 0; i < n; ++i)
            union_edges.insert(*g.find_edge((*c)[i], (*c)[(i + 1) % n]));
    }
    std::vector<bool> in_u(static_cast<std::size_t>(g.edge_count()), false);
    for (int e : union_edges) in_u[static_cast<std::size_t>(e)] = true;
    std::vector<bool> in_f(static_cast<std::size_t>(g.edge_count()), false);
    for (int e : cert.w_factor.edges) in_f[static_cast<std::size_t>(e)] = true;

    // Base cycle candidates: the witness cycles first, then every other
    // factor-alternating cycle living inside the union.
    std::vector<PathSeq> base_cycles{canonical_cycle(cert.skew.c1), canonical_cycle(cert.skew.c2)};
    {
        std::vector<std::pair<std::string, std::string>> pairs;
        for (int e : union_edges) pairs.emplace_back(g.label(g.edge(e).u), g.label(g.edge(e).v));
        Graph u = Graph::from_labeled_edges(std::move(pairs));
        OneFactor fu;
        for (int e : cert.w_factor.edges) {
            auto hu = u.vertex_by_label(g.label(g.edge(e).u));
            auto hv = u.vertex_by_label(g.label(g.edge(e).v));
            if (hu && hv && u.find_edge(*hu, *hv)) fu.edges.push_back(*u.find_edge(*hu, *hv));
        }
        std::sort(fu.edges.begin(), fu.edges.end());
        if (is_one_factor(u, fu)) {
            for (const AltCycle& c : enumerate_alternating_cycles(u, fu)) {
                PathSeq in_g;
                for (int v : c.verts) in_g.push_back(*g.vertex_by_label(u.label(v)));
                in_g = canonical_cycle(in_g);
                if (std::find(base_cycles.begin(), base_cycles.end(), in_g) == base_cycles.end())
                    base_cycles.push_back(in_g);
            }
        }
    }

    auto verify = [&](const std::set<int>& h_edges) -> std::optional<Graph> {
        std::vector<std::pair<std::string, std::string>> pairs;
        for (int e : h_edges) pairs.emplace_back(g.label(g.edge(e).u), g.label(g.edge(e).v));
        Graph h = Graph::from_labeled_edges(std::move(pairs));
        // factor must match V(h) internally
        std::vector<int> cover(static_cast<std::size_t>(h.vertex_count()), 0);
        for (int e : h_edges) {
            if (!in_f[static_cast<std::size_t>(e)]) continue;
            ++cover[static_cast<std::size_t>(*h.vertex_by_label(g.label(g.edge(e).u)))];
            ++cover[static_cast<std::size_t>(*h.vertex_by_label(g.label(g.edge(e).v)))];
        }
        for (int c : cover)
            if (c != 1) return std::nullopt;
        SuppressionResult sup = suppress_even_subdivision(h);
        if (!sup.parity_ok || !sup.simple) return std::nullopt;
        if (sup.base.vertex_count() != 4 || sup.base.edge_count() != 6) return std::nullopt;
        Graph k4 = Graph::from_index_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
        if (!isomorphic(sup.base, k4)) return std::nullopt;
        return h;
    };

    for (const PathSeq& cyc : base_cycles) {
        const std::size_t n = cyc.size();
        std::vector<bool> on_c(static_cast<std::size_t>(g.vertex_count()), false);
        std::set<int> c_edges;
        for (std::size_t i = 0; i < n; ++i) {
            on_c[static_cast<std::size_t>(cyc[i])] = true;
            c_edges.insert(*g.find_edge(cyc[i], cyc[(i + 1) % n]));
        }
        // Chord paths: factor-alternating, both end edges outside the factor,
        // interior off the cycle, all edges inside the union and off the cycle.
        std::vector<PathSeq> chords;
        std::set<PathSeq> chord_seen;
        PathSeq path;
        std::vector<bool> on_path(static_cast<std::size_t>(g.vertex_count()), false);
        auto record = [&](const PathSeq& p) {
            PathSeq norm = p;
            if (norm.back() < norm.front()) std::reverse(norm.begin(), norm.end());
            if (chord_seen.insert(norm).second) chords.push_back(norm);
        };
        auto dfs = [&](auto&& self, int v) -> void {
            for (int e : g.incident_edges(v)) {
                if (!in_u[static_cast<std::size_t>(e)] || c_edges.count(e)) continue;
                if (in_f[static_cast<std::size_t>(e)]) continue;  // steps off the cycle are non-factor
                int w = g.other_end(e, v);
                if (on_path[static_cast<std::size_t>(w)]) continue;
                if (on_c[static_cast<std::size_t>(w)]) {
                    path.push_back(w);
                    record(path);
                    path.pop_back();
                    continue;
                }
                int fe = factor_edge_at(g, cert.w_factor, w);
                if (!in_u[static_cast<std::size_t>(fe)]) continue;
                int x = g.other_end(fe, w);
                if (on_path[static_cast<std::size_t>(x)] || on_c[static_cast<std::size_t>(x)])
                    continue;
                path.push_back(w);
                path.push_back(x);
                on_path[static_cast<std::size_t>(w)] = on_path[static_cast<std::size_t>(x)] = true;
                self(self, x);
                on_path[static_cast<std::size_t>(w)] = on_path[static_cast<std::size_t>(x)] = false;
                path.pop_back();
                path.pop_back();
            }
        };
        for (std::size_t i = 0; i < n; ++i) {
            path = {cyc[i]};
            on_path[static_cast<std::size_t>(cyc[i])] = true;
            dfs(dfs, cyc[i]);
            on_path[static_cast<std::size_t>(cyc[i])] = false;
        }
        std::sort(chords.begin(), chords.end(), [](const PathSeq& a, const PathSeq& b) {
            return a.size() != b.size() ? a.size() < b.size() : a < b;
        });

        // position on the cycle
        std::vector<int> pos(static_cast<std::size_t>(g.vertex_count()), -1);
        for (std::size_t i = 0; i < n; ++i) pos[static_cast<std::size_t>(cyc[i])] = static_cast<int>(i);
        auto crossing = [&](const PathSeq& p, const PathSeq& q) {
            int a = pos[static_cast<std::size_t>(p.front())], b = pos[static_cast<std::size_t>(p.back())];
            int c = pos[static_cast<std::size_t>(q.front())], d = pos[static_cast<std::size_t>(q.back())];
            if (a > b) std::swap(a, b);
            bool c_in = a < c && c < b, d_in = a < d && d < b;
            return c_in != d_in;
        };
        auto vertex_disjoint = [&](const PathSeq& p, const PathSeq& q) {
            std::set<int> pv(p.begin(), p.end());
            for (int v : q)
                if (pv.count(v)) return false;
            return true;
        };

        for (std::size_t i = 0; i < chords.size(); ++i) {
            for (std::size_t j = i + 1; j < chords.size(); ++j) {
                if (!vertex_disjoint(chords[i], chords[j])) continue;
                if (!crossing(chords[i], chords[j])) continue;
                std::set<int> h_edges = c_edges;
                for (const PathSeq* p : {&chords[i], &chords[j]})
                    for (std::size_t t = 0; t + 1 < p->size(); ++t)
                        h_edges.insert(*g.find_edge((*p)[t], (*p)[t + 1]));
                if (auto h = verify(h_edges)) return *h;
            }
        }
    }
    throw certificate_error("no central K4 subdivision found inside the witness cycles");
}

}  // namespace matchorient
