#include "matchorient/iso.hpp"

#include <algorithm>

namespace matchorient {

namespace {

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> d;
    d.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

struct Matcher {
    const Graph& a;
    const Graph& b;
    std::vector<int> map;       // a-vertex -> b-vertex or -1
    std::vector<bool> used_b;

    bool consistent(int va, int vb) const {
        if (a.degree(va) != b.degree(vb)) return false;
        for (int ea : a.incident_edges(va)) {
            int wa = a.other_end(ea, va);
            int wb = map[static_cast<std::size_t>(wa)];
            if (wb != -1 && !b.has_edge(vb, wb)) return false;
        }
        // mapped b-neighbours of vb must be matched by a-neighbours of va
        for (int eb : b.incident_edges(vb)) {
            int wb = b.other_end(eb, vb);
            for (int va2 = 0; va2 < a.vertex_count(); ++va2) {
                if (map[static_cast<std::size_t>(va2)] == wb && !a.has_edge(va, va2)) return false;
            }
        }
        return true;
    }

    bool extend(int va) {
        if (va == a.vertex_count()) return true;
        for (int vb = 0; vb < b.vertex_count(); ++vb) {
            if (used_b[static_cast<std::size_t>(vb)]) continue;
            if (!consistent(va, vb)) continue;
            map[static_cast<std::size_t>(va)] = vb;
            used_b[static_cast<std::size_t>(vb)] = true;
            if (extend(va + 1)) return true;
            map[static_cast<std::size_t>(va)] = -1;
            used_b[static_cast<std::size_t>(vb)] = false;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return std::nullopt;
    if (degree_sequence(a) != degree_sequence(b)) return std::nullopt;
    Matcher m{a, b,
              std::vector<int>(static_cast<std::size_t>(a.vertex_count()), -1),
              std::vector<bool>(static_cast<std::size_t>(b.vertex_count()), false)};
    if (!m.extend(0)) return std::nullopt;
    return m.map;
}

bool isomorphic_multisets(std::vector<Graph> a, std::vector<Graph> b) {
    if (a.size() != b.size()) return false;
    std::vector<bool> taken(b.size(), false);
    for (const Graph& ga : a) {
        bool found = false;
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (!taken[i] && isomorphic(ga, b[i])) {
                taken[i] = true;
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace matchorient
