#include <doctest.h>

#include <random>

#include "matchorient/catalog.hpp"
#include "matchorient/iso.hpp"
#include "matchorient/matching.hpp"
#include "matchorient/splitting.hpp"
#include "matchorient/structure.hpp"
#include "support.hpp"

using namespace matchorient;

namespace {

int edge_id(const Graph& g, const char* a, const char* b) {
    return *g.find_edge(*g.vertex_by_label(a), *g.vertex_by_label(b));
}

}  // namespace

TEST_CASE("splitting w_star at (x,y) with r1 gives the wagner graph") {
    const Graph& ws = catalog_find("w_star")->graph;
    const Graph& w = catalog_find("wagner")->graph;
    SplitResult res = e0_split(ws, SplitSpec{edge_id(ws, "x", "y"), SplitChoice::r1});
    CHECK(res.is_simple);
    CHECK(res.graph == w);  // labels 1..8 survive, so this is even label-exact
}

TEST_CASE("special splitting of w_star picks r1 and carries the residual factor") {
    const CatalogEntry& ws = *catalog_find("w_star");
    auto cert = wagner_membership(ws.graph);
    REQUIRE(cert.has_value());
    auto res = special_e0_split(ws.graph, *cert, edge_id(ws.graph, "x", "y"));
    REQUIRE(res.has_value());
    CHECK(res->choice == SplitChoice::r1);
    CHECK(res->split.is_simple);
    CHECK(isomorphic(res->split.graph, catalog_find("wagner")->graph));
    CHECK(is_one_factor(res->split.graph, res->residual_factor));
    // the residual factor is the rim factor {(2,3),(4,5),(6,7),(8,1)}
    const Graph& sg = res->split.graph;
    OneFactor expected{{edge_id(sg, "2", "3"), edge_id(sg, "4", "5"), edge_id(sg, "6", "7"),
                        edge_id(sg, "8", "1")}};
    std::sort(expected.edges.begin(), expected.edges.end());
    CHECK(res->residual_factor.edges == expected.edges);
}

TEST_CASE("special splitting rejects non-qualifying edges") {
    const CatalogEntry& ws = *catalog_find("w_star");
    auto cert = wagner_membership(ws.graph);
    REQUIRE(cert.has_value());
    // (4,5) lies in the factor but both special vertices rule: 5 is special
    // and 4's neighbours 3,5,8 include the special vertex 5, so it qualifies
    // structurally; a non-factor edge such as (3,4) must not.
    CHECK_FALSE(special_e0_split(ws.graph, *cert, edge_id(ws.graph, "3", "4")).has_value());
}

TEST_CASE("special splitting needs a special vertex next to the site") {
    // Subdivide the wagner chord (3,7); the middle factor edge sits two steps
    // away from every special vertex, so it cannot host a special splitting.
    const Graph& w = catalog_find("wagner")->graph;
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const Edge& e : w.edges()) {
        if (w.label(e.u) == "3" && w.label(e.v) == "7") continue;
        pairs.emplace_back(w.label(e.u), w.label(e.v));
    }
    pairs.emplace_back("3", "p");
    pairs.emplace_back("p", "q");
    pairs.emplace_back("q", "7");
    Graph g = Graph::from_labeled_edges(pairs);

    OneFactor f{{*g.find_edge(*g.vertex_by_label("1"), *g.vertex_by_label("8")),
                 *g.find_edge(*g.vertex_by_label("2"), *g.vertex_by_label("3")),
                 *g.find_edge(*g.vertex_by_label("4"), *g.vertex_by_label("5")),
                 *g.find_edge(*g.vertex_by_label("6"), *g.vertex_by_label("7")),
                 *g.find_edge(*g.vertex_by_label("p"), *g.vertex_by_label("q"))}};
    std::sort(f.edges.begin(), f.edges.end());
    auto cert = wagner_certificate_for_factor(g, f);
    REQUIRE(cert.has_value());
    // the removed pair is a rim pair, so p and q are far from every special vertex
    std::set<std::string> specials;
    for (int re : cert->r) {
        specials.insert(g.label(g.edge(re).u));
        specials.insert(g.label(g.edge(re).v));
    }
    REQUIRE(specials.count("p") == 0);
    REQUIRE(specials.count("q") == 0);
    int mid = *g.find_edge(*g.vertex_by_label("p"), *g.vertex_by_label("q"));
    CHECK_FALSE(special_e0_split(g, *cert, mid).has_value());
}

TEST_CASE("splitting detects forced parallel edges") {
    // Take the prism: split endpoints whose reconnection duplicates an edge.
    Graph prism = Graph::parse("1 2\n2 3\n3 1\n4 5\n5 6\n6 4\n1 4\n2 5\n3 6");
    // e0 = (1,4): neighbours of 1 are {2,3}, of 4 are {5,6}; r1 adds (5,2),(6,3)
    // which both already exist.
    SplitResult res = e0_split(prism, SplitSpec{edge_id(prism, "1", "4"), SplitChoice::r1});
    CHECK_FALSE(res.is_simple);
    CHECK_FALSE(res.graph.is_simple());
    // flagged multigraphs stay quarantined from the matching machinery
    CHECK_THROWS_AS(enumerate_perfect_matchings(res.graph), precondition_error);
    CHECK(res.graph.simplified().is_simple());
}

TEST_CASE("split preconditions") {
    const Graph& k4 = catalog_find("k4")->graph;
    CHECK_THROWS_AS(e0_split(k4, SplitSpec{0, SplitChoice::r1}), split_error);  // shared nbrs
    Graph path = Graph::parse("1 2\n2 3");
    CHECK_THROWS_AS(e0_split(path, SplitSpec{0, SplitChoice::r1}), split_error);  // degree
}

TEST_CASE("gluing the wagner graph back to w_star") {
    const Graph& w = catalog_find("wagner")->graph;
    Graph glued = glue(w, {*w.vertex_by_label("5"), *w.vertex_by_label("1")},
                       {*w.vertex_by_label("6"), *w.vertex_by_label("2")});
    CHECK(isomorphic(glued, catalog_find("w_star")->graph));
    CHECK(is_one_extendible(glued).one_extendible);
}

TEST_CASE("glue rejects dependent or missing edges") {
    const Graph& w = catalog_find("wagner")->graph;
    CHECK_THROWS_AS(glue(w, {0, 1}, {0, 4}), glue_error);       // share vertex 1
    CHECK_THROWS_AS(glue(w, {0, 2}, {1, 5}), glue_error);       // (1,3) is not an edge
}

TEST_CASE("split then glue returns the original graph") {
    const Graph& ws = catalog_find("w_star")->graph;
    SplitResult res = e0_split(ws, SplitSpec{edge_id(ws, "x", "y"), SplitChoice::r1});
    REQUIRE(res.is_simple);
    const Graph& sg = res.graph;
    auto p0 = res.added_pairs[0], p1 = res.added_pairs[1];
    Graph back = glue(sg, {*sg.vertex_by_label(p0.first), *sg.vertex_by_label(p0.second)},
                      {*sg.vertex_by_label(p1.first), *sg.vertex_by_label(p1.second)});
    CHECK(isomorphic(back, ws));
}

TEST_CASE("glue then split round-trips on random cubic graphs") {
    std::mt19937 rng(79);
    int done = 0;
    while (done < 50) {
        int n = 4 + 2 * static_cast<int>(rng() % 5);  // 4..12
        Graph g = motest::random_cubic_graph(rng, n);
        if (!is_one_extendible(g).one_extendible) continue;
        // pick a random pair of independent edges
        std::uniform_int_distribution<int> ed(0, g.edge_count() - 1);
        int e1 = ed(rng), e2 = ed(rng);
        const Edge &a = g.edge(e1), &b = g.edge(e2);
        if (e1 == e2 || a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) continue;
        Graph glued = glue(g, {a.u, a.v}, {b.u, b.v});
        // the glued graph splits back at the fresh edge
        int sa = *glued.vertex_by_label("s0");
        int sb = *glued.vertex_by_label("s1");
        int e0 = *glued.find_edge(sa, sb);
        bool matched = false;
        for (SplitChoice c : {SplitChoice::r1, SplitChoice::r2}) {
            SplitResult back = e0_split(glued, SplitSpec{e0, c});
            if (back.is_simple && isomorphic(back.graph, g)) matched = true;
        }
        CHECK(matched);
        ++done;
    }
}

TEST_CASE("split then glue round-trips on random cubic graphs") {
    std::mt19937 rng(83);
    int done = 0;
    while (done < 50) {
        int n = 6 + 2 * static_cast<int>(rng() % 4);  // 6..12
        Graph g = motest::random_cubic_graph(rng, n);
        if (!is_one_extendible(g).one_extendible) continue;
        std::uniform_int_distribution<int> ed(0, g.edge_count() - 1);
        int e0 = ed(rng);
        SplitResult res;
        try {
            res = e0_split(g, SplitSpec{e0, SplitChoice::r2});
        } catch (const split_error&) {
            continue;
        }
        if (!res.is_simple) continue;
        const Graph& sg = res.graph;
        auto p0 = res.added_pairs[0], p1 = res.added_pairs[1];
        Graph back = glue(sg, {*sg.vertex_by_label(p0.first), *sg.vertex_by_label(p0.second)},
                          {*sg.vertex_by_label(p1.first), *sg.vertex_by_label(p1.second)});
        CHECK(isomorphic(back, g));
        ++done;
    }
}

TEST_CASE("claim about simple special splittings when no 3-cut blocks them") {
    // A cubic member without a non-trivial factor-tight cut of size three has
    // a qualifying edge whose splitting is simple in at least one pairing.
    for (const char* name : {"wagner", "w_star"}) {
        const CatalogEntry& entry = *catalog_find(name);
        const Graph& g = entry.graph;
        auto cert = wagner_membership(g);
        REQUIRE(cert.has_value());
        // verify the hypothesis with the cut enumerator: no non-trivial cut of
        // size 3 crossed exactly once by the certified factor
        MatchingSet ms = enumerate_perfect_matchings(g);
        std::size_t cert_factor_idx = ms.matchings.size();
        for (std::size_t i = 0; i < ms.matchings.size(); ++i)
            if (ms.matchings[i].edges == cert->w_factor.edges) cert_factor_idx = i;
        REQUIRE(cert_factor_idx < ms.matchings.size());
        for (const auto& rep : enumerate_tight_cuts(g)) {
            if (rep.trivial || rep.cut.edges.size() != 3) continue;
            bool f_tight = std::find(rep.f_tight_for.begin(), rep.f_tight_for.end(),
                                     cert_factor_idx) != rep.f_tight_for.end();
            CHECK_FALSE(f_tight);
        }
        // some factor edge qualifies and splits simple
        bool simple_split_found = false;
        for (int e0 : cert->w_factor.edges)
            if (auto res = special_e0_split(g, *cert, e0))
                simple_split_found |= res->split.is_simple;
        CHECK(simple_split_found);
    }
}
