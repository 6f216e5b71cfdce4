#include <doctest.h>

#include <random>
#include <set>

#include "matchorient/catalog.hpp"
#include "matchorient/orientation_solver.hpp"
#include "support.hpp"

using namespace matchorient;

namespace {

PathSeq by_labels(const Graph& g, std::initializer_list<const char*> labels) {
    PathSeq p;
    for (const char* l : labels) p.push_back(*g.vertex_by_label(l));
    return p;
}

}  // namespace

TEST_CASE("parity system shapes") {
    const CatalogEntry& w = *catalog_find("wagner");
    ParitySystem s1 = build_parity_system(w.graph, catalog_factor(w, "f1"));
    CHECK(s1.cycles.size() == 4);
    CHECK(s1.edge_count == 12);
    CHECK(validate_parity_system(w.graph, s1));

    ParitySystem s2 = build_parity_system(w.graph, catalog_factor(w, "f2"));
    CHECK(s2.cycles.size() == 5);

    const CatalogEntry& k = *catalog_find("k33");
    ParitySystem s3 = build_parity_system(k.graph, catalog_factor(k, "f"));
    CHECK(s3.cycles.size() == 5);
    CHECK(s3.edge_count == 9);

    // no alternating cycle at all: a single edge
    Graph k2 = Graph::parse("1 2");
    ParitySystem s0 = build_parity_system(k2, OneFactor{{0}});
    CHECK(s0.cycles.empty());
    CHECK(solve_orientation(s0, Target::even).exists);
    CHECK(solve_orientation(s0, Target::odd).exists);
    CHECK(zero_sum_basis(s0).empty());
}

TEST_CASE("wagner f1 admits both orientation parities") {
    const CatalogEntry& w = *catalog_find("wagner");
    ParitySystem sys = build_parity_system(w.graph, catalog_factor(w, "f1"));
    for (Target t : {Target::even, Target::odd}) {
        OrientationVerdict v = solve_orientation(sys, t);
        REQUIRE(v.exists);
        REQUIRE(v.witness.has_value());
        auto cls = classify_cycles(w.graph, *v.witness, catalog_factor(w, "f1"));
        CHECK((t == Target::even ? cls.all_even() : cls.all_odd()));
    }
}

TEST_CASE("wagner f2: no even orientation, certificate spans the five cycles") {
    const CatalogEntry& w = *catalog_find("wagner");
    const OneFactor& f2 = catalog_factor(w, "f2");
    ParitySystem sys = build_parity_system(w.graph, f2);

    OrientationVerdict even = solve_orientation(sys, Target::even);
    REQUIRE_FALSE(even.exists);
    REQUIRE(even.certificate.has_value());
    CHECK(validate_zero_sum(sys, *even.certificate));
    CHECK(even.certificate->odd_set);  // an odd set of cycles
    CHECK(even.certificate->cycle_indices.size() == 5);

    OrientationVerdict odd = solve_orientation(sys, Target::odd);
    REQUIRE(odd.exists);
    auto cls = classify_cycles(w.graph, *odd.witness, f2);
    CHECK(cls.all_odd());
}

TEST_CASE("the five f2 cycles form an odd zero-sum set inside the basis span") {
    const CatalogEntry& w = *catalog_find("wagner");
    ParitySystem sys = build_parity_system(w.graph, catalog_factor(w, "f2"));
    auto basis = zero_sum_basis(sys);
    REQUIRE_FALSE(basis.empty());
    // membership of the all-five vector in the span
    std::vector<Gf2Vector> vecs;
    for (const auto& cert : basis) {
        Gf2Vector v(sys.cycles.size());
        for (std::size_t i : cert.cycle_indices) v.set(i, true);
        vecs.push_back(v);
    }
    Gf2Vector all5(sys.cycles.size());
    for (std::size_t i = 0; i < sys.cycles.size(); ++i) all5.set(i, true);
    CHECK(gf2_in_span(vecs, all5));
}

TEST_CASE("k33 zero-sum span contains the odd five-cycle set") {
    const CatalogEntry& k = *catalog_find("k33");
    ParitySystem sys = build_parity_system(k.graph, catalog_factor(k, "f"));
    REQUIRE(sys.cycles.size() == 5);
    std::vector<Gf2Vector> vecs;
    for (const auto& cert : zero_sum_basis(sys)) {
        Gf2Vector v(sys.cycles.size());
        for (std::size_t i : cert.cycle_indices) v.set(i, true);
        vecs.push_back(v);
    }
    Gf2Vector all5(sys.cycles.size());
    for (std::size_t i = 0; i < 5; ++i) all5.set(i, true);
    CHECK(gf2_in_span(vecs, all5));
    // and the all-five set really is zero-sum
    ZeroSumCertificate five;
    five.cycle_indices = {0, 1, 2, 3, 4};
    five.odd_set = true;
    int odd_ref = 0;
    for (std::size_t i : five.cycle_indices)
        if (sys.rhs_reference.get(i)) odd_ref ^= 1;
    five.odd_oriented_ref = odd_ref == 1;
    CHECK(validate_zero_sum(sys, five));
}

TEST_CASE("badness equals odd infeasibility on random graphs") {
    std::mt19937 rng(89);
    for (int t = 0; t < 40; ++t) {
        Graph g = motest::random_matchable_graph(rng, 12);
        auto ms = enumerate_perfect_matchings(g);
        for (const OneFactor& f : ms.matchings) {
            ParitySystem sys = build_parity_system(g, f);
            CHECK(is_bad(g, f).bad == !solve_orientation(sys, Target::odd).exists);
        }
    }
}

TEST_CASE("petersen: even f0-orientation feasible, odd infeasible with certificate") {
    const CatalogEntry& p = *catalog_find("petersen");
    const OneFactor& f0 = catalog_factor(p, "f0");
    ParitySystem sys = build_parity_system(p.graph, f0);

    OrientationVerdict even = solve_orientation(sys, Target::even);
    REQUIRE(even.exists);
    CHECK(classify_cycles(p.graph, *even.witness, f0).all_even());
    // the catalogued orientation also validates
    CHECK(classify_cycles(p.graph, catalog_orientation(p, "even_f0"), f0).all_even());

    OrientationVerdict odd = solve_orientation(sys, Target::odd);
    REQUIRE_FALSE(odd.exists);
    REQUIRE(odd.certificate.has_value());
    CHECK(validate_zero_sum(sys, *odd.certificate));
    CHECK(odd.certificate->cycle_indices.size() == 5);
    CHECK(odd.certificate->odd_set);
}

TEST_CASE("w_star: the six catalogued cycles form an even zero-sum set, no even orientation") {
    const CatalogEntry& ws = *catalog_find("w_star");
    const Graph& g = ws.graph;
    const OneFactor& fs = catalog_factor(ws, "f_star");
    ParitySystem sys = build_parity_system(g, fs);

    std::set<PathSeq> listed;
    for (auto c : {by_labels(g, {"x", "y", "5", "4", "3", "2"}),
                   by_labels(g, {"x", "y", "5", "4", "8", "1"}),
                   by_labels(g, {"4", "5", "6", "7", "8", "1", "2", "3"}),
                   by_labels(g, {"1", "8", "4", "5", "6", "7", "3", "2"}),
                   by_labels(g, {"2", "3", "7", "6", "y", "x"}),
                   by_labels(g, {"x", "y", "6", "7", "8", "1"})})
        listed.insert(canonical_cycle(c));

    ZeroSumCertificate six;
    for (std::size_t i = 0; i < sys.cycles.size(); ++i)
        if (listed.count(sys.cycles[i].verts)) six.cycle_indices.push_back(i);
    REQUIRE(six.cycle_indices.size() == 6);
    six.odd_set = false;
    int odd_ref = 0;
    for (std::size_t i : six.cycle_indices)
        if (sys.rhs_reference.get(i)) odd_ref ^= 1;
    six.odd_oriented_ref = odd_ref == 1;
    CHECK(validate_zero_sum(sys, six));  // zero-sum and an even set

    // it lies in the zero-sum span
    auto basis = zero_sum_basis(sys);
    std::vector<Gf2Vector> vecs;
    for (const auto& cert : basis) {
        Gf2Vector v(sys.cycles.size());
        for (std::size_t i : cert.cycle_indices) v.set(i, true);
        vecs.push_back(v);
    }
    Gf2Vector target(sys.cycles.size());
    for (std::size_t i : six.cycle_indices) target.set(i, true);
    CHECK(gf2_in_span(vecs, target));

    // exactly one member oddly oriented under the catalogued orientation
    const Orientation& star = catalog_orientation(ws, "star");
    int odd_members = 0;
    for (std::size_t i : six.cycle_indices)
        odd_members += omega(g, star, sys.cycles[i].verts, true);
    CHECK(odd_members == 1);

    CHECK_FALSE(solve_orientation(sys, Target::even).exists);
    CHECK_FALSE(solve_orientation(sys, Target::odd).exists);
}

TEST_CASE("headline negative verdicts confirmed by full orientation search") {
    // Sweeps all 2^|E| orientations of the fixtures themselves.
    auto search = [](const Graph& g, const OneFactor& f) {
        return motest::exhaustive_orientation_search(g, f);
    };
    const CatalogEntry& w = *catalog_find("wagner");
    auto wres = search(w.graph, catalog_factor(w, "f2"));
    CHECK_FALSE(wres.even_exists);
    CHECK(wres.odd_exists);

    const CatalogEntry& p = *catalog_find("petersen");
    auto pres = search(p.graph, catalog_factor(p, "f0"));
    CHECK(pres.even_exists);
    CHECK_FALSE(pres.odd_exists);

    const CatalogEntry& ws = *catalog_find("w_star");
    auto sres = search(ws.graph, catalog_factor(ws, "f_star"));
    CHECK_FALSE(sres.even_exists);
    CHECK_FALSE(sres.odd_exists);
}

TEST_CASE("solver agrees with exhaustive orientation search and certificates validate") {
    std::mt19937 rng(47);
    int infeasible_seen = 0;
    for (int t = 0; t < 120; ++t) {
        Graph g = motest::random_matchable_graph(rng, 12);
        auto ms = enumerate_perfect_matchings(g);
        if (ms.matchings.empty()) continue;
        const OneFactor& f = ms.matchings.front();
        ParitySystem sys = build_parity_system(g, f);
        auto brute = motest::exhaustive_orientation_search(g, f);
        OrientationVerdict even = solve_orientation(sys, Target::even);
        OrientationVerdict odd = solve_orientation(sys, Target::odd);
        CHECK(even.exists == brute.even_exists);
        CHECK(odd.exists == brute.odd_exists);
        for (const auto& v : {even, odd}) {
            if (v.exists) continue;
            ++infeasible_seen;
            REQUIRE(v.certificate.has_value());
            CHECK(validate_zero_sum(sys, *v.certificate));
        }
    }
    CHECK(infeasible_seen > 0);
}

TEST_CASE("witness orientations classify to the requested parity") {
    std::mt19937 rng(53);
    for (int t = 0; t < 40; ++t) {
        Graph g = motest::random_matchable_graph(rng, 12);
        auto ms = enumerate_perfect_matchings(g);
        if (ms.matchings.empty()) continue;
        const OneFactor& f = ms.matchings.front();
        ParitySystem sys = build_parity_system(g, f);
        for (Target t2 : {Target::even, Target::odd}) {
            OrientationVerdict v = solve_orientation(sys, t2);
            if (!v.exists) continue;
            auto cls = classify_cycles(g, *v.witness, f);
            CHECK((t2 == Target::even ? cls.all_even() : cls.all_odd()));
        }
    }
}

TEST_CASE("an odd zero-sum set rules out one of the two parities") {
    // Whenever an odd set exists, even- and odd-orientation existence cannot
    // both hold.
    std::mt19937 rng(59);
    for (int t = 0; t < 60; ++t) {
        Graph g = motest::random_matchable_graph(rng, 12);
        auto ms = enumerate_perfect_matchings(g);
        if (ms.matchings.empty()) continue;
        const OneFactor& f = ms.matchings.front();
        ParitySystem sys = build_parity_system(g, f);
        bool odd_set_exists = false;
        for (const auto& cert : zero_sum_basis(sys))
            if (cert.odd_set) odd_set_exists = true;
        if (!odd_set_exists) continue;
        bool both = solve_orientation(sys, Target::even).exists &&
                    solve_orientation(sys, Target::odd).exists;
        CHECK_FALSE(both);
    }
}

TEST_CASE("evenly-oriented parity of a zero-sum set is orientation invariant") {
    const CatalogEntry& w = *catalog_find("wagner");
    const Graph& g = w.graph;
    ParitySystem sys = build_parity_system(g, catalog_factor(w, "f2"));
    auto basis = zero_sum_basis(sys);
    REQUIRE_FALSE(basis.empty());
    std::mt19937 rng(61);
    for (const auto& cert : basis) {
        int expected = -1;
        for (int t = 0; t < 100; ++t) {
            Orientation o = Orientation::reference(g);
            for (auto& b : o.reversed) b = rng() & 1;
            int evenly = 0;
            for (std::size_t i : cert.cycle_indices)
                if (omega(g, o, sys.cycles[i].verts, true) == 0) ++evenly;
            if (expected == -1) expected = evenly % 2;
            CHECK(evenly % 2 == expected);
        }
    }
}

TEST_CASE("badness matches odd-orientation infeasibility and is factor independent") {
    for (const char* name : {"wagner", "petersen", "k33", "k4", "w_star"}) {
        const CatalogEntry& e = *catalog_find(name);
        auto ms = enumerate_perfect_matchings(e.graph);
        REQUIRE_FALSE(ms.matchings.empty());
        int first = -1;
        for (const OneFactor& f : ms.matchings) {
            BadnessReport rep = is_bad(e.graph, f);
            ParitySystem sys = build_parity_system(e.graph, f);
            bool odd_exists = solve_orientation(sys, Target::odd).exists;
            CHECK(rep.bad == !odd_exists);
            if (rep.bad) {
                REQUIRE(rep.witness.has_value());
                CHECK(validate_zero_sum(sys, *rep.witness));
                // witness has an odd number of evenly oriented members
                CHECK(((rep.witness->cycle_indices.size() % 2) ^
                       (rep.witness->odd_oriented_ref ? 1 : 0)) == 1);
            }
            if (first == -1)
                first = rep.bad ? 1 : 0;
            else
                CHECK(first == (rep.bad ? 1 : 0));
        }
        CHECK((first == 1) == e.bad);
    }
}

TEST_CASE("pfaffian verdicts on the named instances") {
    CHECK(is_pfaffian(catalog_find("wagner")->graph));
    CHECK(is_pfaffian(catalog_find("k4")->graph));
    CHECK_FALSE(is_pfaffian(catalog_find("k33")->graph));
    CHECK_FALSE(is_pfaffian(catalog_find("petersen")->graph));
    CHECK_THROWS_AS(is_pfaffian(Graph::parse("1 2\n2 3")), no_factor_error);
}

TEST_CASE("pfaffian status is independent of the chosen factor") {
    for (const char* name : {"wagner", "petersen", "k33", "k4", "w_star"}) {
        const Graph& g = catalog_find(name)->graph;
        bool expected = is_pfaffian(g);
        for (const OneFactor& f : enumerate_perfect_matchings(g).matchings) {
            ParitySystem sys = build_parity_system(g, f);
            CHECK(solve_orientation(sys, Target::odd).exists == expected);
        }
    }
}

TEST_CASE("canonical orientation is an even orientation of bipartite graphs") {
    const CatalogEntry& k = *catalog_find("k33");
    const OneFactor& f = catalog_factor(k, "f");
    auto bip = bipartition(k.graph);
    REQUIRE(bip.has_value());
    Orientation o = canonical_orientation(k.graph, f, *bip);
    CHECK(classify_cycles(k.graph, o, f).all_even());
    // matches the catalog fixture bit for bit
    CHECK(o.reversed == catalog_orientation(k, "canonical_f").reversed);

    for (const char* text : {"1 2\n2 3\n3 4\n4 1", "1 2\n2 3\n3 4\n4 5\n5 6\n6 1"}) {
        Graph c = Graph::parse(text);
        for (const OneFactor& cf : enumerate_perfect_matchings(c).matchings) {
            Orientation co = canonical_orientation(c, cf, *bipartition(c));
            CHECK(classify_cycles(c, co, cf).all_even());
        }
    }

    Graph triangle = Graph::parse("1 2\n2 3\n3 1");
    CHECK_THROWS_AS(canonical_orientation(triangle, OneFactor{{0}}, Bipartition{{0}, {1, 2}}),
                    bipartite_error);
}
