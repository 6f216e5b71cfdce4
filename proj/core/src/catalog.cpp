#include "matchorient/catalog.hpp"

#include <stdexcept>

namespace matchorient {

namespace {

using LP = std::vector<std::pair<std::string, std::string>>;

CatalogEntry make_wagner() {
    CatalogEntry e;
    e.name = "wagner";
    // Rim cycle 1..8 plus the four long chords.
    e.graph = Graph::from_labeled_edges(LP{{"1", "2"},
                                           {"2", "3"},
                                           {"3", "4"},
                                           {"4", "5"},
                                           {"5", "6"},
                                           {"6", "7"},
                                           {"7", "8"},
                                           {"8", "1"},
                                           {"1", "5"},
                                           {"2", "6"},
                                           {"3", "7"},
                                           {"4", "8"}});
    e.factors.emplace_back("f1", factor_from_labels(e.graph, LP{{"1", "5"}, {"2", "6"}, {"3", "7"}, {"4", "8"}}));
    e.factors.emplace_back("f2", factor_from_labels(e.graph, LP{{"1", "2"}, {"3", "4"}, {"5", "6"}, {"7", "8"}}));
    e.orientations.emplace_back(
        "even_f1",
        Orientation::from_directed_labels(
            e.graph, LP{{"2", "1"},
                        {"2", "3"},
                        {"3", "4"},
                        {"4", "5"},
                        {"5", "6"},
                        {"6", "7"},
                        {"7", "8"},
                        {"8", "1"},
                        {"2", "6"},
                        {"5", "1"},
                        {"3", "7"},
                        {"4", "8"}}));
    e.orientations.emplace_back(
        "odd_f1",
        Orientation::from_directed_labels(
            e.graph, LP{{"2", "1"},
                        {"2", "3"},
                        {"3", "4"},
                        {"4", "5"},
                        {"5", "6"},
                        {"6", "7"},
                        {"7", "8"},
                        {"8", "1"},
                        {"2", "6"},
                        {"7", "3"},
                        {"4", "8"},
                        {"1", "5"}}));
    e.orientations.emplace_back(
        "odd_f2",
        Orientation::from_directed_labels(
            e.graph, LP{{"1", "2"},
                        {"2", "3"},
                        {"3", "4"},
                        {"4", "5"},
                        {"5", "6"},
                        {"6", "7"},
                        {"7", "8"},
                        {"1", "8"},
                        {"5", "1"},
                        {"2", "6"},
                        {"7", "3"},
                        {"4", "8"}}));
    e.factor_verdicts = {{"f1", true, true}, {"f2", false, true}};
    e.pfaffian = true;
    e.bad = false;
    e.wagner_member = true;
    return e;
}

CatalogEntry make_petersen() {
    CatalogEntry e;
    e.name = "petersen";
    // Edge set read off the catalogued even orientation: two pentagons plus a
    // transversal of spokes.
    LP arcs{{"1", "2"},  {"2", "3"}, {"3", "4"}, {"4", "5"},  {"5", "1"},
            {"6", "7"},  {"7", "8"}, {"8", "9"}, {"9", "10"}, {"1", "6"},
            {"2", "9"},  {"3", "7"}, {"4", "10"}, {"5", "8"}, {"10", "6"}};
    LP edges = arcs;
    e.graph = Graph::from_labeled_edges(edges);
    e.factors.emplace_back(
        "f0", factor_from_labels(e.graph, LP{{"1", "6"}, {"2", "9"}, {"3", "7"}, {"4", "10"}, {"5", "8"}}));
    e.orientations.emplace_back("even_f0", Orientation::from_directed_labels(e.graph, arcs));
    e.factor_verdicts = {{"f0", true, false}};
    e.pfaffian = false;
    e.bad = true;
    e.wagner_member = false;
    return e;
}

CatalogEntry make_k33() {
    CatalogEntry e;
    e.name = "k33";
    LP edges;
    for (const char* a : {"1", "2", "3"})
        for (const char* b : {"4", "5", "6"}) edges.emplace_back(a, b);
    e.graph = Graph::from_labeled_edges(edges);
    e.factors.emplace_back("f", factor_from_labels(e.graph, LP{{"1", "4"}, {"2", "5"}, {"3", "6"}}));
    // Canonical orientation for f: factor edges 1,2,3 -> 4,5,6, the rest back.
    e.orientations.emplace_back(
        "canonical_f",
        Orientation::from_directed_labels(e.graph, LP{{"1", "4"},
                                                      {"2", "5"},
                                                      {"3", "6"},
                                                      {"5", "1"},
                                                      {"6", "1"},
                                                      {"4", "2"},
                                                      {"6", "2"},
                                                      {"4", "3"},
                                                      {"5", "3"}}));
    e.factor_verdicts = {{"f", true, false}};
    e.pfaffian = false;
    e.bad = true;
    e.wagner_member = false;
    return e;
}

CatalogEntry make_k4() {
    CatalogEntry e;
    e.name = "k4";
    e.graph = Graph::from_labeled_edges(
        LP{{"1", "2"}, {"1", "3"}, {"1", "4"}, {"2", "3"}, {"2", "4"}, {"3", "4"}});
    e.factors.emplace_back("f", factor_from_labels(e.graph, LP{{"1", "2"}, {"3", "4"}}));
    e.factor_verdicts = {{"f", true, true}};
    e.pfaffian = true;
    e.bad = false;
    e.wagner_member = false;
    return e;
}

CatalogEntry make_w_star() {
    CatalogEntry e;
    e.name = "w_star";
    LP edges{{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5", "6"},
             {"6", "7"}, {"7", "8"}, {"8", "1"}, {"1", "x"}, {"2", "x"},
             {"5", "y"}, {"6", "y"}, {"x", "y"}, {"4", "8"}, {"3", "7"}};
    e.graph = Graph::from_labeled_edges(edges);
    e.factors.emplace_back(
        "f_star",
        factor_from_labels(e.graph, LP{{"2", "3"}, {"4", "5"}, {"6", "7"}, {"8", "1"}, {"x", "y"}}));
    e.orientations.emplace_back(
        "star", Orientation::from_directed_labels(e.graph, LP{{"x", "y"},
                                                              {"y", "6"},
                                                              {"6", "5"},
                                                              {"5", "4"},
                                                              {"4", "8"},
                                                              {"8", "7"},
                                                              {"7", "3"},
                                                              {"3", "2"},
                                                              {"2", "1"},
                                                              {"1", "x"},
                                                              {"y", "5"},
                                                              {"4", "3"},
                                                              {"6", "7"},
                                                              {"8", "1"},
                                                              {"2", "x"}}));
    e.factor_verdicts = {{"f_star", false, false}};
    e.pfaffian = false;
    e.bad = true;
    e.wagner_member = true;
    return e;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> v;
        v.push_back(make_wagner());
        v.push_back(make_petersen());
        v.push_back(make_k33());
        v.push_back(make_k4());
        v.push_back(make_w_star());
        return v;
    }();
    return entries;
}

const CatalogEntry* catalog_find(const std::string& name) {
    for (const CatalogEntry& e : catalog())
        if (e.name == name) return &e;
    return nullptr;
}

const OneFactor& catalog_factor(const CatalogEntry& entry, const std::string& name) {
    for (const auto& [n, f] : entry.factors)
        if (n == name) return f;
    throw std::out_of_range("no factor named " + name + " in catalog entry " + entry.name);
}

const Orientation& catalog_orientation(const CatalogEntry& entry, const std::string& name) {
    for (const auto& [n, o] : entry.orientations)
        if (n == name) return o;
    throw std::out_of_range("no orientation named " + name + " in catalog entry " + entry.name);
}

}  // namespace matchorient
