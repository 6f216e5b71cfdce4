#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matchorient/graph.hpp"

namespace matchorient {

// Built-in named instances with their catalogued 1-factors, orientations and
// verdicts. Every stored verdict is recomputed from scratch by the test
// suite, so the fixtures cannot drift from the implementation.
struct CatalogEntry {
    struct FactorVerdict {
        std::string factor;  // name of one of the stored factors
        bool even_feasible = false;
        bool odd_feasible = false;
    };

    std::string name;
    Graph graph;
    std::vector<std::pair<std::string, OneFactor>> factors;
    std::vector<std::pair<std::string, Orientation>> orientations;
    std::vector<FactorVerdict> factor_verdicts;
    bool pfaffian = false;
    bool bad = false;
    bool wagner_member = false;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry* catalog_find(const std::string& name);

const OneFactor& catalog_factor(const CatalogEntry& entry, const std::string& name);
const Orientation& catalog_orientation(const CatalogEntry& entry, const std::string& name);

}  // namespace matchorient
