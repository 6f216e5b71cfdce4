#pragma once

#include <nlohmann/json.hpp>

#include "matchorient/catalog.hpp"
#include "matchorient/graph.hpp"
#include "matchorient/matching.hpp"
#include "matchorient/orientation_solver.hpp"
#include "matchorient/structure.hpp"
#include "matchorient/wagner.hpp"

namespace matchorient {

nlohmann::json graph_json(const Graph& g);
nlohmann::json factor_json(const Graph& g, const OneFactor& f);
nlohmann::json orientation_json(const Graph& g, const Orientation& o);
nlohmann::json cycle_json(const Graph& g, const PathSeq& verts);
nlohmann::json verdict_json(const Graph& g, const ParitySystem& sys, const OrientationVerdict& v);
nlohmann::json zero_sum_json(const Graph& g, const ParitySystem& sys, const ZeroSumCertificate& c);
nlohmann::json cut_json(const Graph& g, const Cut& cut);
nlohmann::json ear_decomposition_json(const Graph& g, const EarDecomposition& dec);
nlohmann::json wagner_certificate_json(const Graph& g, const WagnerCertificate& cert);
nlohmann::json catalog_entry_json(const CatalogEntry& e);

}  // namespace matchorient
