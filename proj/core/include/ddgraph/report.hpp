#pragma once

#include <string>

#include <json.hpp>

#include "ddgraph/graph.hpp"
#include "ddgraph/spectrum.hpp"

namespace ddgraph {

// Every report starts from this envelope; consumers key on the schema number.
nlohmann::json base_report(const std::string& tool);

nlohmann::json params_json(const DdgParams& p);
nlohmann::json srg_json(const SrgParams& p);
nlohmann::json eigenvalue_json(const Eigenvalue& e);
nlohmann::json solution_json(const SpectrumSolution& s);
nlohmann::json spectrum_json(const Spectrum& s);

// Short stable fingerprint of a canonical certificate for report tables.
std::string certificate_hash(const std::string& cert);

void write_report_file(const std::string& path, const nlohmann::json& j);

}  // namespace ddgraph
