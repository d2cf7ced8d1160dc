#include "ddgraph/report.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include "ddgraph/errors.hpp"

namespace ddgraph {

nlohmann::json base_report(const std::string& tool) {
  return nlohmann::json{{"schema", 1}, {"tool", tool}};
}

nlohmann::json params_json(const DdgParams& p) {
  return nlohmann::json{{"v", p.v},       {"k", p.k}, {"lambda1", p.lambda1},
                        {"lambda2", p.lambda2}, {"m", p.m}, {"n", p.n},
                        {"srg", p.srg()}};
}

nlohmann::json srg_json(const SrgParams& p) {
  return nlohmann::json{{"v", p.v}, {"k", p.k}, {"lambda", p.lambda}, {"mu", p.mu}};
}

nlohmann::json eigenvalue_json(const Eigenvalue& e) {
  nlohmann::json j{{"display", e.str()}};
  if (e.integral())
    j["value"] = e.coef;
  else {
    j["coefficient"] = e.coef;
    j["radicand"] = e.rad;
  }
  return j;
}

nlohmann::json solution_json(const SpectrumSolution& s) {
  nlohmann::json entries = nlohmann::json::array();
  for (const SpectrumEntry& e : s.entries) {
    nlohmann::json je = eigenvalue_json(e.value);
    je["multiplicity"] = e.multiplicity;
    entries.push_back(je);
  }
  return nlohmann::json{{"entries", entries},
                        {"split", {{"f1", s.split[0]}, {"f2", s.split[1]}, {"g1", s.split[2]}, {"g2", s.split[3]}}}};
}

nlohmann::json spectrum_json(const Spectrum& s) {
  nlohmann::json sols = nlohmann::json::array();
  for (const SpectrumSolution& sol : s.solutions) sols.push_back(solution_json(sol));
  return nlohmann::json{{"determined", s.determined()}, {"solutions", sols}};
}

std::string certificate_hash(const std::string& cert) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : cert) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex;
  for (int i = 15; i >= 0; --i) os << ((h >> (i * 4)) & 0xF);
  return os.str();
}

void write_report_file(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::BadInput, "cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace ddgraph
