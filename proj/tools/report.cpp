#include "report.hpp"

#include <fstream>

#include "invalg/io.hpp"

namespace invalg::cli {

json to_json(const Verdict& v) {
  json clauses = json::array();
  for (const auto& c : v.clauses) {
    json entry{{"name", c.name}, {"passed", c.passed}};
    if (!c.witness.empty()) entry["witness"] = c.witness;
    clauses.push_back(std::move(entry));
  }
  return {{"passed", v.passed()}, {"clauses", clauses}};
}

json to_json(const IdentityReport& r, bool timings) {
  json out{{"identity", r.identity},
           {"products", r.products},
           {"mode", std::string{mode_name(r.mode)}},
           {"status", std::string{status_name(r.status)}}};
  if (!r.residual.empty()) out["residual"] = r.residual;
  if (!r.witness.empty()) out["witness"] = r.witness;
  if (r.mode != CheckMode::symbolic) out["cases"] = r.cases;
  if (r.seed) out["seed"] = *r.seed;
  if (timings) out["elapsed_ms"] = r.elapsed_ms;
  return out;
}

json to_json(const BracketMatch& m) {
  json out{{"bracket", m.bracket}, {"scale", m.scale.to_string()}};
  if (m.parameter) out["parameter"] = m.parameter->to_string();
  return out;
}

json to_json(const AccompanyingRow& row) {
  json generic = json::array();
  for (const auto& m : row.generic) generic.push_back(to_json(m));
  json at_zero = json::array();
  for (const auto& m : row.at_k_zero) at_zero.push_back(to_json(m));
  json claims = json::array();
  for (const auto& a : row.claims) {
    json c{{"condition", condition_name(a.claim.condition)},
           {"claimed_scale", a.claimed_scale.to_string()},
           {"claimed_bracket", a.claim.bracket},
           {"confirmed", a.confirmed}};
    if (a.parameter) c["parameter"] = a.parameter->to_string();
    claims.push_back(std::move(c));
  }
  return {{"dot", std::string{family_name(row.family)} + ":" + std::to_string(row.index)},
          {"commutator", row.commutator.to_string()},
          {"generic", generic},
          {"at_k_zero", at_zero},
          {"claims", claims}};
}

json to_json(const Subspace& s) {
  json rows = json::array();
  for (const auto& b : s.basis()) {
    json r = json::array();
    for (const auto& x : b) r.push_back(x.to_plain_string());
    rows.push_back(std::move(r));
  }
  return {{"dim", s.dim()}, {"basis", rows}};
}

json to_json(const Matrix& m) { return json::parse(write_map(m))["map"]; }

json to_json(const Classification& c) {
  json inventory = json::array();
  for (const auto& s : c.inventory) inventory.push_back(to_json(s));
  return {{"kind", std::string{irreducibility_name(c.kind)}},
          {"submodules", inventory},
          {"cross_checks", to_json(c.cross_checks)}};
}

void write_report(const std::string& path, const json& doc) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write report " + path);
  out << doc.dump(2) << "\n";
}

}  // namespace invalg::cli
