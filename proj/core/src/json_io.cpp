#include "pcz/json_io.hpp"

#include <json.hpp>

namespace pcz {

namespace {

using nlohmann::json;

json scan_fields(const RecurrenceReport& rep) {
  json j;
  j["shifts_tested"] = rep.shifts_tested;
  j["best_shift"] = rep.best_shift;
  j["forward_defect"] = rep.forward_defect;
  j["backward_defect"] = rep.backward_defect;
  j["test_window"] = {rep.test_window.lo, rep.test_window.hi};
  json profile = json::array();
  for (const auto& [s, d] : rep.defect_profile) profile.push_back({s, d});
  j["defect_profile"] = profile;
  return j;
}

json modulus_fields(const UCReport& rep) {
  json table = json::array();
  for (const auto& [delta, omega] : rep.modulus_table) table.push_back({delta, omega});
  return table;
}

}  // namespace

std::string to_json(const RecurrenceReport& rep, int indent) {
  return scan_fields(rep).dump(indent);
}

std::string to_json(const UCReport& rep, int indent) {
  json j;
  j["modulus_table"] = modulus_fields(rep);
  return j.dump(indent);
}

std::string to_json(const DecompositionReport& rep, int indent) {
  json j;
  j["g_norm"] = rep.g_norm;
  j["h_norm"] = rep.h_norm;
  j["f_norm"] = rep.f_norm;
  j["bound_satisfied"] = rep.bound_satisfied;
  return j.dump(indent);
}

std::string to_json(const ClassifyResult& res, const NormReport& norms, int indent) {
  json j = scan_fields(res.scan);
  j["modulus_table"] = modulus_fields(res.uc);
  j["verdict"] = verdict_name(res.verdict);
  j["eps"] = res.eps;
  j["sup_norm"] = norms.sup_norm;
  j["jump_bound"] = norms.jump_bound;
  j["attained_at"] = norms.attained_at;
  return j.dump(indent);
}

std::string to_json(const depca::ResidualReport& rep, int indent) {
  json j;
  j["sup_residual"] = rep.sup_residual;
  j["per_interval"] = rep.per_interval;
  j["difference_consistency"] = rep.difference_consistency;
  j["continuity_defect"] = rep.continuity_defect;
  j["rhs_sup"] = rep.rhs_sup;
  j["uc_bound_checked"] = rep.uc_bound_checked;
  j["uc_bound_ok"] = rep.uc_bound_ok;
  j["dichotomy_rates"] = rep.dichotomy_rates;
  j["iteration_trace"] = rep.iteration_trace;
  j["contraction_estimate"] = rep.contraction_estimate;
  return j.dump(indent);
}

}  // namespace pcz
