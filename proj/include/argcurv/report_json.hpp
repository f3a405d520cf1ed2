#pragma once

#include <string>

#include "json.hpp"

#include "argcurv/bounds.hpp"

namespace argcurv {

// Rationals serialize as "p/q" strings, floating values as numbers.
inline nlohmann::json bound_value_json(const BoundValue& v) {
  if (std::holds_alternative<Rational>(v)) return std::get<Rational>(v).str();
  return std::get<double>(v);
}

inline nlohmann::json report_to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["bound_id"] = r.bound_id;
  j["hypothesis_status"] = hypothesis_status_str(r.status);
  j["lhs"] = r.lhs ? bound_value_json(*r.lhs) : nlohmann::json(nullptr);
  j["rhs"] = r.rhs ? bound_value_json(*r.rhs) : nlohmann::json(nullptr);
  j["passed"] = r.passed ? nlohmann::json(*r.passed) : nlohmann::json(nullptr);
  j["tight"] = r.tight;
  if (r.witness) {
    j["witness"] = {{"kind", r.witness->kind},
                    {"vertices", r.witness->vertices},
                    {"detail", r.witness->detail}};
  } else {
    j["witness"] = nullptr;
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

inline nlohmann::json reports_to_json(const std::vector<VerificationReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(report_to_json(r));
  return arr;
}

// Failures are counted only for asserted bounds: satisfied hypothesis with a
// negative outcome. Conjectural outcomes are informational.
inline int failed_assertions(const std::vector<VerificationReport>& reports) {
  int count = 0;
  for (const auto& r : reports)
    if (r.status == HypothesisStatus::satisfied && r.passed && !*r.passed) ++count;
  return count;
}

}  // namespace argcurv
