#include "baileykit/report.hpp"

#include <json.hpp>

#include "baileykit/instance.hpp"

namespace baileykit {

std::string reports_json(const std::vector<VerificationReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json o;
    o["id"] = r.instance.id;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    try {
      for (const auto& [name, value] : display_params(r.instance)) params[name] = value;
    } catch (const std::exception&) {
      for (const auto& [name, value] : r.instance.bindings) params[name] = value.to_string();
    }
    o["params"] = params;
    o["order"] = r.instance.order;
    o["status"] = status_name(r.status);
    if (r.first_mismatch_texp) o["first_mismatch_texp"] = *r.first_mismatch_texp;
    if (r.mismatch_xexp) o["mismatch_xexp"] = *r.mismatch_xexp;
    if (r.lhs_coeff) o["lhs_coeff"] = to_string(*r.lhs_coeff);
    if (r.rhs_coeff) o["rhs_coeff"] = to_string(*r.rhs_coeff);
    o["terms_summed"] = r.terms_summed;
    o["elapsed_ms"] = r.elapsed_ms;
    if (!r.derived.empty()) {
      nlohmann::ordered_json d = nlohmann::ordered_json::object();
      for (const auto& [name, value] : r.derived) d[name] = value;
      o["derived"] = d;
    }
    if (!r.message.empty()) o["message"] = r.message;
    arr.push_back(std::move(o));
  }
  return arr.dump(2) + "\n";
}

std::string report_line(const VerificationReport& r, bool with_timing) {
  std::string out = status_name(r.status) + "  " + serialize(r.instance);
  if (r.status == Status::Fail) {
    out += "  first mismatch at t^" + std::to_string(*r.first_mismatch_texp);
    if (r.mismatch_xexp) out += " (x^" + std::to_string(*r.mismatch_xexp) + ")";
    out += ": lhs " + to_string(*r.lhs_coeff) + ", rhs " + to_string(*r.rhs_coeff);
  }
  for (const auto& [name, value] : r.derived) out += "  " + name + "=" + value;
  out += "  terms=" + std::to_string(r.terms_summed);
  if (with_timing) out += "  " + std::to_string(r.elapsed_ms) + "ms";
  if (!r.message.empty()) out += "  (" + r.message + ")";
  return out;
}

std::string reports_text(const std::vector<VerificationReport>& reports, bool with_timing) {
  std::string out;
  for (const auto& r : reports) out += report_line(r, with_timing) + "\n";
  return out;
}

}  // namespace baileykit
