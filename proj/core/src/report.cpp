#include "curvlab/report.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"

namespace curvlab {

namespace {

using Json = nlohmann::ordered_json;

Json ring_json(const RingSummary& r) {
  Json j;
  j["e"] = r.e ? Json(*r.e) : Json(nullptr);
  j["length"] = r.length ? Json(*r.length) : Json(nullptr);
  j["embdim"] = r.embdim;
  j["ci"] = r.ci;
  j["dim"] = r.dim;
  return j;
}

Json check_json(const CheckRecord& c) {
  Json j;
  j["name"] = c.name;
  j["verdict"] = verdict_name(c.verdict);
  j["hypothesis"] = c.hypothesis;
  j["margin"] = (c.margin && std::isfinite(*c.margin)) ? Json(*c.margin) : Json(nullptr);
  j["margin_exact"] = c.margin_exact;
  j["instances"] = c.instances;
  j["equalities"] = c.equalities;
  if (!c.violation.empty()) j["violation"] = c.violation;
  j["caveats"] = c.caveats;
  Json details = Json::object();
  for (const auto& [k, v] : c.details) details[k] = v;
  j["details"] = details;
  return j;
}

}  // namespace

std::string render_text(const RingSummary& r) {
  std::ostringstream os;
  os << "e = " << (r.e ? std::to_string(*r.e) : "n/a") << ", length = " << (r.length ? std::to_string(*r.length) : "n/a")
     << ", embdim = " << r.embdim << ", CI = " << (r.ci ? "true" : "false") << ", dim = " << r.dim << "\n";
  return os.str();
}

std::string render_text(const CheckRecord& c) {
  std::ostringstream os;
  os << c.name << ": " << verdict_name(c.verdict) << "\n";
  if (!c.hypothesis.empty()) os << "  hypothesis: " << c.hypothesis << "\n";
  os << "  instances: " << c.instances << " (equalities: " << c.equalities << ")\n";
  if (!c.margin_exact.empty()) os << "  margin: " << c.margin_exact << "\n";
  if (!c.violation.empty()) os << "  violation: " << c.violation << "\n";
  for (const auto& [k, v] : c.details) os << "  " << k << ": " << v << "\n";
  for (const auto& cv : c.caveats) os << "  caveat: " << cv << "\n";
  return os.str();
}

std::string render_text(const AuditReport& report) {
  std::string out = "ring: " + render_text(report.ring);
  for (const auto& c : report.checks) out += render_text(c);
  return out;
}

std::string render_json(const AuditReport& report) {
  Json j;
  j["schema"] = 1;
  j["ring"] = ring_json(report.ring);
  j["checks"] = Json::array();
  for (const auto& c : report.checks) j["checks"].push_back(check_json(c));
  return j.dump(2) + "\n";
}

int exit_status(const AuditReport& report) {
  for (const auto& c : report.checks) {
    if (c.verdict == Verdict::kFail) return 1;
  }
  return 0;
}

}  // namespace curvlab
