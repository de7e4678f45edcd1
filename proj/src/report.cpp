#include "report.hpp"

#include <sstream>

#include "error.hpp"

namespace catlim {

const char* status_name(Report::Status s) {
  switch (s) {
    case Report::Status::pass: return "pass";
    case Report::Status::fail: return "fail";
    case Report::Status::skipped: return "skipped";
  }
  return "unknown";
}

ordered_json report_to_json(const Report& r) {
  ordered_json j;
  j["check"] = r.check;
  j["params"] = r.params;
  j["anchor"] = ordered_json{{"label", r.anchor_label}, {"claim", r.anchor_claim}};
  j["status"] = status_name(r.status);
  if (!r.reason.empty()) j["reason"] = r.reason;
  j["metrics"] = r.metrics;
  if (r.seed) j["seed"] = *r.seed;
  if (!r.counterexample.is_null()) j["counterexample"] = r.counterexample;
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

Report report_from_json(const ordered_json& j) {
  Report r;
  r.check = j.at("check").get<std::string>();
  if (j.contains("params")) r.params = j.at("params");
  if (j.contains("anchor")) {
    r.anchor_label = j.at("anchor").value("label", "");
    r.anchor_claim = j.at("anchor").value("claim", "");
  }
  std::string s = j.value("status", "pass");
  if (s == "pass")
    r.status = Report::Status::pass;
  else if (s == "fail")
    r.status = Report::Status::fail;
  else if (s == "skipped")
    r.status = Report::Status::skipped;
  else
    fail(Errc::parse_error, "unknown report status: " + s);
  r.reason = j.value("reason", "");
  if (j.contains("metrics")) r.metrics = j.at("metrics");
  if (j.contains("seed")) r.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("counterexample")) r.counterexample = j.at("counterexample");
  if (j.contains("notes")) r.notes = j.at("notes").get<std::vector<std::string>>();
  return r;
}

namespace {

void append_scalars(std::ostringstream& out, const ordered_json& obj) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (it->is_structured()) continue;
    out << ' ' << it.key() << '=' << it->dump();
  }
}

}  // namespace

std::string report_render_text(const Report& r) {
  std::ostringstream out;
  switch (r.status) {
    case Report::Status::pass: out << "[PASS] "; break;
    case Report::Status::fail: out << "[FAIL] "; break;
    case Report::Status::skipped: out << "[SKIP] "; break;
  }
  out << r.check;
  append_scalars(out, r.params);
  if (!r.anchor_label.empty()) out << " | " << r.anchor_label;
  bool has_scalars = r.seed.has_value();
  for (auto it = r.metrics.begin(); !has_scalars && it != r.metrics.end(); ++it)
    has_scalars = !it->is_structured();
  if (has_scalars) {
    out << " |";
    append_scalars(out, r.metrics);
    if (r.seed) out << " seed=" << *r.seed;
  }
  if (!r.reason.empty()) out << " | " << r.reason;
  for (const auto& n : r.notes) out << "\n       note: " << n;
  return out.str();
}

}  // namespace catlim
