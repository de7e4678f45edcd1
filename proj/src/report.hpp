#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace catlim {

using ordered_json = nlohmann::ordered_json;

// Machine-readable outcome of one check. Serialized field order is fixed so
// that --json output is byte-stable for a given seed and version.
struct Report {
  enum class Status { pass, fail, skipped };

  std::string check;
  ordered_json params = ordered_json::object();
  std::string anchor_label;
  std::string anchor_claim;
  Status status = Status::pass;
  std::string reason;   // set when status != pass
  ordered_json metrics = ordered_json::object();
  std::optional<std::uint64_t> seed;
  ordered_json counterexample;  // null unless a failing replay payload exists
  std::vector<std::string> notes;

  bool passed() const { return status == Status::pass; }
  bool failed() const { return status == Status::fail; }

  void fail_with(std::string why, ordered_json replay = nullptr) {
    status = Status::fail;
    if (reason.empty()) reason = std::move(why);
    if (!replay.is_null() && counterexample.is_null()) counterexample = std::move(replay);
  }
  void skip_with(std::string why) {
    status = Status::skipped;
    reason = std::move(why);
  }
};

const char* status_name(Report::Status s);
ordered_json report_to_json(const Report& r);
Report report_from_json(const ordered_json& j);
std::string report_render_text(const Report& r);

}  // namespace catlim
