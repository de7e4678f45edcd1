#include "catlim.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "budget.hpp"
#include "diagram_io.hpp"
#include "error.hpp"
#include "report.hpp"
#include "set_density.hpp"
#include "suite.hpp"

using namespace catlim;

struct clm_engine {
  Budget budget;
  std::string last_error;
};

struct clm_diagram {
  AnyDiagram value;
};

namespace {

clm_status status_of(Errc c) {
  switch (c) {
    case Errc::invalid_argument:
      return CLM_ERR_INVALID_ARGUMENT;
    case Errc::parse_error:
      return CLM_ERR_PARSE;
    case Errc::malformed_diagram:
    case Errc::type_mismatch:
    case Errc::mismatched_endpoints:
    case Errc::oversized_node:
    case Errc::validation_error:
      return CLM_ERR_VALIDATION;
    case Errc::budget_exceeded:
    case Errc::bound_exceeded:
      return CLM_ERR_BUDGET;
    case Errc::no_factorization:
      return CLM_ERR_NO_FACTORIZATION;
    case Errc::internal:
      return CLM_ERR_INTERNAL;
  }
  return CLM_ERR_INTERNAL;
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) return nullptr;
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <class Fn>
clm_status guarded(clm_engine* engine, Fn&& fn) {
  if (!engine) return CLM_ERR_INVALID_ARGUMENT;
  engine->last_error.clear();
  try {
    fn();
    return CLM_OK;
  } catch (const Error& e) {
    engine->last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    engine->last_error = e.what();
    return CLM_ERR_INTERNAL;
  }
}

}  // namespace

extern "C" {

const char* clm_version(void) { return "1.0.0"; }

clm_engine* clm_engine_new(void) {
  clm_engine* e = new (std::nothrow) clm_engine();
  if (!e) return nullptr;
  if (const char* env = std::getenv("CATLIM_ENUM_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) e->budget.enumeration_steps = v;
  }
  return e;
}

void clm_engine_free(clm_engine* engine) { delete engine; }

const char* clm_engine_last_error(const clm_engine* engine) {
  return engine ? engine->last_error.c_str() : "null engine";
}

clm_status clm_engine_set_enumeration_budget(clm_engine* engine, uint64_t steps) {
  if (!engine) return CLM_ERR_INVALID_ARGUMENT;
  if (steps == 0) {
    engine->last_error = "budget must be positive";
    return CLM_ERR_INVALID_ARGUMENT;
  }
  engine->budget.enumeration_steps = steps;
  engine->last_error.clear();
  return CLM_OK;
}

clm_status clm_diagram_parse(clm_engine* engine, const char* json_text,
                             clm_diagram** out_diagram) {
  return guarded(engine, [&] {
    require(json_text && out_diagram, Errc::invalid_argument, "null argument");
    *out_diagram = new clm_diagram{parse_diagram(json_text)};
  });
}

clm_status clm_diagram_load_file(clm_engine* engine, const char* path,
                                 clm_diagram** out_diagram) {
  return guarded(engine, [&] {
    require(path && out_diagram, Errc::invalid_argument, "null argument");
    *out_diagram = new clm_diagram{load_diagram(path)};
  });
}

clm_status clm_diagram_random_set3(clm_engine* engine, uint64_t seed, int max_nodes,
                                   int max_edges, clm_diagram** out_diagram) {
  return guarded(engine, [&] {
    require(out_diagram, Errc::invalid_argument, "null argument");
    int nodes = max_nodes == 0 ? 6 : max_nodes;
    int edges = max_edges == 0 ? 12 : max_edges;
    *out_diagram = new clm_diagram{AnyDiagram{random_set3_diagram(seed, nodes, edges)}};
  });
}

void clm_diagram_free(clm_diagram* diagram) { delete diagram; }

clm_status clm_diagram_to_json(clm_engine* engine, const clm_diagram* diagram,
                               char** out_json) {
  return guarded(engine, [&] {
    require(diagram && out_json, Errc::invalid_argument, "null argument");
    *out_json = dup_string(diagram_to_json(diagram->value));
    require(*out_json != nullptr, Errc::internal, "allocation failed");
  });
}

clm_status clm_limit_report(clm_engine* engine, const clm_diagram* diagram,
                            char** out_report_json) {
  return guarded(engine, [&] {
    require(diagram && out_report_json, Errc::invalid_argument, "null argument");
    Report r = limit_report(diagram->value, engine->budget);
    *out_report_json = dup_string(report_to_json(r).dump(2) + "\n");
    require(*out_report_json != nullptr, Errc::internal, "allocation failed");
  });
}

clm_status clm_run_check(clm_engine* engine, const char* check_id,
                         const char* params_json, char** out_reports_json) {
  return guarded(engine, [&] {
    require(check_id && out_reports_json, Errc::invalid_argument, "null argument");
    ordered_json params = ordered_json::object();
    if (params_json && *params_json) {
      try {
        params = ordered_json::parse(params_json);
      } catch (const nlohmann::json::parse_error& e) {
        fail(Errc::parse_error, std::string("invalid parameter JSON: ") + e.what());
      }
      require(params.is_object(), Errc::invalid_argument,
              "parameters must be a JSON object");
    }
    std::vector<Report> reports = run_check(check_id, params, engine->budget);
    ordered_json arr = ordered_json::array();
    for (const Report& r : reports) arr.push_back(report_to_json(r));
    *out_reports_json = dup_string(arr.dump(2) + "\n");
    require(*out_reports_json != nullptr, Errc::internal, "allocation failed");
  });
}

clm_status clm_report_render_text(const char* report_json, char** out_text) {
  if (!report_json || !out_text) return CLM_ERR_INVALID_ARGUMENT;
  try {
    ordered_json j = ordered_json::parse(report_json);
    std::string text;
    if (j.is_array()) {
      for (const auto& item : j) text += report_render_text(report_from_json(item)) + "\n";
    } else {
      text = report_render_text(report_from_json(j)) + "\n";
    }
    *out_text = dup_string(text);
    return *out_text ? CLM_OK : CLM_ERR_INTERNAL;
  } catch (const std::exception&) {
    return CLM_ERR_PARSE;
  }
}

void clm_string_free(char* s) { std::free(s); }

}  // extern "C"
