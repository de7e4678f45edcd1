#include "suite.hpp"

#include "codensity.hpp"
#include "error.hpp"
#include "finset.hpp"
#include "finvec.hpp"
#include "set_density.hpp"

namespace catlim {

namespace {

int param_int(const ordered_json& p, const char* key, int fallback) {
  auto it = p.find(key);
  if (it == p.end() || it->is_null()) return fallback;
  require(it->is_number_integer(), Errc::invalid_argument,
          std::string("parameter \"") + key + "\" must be an integer");
  return it->get<int>();
}

std::uint64_t param_u64(const ordered_json& p, const char* key, std::uint64_t fallback) {
  auto it = p.find(key);
  if (it == p.end() || it->is_null()) return fallback;
  require(it->is_number_unsigned() || it->is_number_integer(), Errc::invalid_argument,
          std::string("parameter \"") + key + "\" must be an integer");
  return it->get<std::uint64_t>();
}

std::string param_str(const ordered_json& p, const char* key, const std::string& fallback) {
  auto it = p.find(key);
  if (it == p.end() || it->is_null()) return fallback;
  require(it->is_string(), Errc::invalid_argument,
          std::string("parameter \"") + key + "\" must be a string");
  return it->get<std::string>();
}

ScanFunctor parse_functor(const std::string& s) {
  if (s == "id") return ScanFunctor::identity;
  if (s == "dd") return ScanFunctor::double_dual;
  fail(Errc::invalid_argument, "functor must be \"id\" or \"dd\"");
}

// A budget or bound overrun is an honest "could not run at this size", not
// a verification failure.
Report skipped_report(const std::string& id, const ordered_json& params, const Error& e) {
  Report r;
  r.check = id;
  r.params = params;
  r.skip_with(e.what());
  return r;
}

void run_one(std::vector<Report>& out, const std::string& id, const ordered_json& params,
             const Budget& budget) {
  try {
    if (id == "prop38") {
      out.push_back(verify_prop38(param_int(params, "size", 3), budget));
    } else if (id == "equalizer") {
      out.push_back(equalizer_witness(param_int(params, "m", 2)).report);
    } else if (id == "set3") {
      out.push_back(set3_corpus_check(param_int(params, "count", 500),
                                      param_u64(params, "seed", 0), budget));
    } else if (id == "galvin-horn") {
      out.push_back(galvin_horn_check(param_int(params, "size", 5)));
    } else if (id == "partition-limit") {
      out.push_back(partition_limit_check(param_int(params, "size", 4), budget));
    } else if (id == "ultrafilter-monad") {
      out.push_back(ultrafilter_monad_check(param_int(params, "max_ground", 4)));
    } else if (id == "codensity-set") {
      out.push_back(codensity_set_report(param_int(params, "size", 3),
                                         param_int(params, "probe_max", 3), budget));
    } else if (id == "codensity-set-laws") {
      out.push_back(codensity_set_laws_report(param_int(params, "max_size", 2),
                                              param_int(params, "probe_max", 2), budget));
    } else if (id == "codensity-vec") {
      int dim = param_int(params, "dim", 2);
      out.push_back(codensity_vec_report(Fq(param_int(params, "q", 2)), dim,
                                         param_int(params, "probe_max", dim), budget));
    } else if (id == "codensity-vec-mu") {
      out.push_back(codensity_vec_mult_report(Fq(param_int(params, "q", 2)),
                                              param_int(params, "max_dim", 1), budget));
    } else if (id == "dd-monad") {
      out.push_back(dd_monad_check(Fq(param_int(params, "q", 2)),
                                   param_int(params, "max_dim", 3),
                                   param_u64(params, "seed", 1)));
    } else if (id == "lemma42") {
      out.push_back(lemma42_check(Fq(param_int(params, "q", 2)),
                                  param_int(params, "dim", 2), budget));
    } else if (id == "lemma45") {
      out.push_back(lemma45_scan(Fq(param_int(params, "q", 2)),
                                 param_int(params, "max_dim", 2),
                                 parse_functor(param_str(params, "functor", "id")), budget));
    } else if (id == "prop43") {
      out.push_back(prop43_check(Fq(param_int(params, "q", 2)), param_int(params, "n", 3),
                                 budget));
    } else {
      fail(Errc::invalid_argument, "unknown check id: " + id);
    }
  } catch (const Error& e) {
    if (e.code() == Errc::budget_exceeded || e.code() == Errc::bound_exceeded) {
      out.push_back(skipped_report(id, params, e));
      return;
    }
    throw;
  }
}

ordered_json pj(std::initializer_list<std::pair<const char*, ordered_json>> kv) {
  ordered_json p = ordered_json::object();
  for (const auto& [k, v] : kv) p[k] = v;
  return p;
}

}  // namespace

std::vector<std::string> known_checks() {
  return {"prop38",        "equalizer",          "set3",
          "galvin-horn",   "partition-limit",    "ultrafilter-monad",
          "codensity-set", "codensity-set-laws", "codensity-vec",
          "codensity-vec-mu", "dd-monad",        "lemma42",
          "lemma45",       "prop43",             "all"};
}

std::vector<Report> run_check(const std::string& id, const ordered_json& params,
                              const Budget& budget) {
  std::vector<Report> out;
  if (id != "all") {
    run_one(out, id, params.is_null() ? ordered_json::object() : params, budget);
    return out;
  }

  for (int n = 3; n <= 6; ++n) run_one(out, "prop38", pj({{"size", n}}), budget);
  for (int m = 0; m <= 2; ++m) run_one(out, "equalizer", pj({{"m", m}}), budget);
  run_one(out, "set3", pj({{"count", 500}, {"seed", 0}}), budget);
  for (int n = 1; n <= 5; ++n) run_one(out, "galvin-horn", pj({{"size", n}}), budget);
  for (int n = 1; n <= 4; ++n) run_one(out, "partition-limit", pj({{"size", n}}), budget);
  run_one(out, "ultrafilter-monad", pj({{"max_ground", 4}}), budget);
  for (int s = 0; s <= 4; ++s)
    run_one(out, "codensity-set", pj({{"size", s}, {"probe_max", 3}}), budget);
  run_one(out, "codensity-set-laws", pj({{"max_size", 2}, {"probe_max", 2}}), budget);
  for (int q : {2, 3})
    for (int d = 0; d <= 2; ++d)
      run_one(out, "codensity-vec", pj({{"q", q}, {"dim", d}, {"probe_max", d}}), budget);
  for (int q : {2, 3}) run_one(out, "codensity-vec-mu", pj({{"q", q}, {"max_dim", 1}}), budget);
  for (int q : {2, 3}) run_one(out, "dd-monad", pj({{"q", q}, {"max_dim", 3}}), budget);
  for (auto [q, n] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}})
    run_one(out, "lemma42", pj({{"q", q}, {"dim", n}}), budget);
  for (int q : {2, 3})
    for (const char* f : {"id", "dd"})
      run_one(out, "lemma45", pj({{"q", q}, {"max_dim", 2}, {"functor", f}}), budget);
  for (int q : {2, 3})
    for (int n = 2; n <= 4; ++n) run_one(out, "prop43", pj({{"q", q}, {"n", n}}), budget);
  return out;
}

}  // namespace catlim
