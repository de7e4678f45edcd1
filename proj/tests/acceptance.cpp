// Acceptance gate: every criterion below must pass, exactly and within its
// time bound, for the build to count as done. One line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "codensity.hpp"
#include "diagram_io.hpp"
#include "finvec.hpp"
#include "finset.hpp"
#include "limits.hpp"
#include "rng.hpp"
#include "set_density.hpp"

using namespace catlim;

namespace {

struct Criterion {
  std::string name;
  double limit_s;
  std::function<bool(std::string&)> run;
};

bool expect(bool ok, const std::string& what, std::string& detail) {
  if (!ok && detail.empty()) detail = what;
  return ok;
}

long ipow(int base, int exp) {
  long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

const char* kFixtures[] = {"swap-cycle.json",  "product23.json",
                           "const-edge.json",  "size1-loop.json",
                           "conflict-constants.json", "vec-graph.json"};

std::string fixture_path(const char* name) {
  return std::string(CATLIM_FIXTURE_DIR) + "/" + name;
}

// Criterion 12 helpers: a random cone over a computed limit is a random
// morphism into the carrier with the projections composed on; the mediating
// morphism must reproduce it and must be the only candidate that does.
bool fuzz_set_fixture(const Diagram<SetCat>& d, Rng& rng, std::string& detail) {
  SetLimit lim = compute_limit(d);
  for (int trial = 0; trial < 50; ++trial) {
    int apex = lim.carrier.size == 0 ? 0 : rng.range(0, 3);
    std::vector<int> table(static_cast<std::size_t>(apex));
    for (int i = 0; i < apex; ++i)
      table[static_cast<std::size_t>(i)] = rng.range(0, lim.carrier.size - 1);
    SetMap m{apex, lim.carrier.size, table};
    Cone<SetCat> c;
    c.apex = SetObj{apex};
    for (const auto& p : lim.projections) c.legs.push_back(set_compose(p, m));
    if (!expect(check_cone(d, c), "projected legs are not a cone", detail)) return false;
    SetMap back = mediating_morphism(d, lim, c);
    if (!expect(back == m, "mediating morphism differs from the seed", detail)) return false;

    long candidates = apex == 0 ? 1 : ipow(lim.carrier.size, apex);
    if (candidates > 100000) continue;
    int hits = 0;
    std::vector<int> t(static_cast<std::size_t>(apex), 0);
    while (true) {
      SetMap cand{apex, lim.carrier.size, t};
      bool all = true;
      for (std::size_t n = 0; n < lim.projections.size() && all; ++n)
        all = set_compose(lim.projections[n], cand) == c.legs[n];
      if (all) ++hits;
      int i = apex - 1;
      while (i >= 0 && t[static_cast<std::size_t>(i)] == lim.carrier.size - 1)
        t[static_cast<std::size_t>(i--)] = 0;
      if (i < 0) break;
      ++t[static_cast<std::size_t>(i)];
    }
    if (!expect(hits == 1, "mediating morphism is not unique", detail)) return false;
  }
  return true;
}

bool fuzz_vec_fixture(const Diagram<VecCat>& d, Rng& rng, std::string& detail) {
  VecLimit lim = compute_limit(d);
  Fq f = lim.carrier.field;
  for (int trial = 0; trial < 50; ++trial) {
    int apex = rng.range(0, 2);
    Mat m(f, lim.carrier.dim, apex);
    for (int r = 0; r < m.rows(); ++r)
      for (int c2 = 0; c2 < m.cols(); ++c2)
        m(r, c2) = static_cast<std::uint8_t>(rng.below(f.q));
    Cone<VecCat> c;
    c.apex = VecObj{f, apex};
    for (const auto& p : lim.projections) c.legs.push_back(mul(p, m));
    if (!expect(check_cone(d, c), "projected legs are not a cone", detail)) return false;
    Mat back = mediating_morphism(d, lim, c);
    if (!expect(back == m, "mediating morphism differs from the seed", detail)) return false;

    int cells = lim.carrier.dim * apex;
    long candidates = ipow(f.q, cells);
    if (candidates > 100000) continue;
    int hits = 0;
    for (long idx = 0; idx < candidates; ++idx) {
      Mat cand(f, lim.carrier.dim, apex);
      long rest = idx;
      for (int cell = 0; cell < cells; ++cell) {
        cand(cell / apex, cell % apex) = static_cast<std::uint8_t>(rest % f.q);
        rest /= f.q;
      }
      bool all = true;
      for (std::size_t n = 0; n < lim.projections.size() && all; ++n)
        all = mul(lim.projections[n], cand) == c.legs[n];
      if (all) ++hits;
    }
    if (!expect(hits == 1, "mediating morphism is not unique", detail)) return false;
  }
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria;

  criteria.push_back({"prop38 limit cones, n in 3..6", 10.0, [](std::string& detail) {
    for (int n = 3; n <= 6; ++n) {
      Report r = verify_prop38(n);
      if (!expect(r.passed(), "verify failed at n=" + std::to_string(n), detail)) return false;
      if (!expect(r.metrics["carrier"] == n, "carrier != n at n=" + std::to_string(n), detail))
        return false;
    }
    return true;
  }});

  criteria.push_back({"equalizer witnesses on a 3-element set", 1.0, [](std::string& detail) {
    for (int m = 0; m <= 2; ++m) {
      EqualizerWitness w = equalizer_witness(m);
      if (!expect(w.report.passed(), "no witness for size " + std::to_string(m), detail))
        return false;
      if (!expect(w.report.metrics["pairs_scanned"].get<int>() <= 729, "scanned > 729 pairs",
                  detail))
        return false;
      auto [eq, incl] = equalizer(w.f, w.g);
      if (!expect(eq.size == m, "witness equalizer has the wrong size", detail)) return false;
    }
    return true;
  }});

  criteria.push_back({"set3 corpus of 500 plus handcrafted cases", 30.0, [](std::string& detail) {
    Report corpus = set3_corpus_check(500, 0);
    if (!expect(corpus.passed(), "corpus check failed: " + corpus.reason, detail)) return false;
    if (!expect(corpus.metrics["diagrams"] == 500, "corpus did not cover 500 diagrams", detail))
      return false;

    Diagram<SetCat> isolated;
    isolated.shape.nodes = {"A"};
    isolated.objects = {SetObj{2}};
    struct Case {
      const Diagram<SetCat> d;
      int carrier;
    };
    std::vector<Case> cases;
    cases.push_back({isolated, 2});
    cases.push_back({std::get<Diagram<SetCat>>(load_diagram(fixture_path("swap-cycle.json"))), 0});
    cases.push_back({std::get<Diagram<SetCat>>(load_diagram(fixture_path("const-edge.json"))), 2});
    for (const auto& c : cases) {
      if (!expect(compute_limit(c.d).carrier.size == c.carrier, "handcrafted carrier mismatch",
                  detail))
        return false;
      Report r = verify_power_of_two(c.d);
      if (!expect(r.passed(), "handcrafted verdict mismatch: " + r.reason, detail)) return false;
    }
    return true;
  }});

  criteria.push_back({"galvin-horn coherent choices, n in 1..5", 10.0, [](std::string& detail) {
    for (int n = 1; n <= 5; ++n) {
      Report r = galvin_horn_check(n);
      if (!expect(r.passed(), "failed at n=" + std::to_string(n), detail)) return false;
      if (!expect(r.metrics["coherent_choices"] == n, "choice count != n", detail)) return false;
    }
    return true;
  }});

  criteria.push_back({"partition-limit cones, n in 1..4", 10.0, [](std::string& detail) {
    for (int n = 1; n <= 4; ++n) {
      Report r = partition_limit_check(n);
      if (!expect(r.passed(), "failed at n=" + std::to_string(n), detail)) return false;
      if (!expect(r.metrics["carrier"] == n, "carrier != n", detail)) return false;
    }
    return true;
  }});

  criteria.push_back({"ultrafilter monad and codensity-set comparison", 60.0,
                      [](std::string& detail) {
    Report monad = ultrafilter_monad_check(4);
    if (!expect(monad.passed(), "monad laws failed: " + monad.reason, detail)) return false;
    for (int k = 0; k <= 4; ++k) {
      Report r = codensity_set_report(k, 3);
      if (!expect(r.passed(), "codensity-set failed at size " + std::to_string(k) + ": " + r.reason,
                  detail))
        return false;
      if (!expect(r.metrics["carrier"] == k, "carrier != size", detail)) return false;
    }
    Report laws = codensity_set_laws_report(2, 2);
    if (!expect(laws.passed(), "codensity monad laws failed: " + laws.reason, detail))
      return false;
    return true;
  }});

  criteria.push_back({"dd-monad laws and rescaled family, q in {2,3}", 10.0,
                      [](std::string& detail) {
    for (int q : {2, 3}) {
      Report r = dd_monad_check(Fq(q), 3);
      if (!expect(r.passed(), "failed at q=" + std::to_string(q) + ": " + r.reason, detail))
        return false;
      if (!expect(r.metrics["alternate_monads"] == q - 1, "rescaled family count != q-1", detail))
        return false;
      long covered = r.metrics["naturality_maps_exhaustive"].get<long>() +
                     r.metrics["naturality_maps_sampled"].get<long>();
      if (!expect(covered >= 100, "fewer than 100 naturality maps covered", detail)) return false;
    }
    return true;
  }});

  criteria.push_back({"lemma42 bijection, five (q,n) pairs", 60.0, [](std::string& detail) {
    const std::pair<int, int> cases[] = {{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}};
    for (auto [q, n] : cases) {
      Report r = lemma42_check(Fq(q), n);
      if (!expect(r.passed(), "failed at q=" + std::to_string(q) + " n=" + std::to_string(n) +
                                  ": " + r.reason,
                  detail))
        return false;
      long expect_count = ipow(q, n);
      if (!expect(r.metrics["coherent_choices"] == expect_count, "choices != q^n", detail))
        return false;
      if (!expect(r.metrics["expected_choices"] == expect_count, "evaluations != q^n", detail))
        return false;
    }
    return true;
  }});

  criteria.push_back({"lemma45 naturality scan, q in {2,3}, both functors", 60.0,
                      [](std::string& detail) {
    for (int q : {2, 3})
      for (ScanFunctor fn : {ScanFunctor::identity, ScanFunctor::double_dual}) {
        Report r = lemma45_scan(Fq(q), 2, fn);
        if (!expect(r.passed(), "scan failed at q=" + std::to_string(q) + ": " + r.reason, detail))
          return false;
        if (!expect(r.metrics["survivors"] == q, "survivors != q", detail)) return false;
      }
    return true;
  }});

  criteria.push_back({"codensity-vec comparison and mu cross-check", 30.0,
                      [](std::string& detail) {
    for (int q : {2, 3}) {
      for (int dim = 0; dim <= 2; ++dim) {
        Report r = codensity_vec_report(Fq(q), dim, dim);
        if (!expect(r.passed(), "failed at q=" + std::to_string(q) + " dim=" +
                                    std::to_string(dim) + ": " + r.reason,
                    detail))
          return false;
        if (!expect(r.metrics["carrier_dim"] == dim, "carrier dim != dim", detail)) return false;
      }
      Report mu = codensity_vec_mult_report(Fq(q), 1);
      if (!expect(mu.passed(), "mu cross-check failed at q=" + std::to_string(q) + ": " + mu.reason,
                  detail))
        return false;
    }
    return true;
  }});

  criteria.push_back({"prop43 coordinate-subspace cones", 10.0, [](std::string& detail) {
    for (int q : {2, 3})
      for (int n = 2; n <= 4; ++n) {
        Report r = prop43_check(Fq(q), n);
        if (!expect(r.passed(), "failed at q=" + std::to_string(q) + " n=" + std::to_string(n),
                    detail))
          return false;
        if (!expect(r.metrics["carrier_dim"] == n, "carrier dim != n", detail)) return false;
      }
    return true;
  }});

  criteria.push_back({"universal-property fuzzing over all fixtures", 60.0,
                      [](std::string& detail) {
    int index = 0;
    for (const char* name : kFixtures) {
      AnyDiagram any = load_diagram(fixture_path(name));
      Rng rng(1000 + static_cast<std::uint64_t>(index++));
      bool ok = std::holds_alternative<Diagram<SetCat>>(any)
                    ? fuzz_set_fixture(std::get<Diagram<SetCat>>(any), rng, detail)
                    : fuzz_vec_fixture(std::get<Diagram<VecCat>>(any), rng, detail);
      if (!ok) {
        detail += std::string(" (fixture ") + name + ")";
        return false;
      }
    }
    return true;
  }});

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    std::string detail;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit_s) {
      ok = false;
      if (detail.empty()) detail = "time bound exceeded";
    }
    std::printf("[%2zu/%zu] %s %s (%.3f s, limit %.0f s)%s%s\n", i + 1, criteria.size(),
                ok ? "PASS" : "FAIL", c.name.c_str(), secs, c.limit_s,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failed;
  }
  if (failed == 0) {
    std::printf("acceptance: all %zu criteria passed\n", criteria.size());
    return 0;
  }
  std::printf("acceptance: %d of %zu criteria FAILED\n", failed, criteria.size());
  return 1;
}
