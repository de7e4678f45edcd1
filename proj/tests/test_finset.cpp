#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "error.hpp"
#include "finset.hpp"

using namespace catlim;

namespace {

// Independent partition oracle: canonicalize every labeling of {0..n-1} and
// dedupe. Shares nothing with the restricted-growth enumeration.
std::set<std::vector<int>> partition_oracle(int n) {
  std::set<std::vector<int>> out;
  long total = 1;
  for (int i = 0; i < n; ++i) total *= n;
  for (long idx = 0; idx < total; ++idx) {
    std::vector<int> labels(static_cast<std::size_t>(n));
    long rest = idx;
    for (int i = 0; i < n; ++i) {
      labels[static_cast<std::size_t>(i)] = static_cast<int>(rest % n);
      rest /= n;
    }
    std::vector<int> canon(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int i = 0; i < n; ++i) {
      int seen = -1;
      for (int j = 0; j < i; ++j)
        if (labels[static_cast<std::size_t>(j)] == labels[static_cast<std::size_t>(i)]) {
          seen = canon[static_cast<std::size_t>(j)];
          break;
        }
      canon[static_cast<std::size_t>(i)] = seen >= 0 ? seen : next++;
    }
    out.insert(canon);
  }
  if (n == 0) out.insert({});
  return out;
}

std::vector<int> labels_of(const Partition& p) {
  std::vector<int> labels(static_cast<std::size_t>(p.ground));
  for (int x = 0; x < p.ground; ++x) labels[static_cast<std::size_t>(x)] = p.block_of(x);
  return labels;
}

bool same_block(const Partition& p, int a, int b) { return p.block_of(a) == p.block_of(b); }

}  // namespace

TEST_CASE("set map plumbing composes and inverts") {
  SetMap f = make_set_map(3, 2, {0, 1, 1});
  SetMap g = make_set_map(2, 3, {2, 0});
  SetMap gf = set_compose(g, f);
  CHECK(gf.table == std::vector<int>{2, 0, 0});
  CHECK(set_compose(f, set_identity(3)) == f);
  CHECK(set_compose(set_identity(2), f) == f);

  SetMap swap = make_set_map(2, 2, {1, 0});
  CHECK(set_is_bijective(swap));
  CHECK(set_compose(set_inverse(swap), swap) == set_identity(2));
  CHECK(!set_is_bijective(f));
  CHECK(set_is_constant(make_set_map(3, 2, {1, 1, 1})));
  CHECK(!set_is_constant(f));
  CHECK(!set_is_constant(make_set_map(0, 2, {})));
  CHECK_THROWS_AS((void)make_set_map(2, 1, {0, 1}), Error);
}

TEST_CASE("equalizer matches the brute-force subset") {
  for (int n : {0, 1, 2, 3}) {
    auto maps = [&] {
      std::vector<SetMap> out;
      if (n == 0) {
        out.push_back(make_set_map(0, n, {}));
        return out;
      }
      std::vector<int> t(static_cast<std::size_t>(n), 0);
      while (true) {
        out.push_back(make_set_map(n, n, t));
        int i = n - 1;
        while (i >= 0 && t[static_cast<std::size_t>(i)] == n - 1) t[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
        ++t[static_cast<std::size_t>(i)];
      }
      return out;
    }();
    for (const auto& f : maps)
      for (const auto& g : maps) {
        auto [obj, incl] = equalizer(f, g);
        std::vector<int> expect;
        for (int x = 0; x < n; ++x)
          if (f.table[static_cast<std::size_t>(x)] == g.table[static_cast<std::size_t>(x)])
            expect.push_back(x);
        CHECK(obj.size == static_cast<int>(expect.size()));
        CHECK(incl.table == expect);
        CHECK(set_compose(f, incl) == set_compose(g, incl));
      }
  }
}

TEST_CASE("all_partitions counts the Bell numbers") {
  const long bell[] = {1, 1, 2, 5, 15, 52, 203};
  for (int n = 0; n <= 6; ++n)
    CHECK(static_cast<long>(all_partitions(n, 6).size()) == bell[n]);
  CHECK_THROWS_AS((void)all_partitions(7), Error);
}

TEST_CASE("all_partitions agrees with the labeling oracle") {
  for (int n = 0; n <= 4; ++n) {
    auto expect = partition_oracle(n);
    std::set<std::vector<int>> got;
    for (const auto& p : all_partitions(n)) {
      CHECK(p.ground == n);
      // Canonical form: blocks sorted internally and by least element.
      for (const auto& b : p.blocks) CHECK(std::is_sorted(b.begin(), b.end()));
      for (std::size_t i = 1; i < p.blocks.size(); ++i)
        CHECK(p.blocks[i - 1][0] < p.blocks[i][0]);
      got.insert(labels_of(p));
    }
    CHECK(got == expect);
  }
}

TEST_CASE("partition_from_labels canonicalizes arbitrary labelings") {
  Partition p = partition_from_labels({7, 3, 7, 1});
  CHECK(p.ground == 4);
  CHECK(p.blocks == std::vector<std::vector<int>>{{0, 2}, {1}, {3}});
  CHECK(p == partition_from_blocks(4, {{1}, {2, 0}, {3}}));
}

TEST_CASE("is_coarser matches the pairwise implication oracle") {
  for (int n = 1; n <= 4; ++n) {
    auto parts = all_partitions(n);
    for (const auto& p : parts)
      for (const auto& q : parts) {
        bool oracle = true;
        for (int a = 0; a < n && oracle; ++a)
          for (int b = 0; b < n && oracle; ++b)
            if (same_block(q, a, b) && !same_block(p, a, b)) oracle = false;
        CHECK(is_coarser(p, q) == oracle);
      }
  }
}

TEST_CASE("quotient maps factor through refinements") {
  for (int n = 1; n <= 4; ++n) {
    auto parts = all_partitions(n);
    for (const auto& p : parts) {
      SetMap qm = quotient_map(p);
      CHECK(qm.dom == n);
      CHECK(qm.cod == static_cast<int>(p.blocks.size()));
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          CHECK((qm.table[static_cast<std::size_t>(a)] == qm.table[static_cast<std::size_t>(b)]) ==
                same_block(p, a, b));
      for (const auto& c : parts) {
        if (!is_coarser(c, p)) continue;
        SetMap r = quotient_refinement_map(p, c);
        CHECK(set_compose(r, quotient_map(p)) == quotient_map(c));
      }
    }
  }
}

TEST_CASE("partition_of_map recovers fibers") {
  Partition p = partition_of_map(make_set_map(4, 3, {2, 0, 2, 0}));
  CHECK(p.blocks == std::vector<std::vector<int>>{{0, 2}, {1, 3}});
}

TEST_CASE("coherent choices are exactly the point selections") {
  // Independent oracle for small n: try every selection of one block per
  // partition and keep the coherent ones.
  for (int n = 1; n <= 3; ++n) {
    auto parts = all_partitions(n);
    std::vector<std::vector<int>> coherent;
    std::vector<int> sel(parts.size(), 0);
    while (true) {
      bool ok = true;
      for (std::size_t i = 0; i < parts.size() && ok; ++i)
        for (std::size_t j = 0; j < parts.size() && ok; ++j) {
          if (!is_coarser(parts[j], parts[i])) continue;
          const auto& fine = parts[i].blocks[static_cast<std::size_t>(sel[i])];
          const auto& coarse = parts[j].blocks[static_cast<std::size_t>(sel[j])];
          for (int x : fine)
            if (!std::binary_search(coarse.begin(), coarse.end(), x)) {
              ok = false;
              break;
            }
        }
      if (ok) coherent.push_back(sel);
      std::size_t i = 0;
      while (i < parts.size() &&
             sel[i] + 1 == static_cast<int>(parts[i].blocks.size()))
        sel[i++] = 0;
      if (i == parts.size()) break;
      ++sel[i];
    }
    auto got = coherent_choices(n);
    CHECK(got.size() == coherent.size());
    CHECK(got.size() == static_cast<std::size_t>(n));
    for (const auto& c : got)
      CHECK(std::find(coherent.begin(), coherent.end(), c.choice) != coherent.end());
  }
}

TEST_CASE("every coherent choice is witnessed by one point") {
  for (int n = 1; n <= 5; ++n) {
    auto parts = all_partitions(n);
    auto choices = coherent_choices(n);
    CHECK(choices.size() == static_cast<std::size_t>(n));
    std::set<int> witnesses;
    for (const auto& c : choices) {
      // Intersect the chosen blocks; a coherent choice must pin one point.
      std::vector<bool> in(static_cast<std::size_t>(n), true);
      for (std::size_t i = 0; i < parts.size(); ++i) {
        std::vector<bool> blk(static_cast<std::size_t>(n), false);
        for (int x : parts[i].blocks[static_cast<std::size_t>(c.choice[i])])
          blk[static_cast<std::size_t>(x)] = true;
        for (int x = 0; x < n; ++x)
          in[static_cast<std::size_t>(x)] = in[static_cast<std::size_t>(x)] && blk[static_cast<std::size_t>(x)];
      }
      int count = 0, point = -1;
      for (int x = 0; x < n; ++x)
        if (in[static_cast<std::size_t>(x)]) {
          ++count;
          point = x;
        }
      CHECK(count == 1);
      witnesses.insert(point);
    }
    CHECK(static_cast<int>(witnesses.size()) == n);
  }
}

TEST_CASE("ultrafilters are principal and push forward along points") {
  for (int n = 1; n <= 4; ++n) {
    auto us = all_ultrafilters(n);
    CHECK(us.size() == static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) CHECK(us[static_cast<std::size_t>(x)].point == x);
  }
  SetMap f = make_set_map(3, 2, {1, 0, 1});
  SetMap g = make_set_map(2, 4, {3, 2});
  for (int x = 0; x < 3; ++x) {
    FinUltrafilter u{3, x};
    FinUltrafilter pf = pushforward_ultrafilter(f, u);
    CHECK(pf.ground == 2);
    CHECK(pf.point == f.table[static_cast<std::size_t>(x)]);
    CHECK(pushforward_ultrafilter(g, pf) ==
          pushforward_ultrafilter(set_compose(g, f), u));
    CHECK(pushforward_ultrafilter(set_identity(3), u) == u);
  }
}

TEST_CASE("choice_of_ultrafilter picks the blocks containing the point") {
  for (int n = 1; n <= 4; ++n) {
    auto parts = all_partitions(n);
    for (int x = 0; x < n; ++x) {
      CoherentChoice c = choice_of_ultrafilter(FinUltrafilter{n, x});
      REQUIRE(c.choice.size() == parts.size());
      for (std::size_t i = 0; i < parts.size(); ++i)
        CHECK(parts[i].block_of(x) == c.choice[i]);
    }
  }
}

TEST_CASE("bijection between ultrafilters and coherent choices") {
  for (int n = 1; n <= 5; ++n) {
    Report r = galvin_horn_check(n);
    CHECK(r.passed());
    CHECK(r.metrics["coherent_choices"] == n);
    CHECK(r.metrics["ultrafilters"] == n);
  }
  // Ground 0: one empty partition, no blocks to choose, no ultrafilters.
  Report r0 = galvin_horn_check(0);
  CHECK(r0.passed());
  CHECK(r0.metrics["partitions"] == 1);
  CHECK(r0.metrics["coherent_choices"] == 0);
  CHECK_THROWS_AS((void)galvin_horn_check(6), Error);
}

TEST_CASE("partition quotient diagram has the ground set as limit") {
  for (int n = 1; n <= 4; ++n) {
    Report r = partition_limit_check(n);
    CHECK(r.passed());
    CHECK(r.metrics["carrier"] == n);
  }
  // Ground 0: the lone empty quotient pins the limit to the empty set.
  Report r0 = partition_limit_check(0);
  CHECK(r0.passed());
  CHECK(r0.metrics["partitions"] == 1);
  CHECK(r0.metrics["carrier"] == 0);
}

TEST_CASE("ultrafilter monad laws hold exhaustively on small grounds") {
  Report r = ultrafilter_monad_check(4);
  CHECK(r.passed());
  CHECK_THROWS_AS((void)ultrafilter_monad_check(6), Error);
}
