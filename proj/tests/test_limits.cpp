#include "doctest.h"

#include <algorithm>
#include <utility>
#include <vector>

#include "error.hpp"
#include "limits.hpp"

using namespace catlim;

namespace {

Diagram<SetCat> two_nodes(int a, int b) {
  Diagram<SetCat> d;
  d.shape.nodes = {"A", "B"};
  d.objects = {SetObj{a}, SetObj{b}};
  return d;
}

}  // namespace

TEST_CASE("limit of the empty diagram is a point") {
  Diagram<SetCat> d;
  SetLimit lim = compute_limit(d);
  CHECK(lim.carrier.size == 1);

  Diagram<VecCat> v;
  VecLimit vl = compute_limit(v);
  CHECK(vl.carrier.dim == 0);
}

TEST_CASE("limit of an edgeless diagram is the product") {
  Diagram<SetCat> d = two_nodes(2, 3);
  SetLimit lim = compute_limit(d);
  CHECK(lim.carrier.size == 6);
  CHECK(lim.families.size() == 6);
  // Projections recover every pair exactly once.
  std::vector<std::pair<int, int>> seen;
  for (int i = 0; i < 6; ++i)
    seen.emplace_back(lim.projections[0].table[static_cast<std::size_t>(i)],
                      lim.projections[1].table[static_cast<std::size_t>(i)]);
  std::sort(seen.begin(), seen.end());
  CHECK(std::unique(seen.begin(), seen.end()) == seen.end());
  CHECK(seen.front() == std::pair<int, int>{0, 0});
  CHECK(seen.back() == std::pair<int, int>{1, 2});
}

TEST_CASE("an empty node forces an empty limit") {
  Diagram<SetCat> d = two_nodes(2, 0);
  CHECK(compute_limit(d).carrier.size == 0);
}

TEST_CASE("self-loop constraints keep only fixed points") {
  Diagram<SetCat> d;
  d.shape.nodes = {"A"};
  d.objects = {SetObj{3}};
  d.shape.edges = {ShapeEdge{"e", "A", "A"}};
  d.morphisms = {make_set_map(3, 3, {1, 0, 2})};
  SetLimit lim = compute_limit(d);
  CHECK(lim.carrier.size == 1);
  CHECK(lim.families == std::vector<std::vector<int>>{{2}});
}

TEST_CASE("parallel edges cut the limit to the equalizer") {
  SetMap f = make_set_map(3, 3, {0, 1, 1});
  SetMap g = make_set_map(3, 3, {0, 0, 1});
  Diagram<SetCat> d = two_nodes(3, 3);
  d.shape.edges = {ShapeEdge{"f", "A", "B"}, ShapeEdge{"g", "A", "B"}};
  d.morphisms = {f, g};
  SetLimit lim = compute_limit(d);
  auto [eq, incl] = equalizer(f, g);
  CHECK(lim.carrier.size == eq.size);
  for (const auto& fam : lim.families)
    CHECK(f.table[static_cast<std::size_t>(fam[0])] == g.table[static_cast<std::size_t>(fam[0])]);
}

TEST_CASE("mediating morphism is the unique cone factorization") {
  Diagram<SetCat> d = two_nodes(2, 3);
  SetLimit lim = compute_limit(d);

  Cone<SetCat> c;
  c.apex = SetObj{3};
  c.legs = {make_set_map(3, 2, {0, 1, 1}), make_set_map(3, 3, {2, 0, 1})};
  REQUIRE(check_cone(d, c));
  SetMap m = mediating_morphism(d, lim, c);
  for (std::size_t n = 0; n < d.shape.nodes.size(); ++n)
    CHECK(set_compose(lim.projections[n], m) == c.legs[n]);
  // Uniqueness: any other table breaks some projection equation.
  for (int i = 0; i < m.dom; ++i)
    for (int v = 0; v < m.cod; ++v) {
      if (v == m.table[static_cast<std::size_t>(i)]) continue;
      SetMap alt = m;
      alt.table[static_cast<std::size_t>(i)] = v;
      bool all = true;
      for (std::size_t n = 0; n < d.shape.nodes.size(); ++n)
        all = all && set_compose(lim.projections[n], alt) == c.legs[n];
      CHECK(!all);
    }
}

TEST_CASE("a non-factoring cone throws no_factorization") {
  // Equalizer-shaped diagram whose limit misses the diagonal point (1, 0).
  SetMap f = make_set_map(2, 2, {0, 0});
  SetMap g = make_set_map(2, 2, {0, 1});
  Diagram<SetCat> d = two_nodes(2, 2);
  d.shape.edges = {ShapeEdge{"f", "A", "B"}, ShapeEdge{"g", "A", "B"}};
  d.morphisms = {f, g};
  SetLimit lim = compute_limit(d);
  CHECK(lim.carrier.size == 1);

  Cone<SetCat> bad;
  bad.apex = SetObj{1};
  bad.legs = {make_set_map(1, 2, {1}), make_set_map(1, 2, {0})};
  try {
    (void)mediating_morphism(d, lim, bad);
    FAIL("expected no_factorization");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::no_factorization);
  }
}

TEST_CASE("is_limit_cone accepts the projections and rejects impostors") {
  Diagram<SetCat> d = two_nodes(2, 3);
  SetLimit lim = compute_limit(d);
  Cone<SetCat> c{lim.carrier, lim.projections};
  CHECK(is_limit_cone(d, c));

  // Apex too small: a cone that factors but is not a bijection.
  Cone<SetCat> small;
  small.apex = SetObj{1};
  small.legs = {make_set_map(1, 2, {0}), make_set_map(1, 3, {0})};
  CHECK(check_cone(d, small));
  CHECK(!is_limit_cone(d, small));
}

TEST_CASE("vector limit of a single map is its graph") {
  Fq f(3);
  Diagram<VecCat> d;
  d.shape.nodes = {"X", "Y"};
  d.objects = {VecObj{f, 2}, VecObj{f, 1}};
  d.shape.edges = {ShapeEdge{"f", "X", "Y"}};
  d.morphisms = {Mat::from_rows(f, {{1, 2}})};
  VecLimit lim = compute_limit(d);
  CHECK(lim.carrier.dim == 2);
  // Every basis family satisfies the edge constraint.
  CHECK(mul(d.morphisms[0], lim.projections[0]) == lim.projections[1]);
  CHECK(rank(lim.basis) == lim.basis.cols());

  Cone<VecCat> c{lim.carrier, lim.projections};
  CHECK(is_limit_cone(d, c));
}

TEST_CASE("vector mediating morphism factors cones uniquely") {
  Fq f(2);
  Diagram<VecCat> d;
  d.shape.nodes = {"X", "Y"};
  d.objects = {VecObj{f, 2}, VecObj{f, 2}};
  d.shape.edges = {ShapeEdge{"e", "X", "Y"}};
  d.morphisms = {Mat::from_rows(f, {{1, 1}, {0, 1}})};
  VecLimit lim = compute_limit(d);
  CHECK(lim.carrier.dim == 2);

  Cone<VecCat> c;
  c.apex = VecObj{f, 1};
  Mat leg0 = Mat::from_rows(f, {{1}, {0}});
  c.legs = {leg0, mul(d.morphisms[0], leg0)};
  REQUIRE(check_cone(d, c));
  Mat m = mediating_morphism(d, lim, c);
  for (std::size_t n = 0; n < d.shape.nodes.size(); ++n)
    CHECK(mul(lim.projections[n], m) == c.legs[n]);
}

TEST_CASE("vector limits reject mixed fields") {
  Diagram<VecCat> d;
  d.shape.nodes = {"X", "Y"};
  d.objects = {VecObj{Fq(2), 1}, VecObj{Fq(3), 1}};
  CHECK_THROWS_AS((void)compute_limit(d), Error);
}

TEST_CASE("limit enumeration respects the step budget") {
  Diagram<SetCat> d = two_nodes(2, 3);
  try {
    (void)compute_limit(d, Budget{}.with_steps(3));
    FAIL("expected budget_exceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::budget_exceeded);
  }
}

TEST_CASE("node declaration order does not change the carrier") {
  // Same shape written in two orders: a chain A -> B -> C.
  Diagram<SetCat> d1;
  d1.shape.nodes = {"A", "B", "C"};
  d1.objects = {SetObj{2}, SetObj{2}, SetObj{2}};
  d1.shape.edges = {ShapeEdge{"ab", "A", "B"}, ShapeEdge{"bc", "B", "C"}};
  d1.morphisms = {make_set_map(2, 2, {1, 0}), make_set_map(2, 2, {0, 0})};

  Diagram<SetCat> d2;
  d2.shape.nodes = {"C", "B", "A"};
  d2.objects = {SetObj{2}, SetObj{2}, SetObj{2}};
  d2.shape.edges = {ShapeEdge{"bc", "B", "C"}, ShapeEdge{"ab", "A", "B"}};
  d2.morphisms = {make_set_map(2, 2, {0, 0}), make_set_map(2, 2, {1, 0})};

  CHECK(compute_limit(d1).carrier.size == compute_limit(d2).carrier.size);
}
