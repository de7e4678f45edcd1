#include "limits.hpp"

#include <algorithm>
#include <map>

#include "error.hpp"

namespace catlim {

namespace {

// Static search order: repeatedly take the node with the most incident edges
// whose other endpoint was already taken (ties by declaration order). This
// keeps the backtracking tree close to the constraint propagation order.
std::vector<int> greedy_order(int n_nodes, const std::vector<std::pair<int, int>>& ends) {
  std::vector<int> order;
  std::vector<bool> chosen(static_cast<std::size_t>(n_nodes), false);
  for (int step = 0; step < n_nodes; ++step) {
    int best = -1, best_count = -1;
    for (int v = 0; v < n_nodes; ++v) {
      if (chosen[static_cast<std::size_t>(v)]) continue;
      int count = 0;
      for (const auto& [s, t] : ends) {
        if (s == v && t != v && chosen[static_cast<std::size_t>(t)]) ++count;
        if (t == v && s != v && chosen[static_cast<std::size_t>(s)]) ++count;
      }
      if (count > best_count) {
        best = v;
        best_count = count;
      }
    }
    chosen[static_cast<std::size_t>(best)] = true;
    order.push_back(best);
  }
  return order;
}

}  // namespace

SetLimit compute_limit(const Diagram<SetCat>& d, const Budget& budget) {
  d.validate();
  SetLimit lim;
  int n_nodes = static_cast<int>(d.shape.nodes.size());
  if (n_nodes == 0) {
    lim.carrier = SetObj{1};
    lim.families.push_back({});
    return lim;
  }

  bool has_empty_node = false;
  for (const auto& o : d.objects)
    if (o.size == 0) has_empty_node = true;

  auto ends = d.edge_endpoints();

  if (!has_empty_node) {
    std::vector<int> order = greedy_order(n_nodes, ends);
    // Incident edges per node, resolved against the search order.
    std::vector<std::vector<int>> incident(static_cast<std::size_t>(n_nodes));
    for (std::size_t e = 0; e < ends.size(); ++e) {
      incident[static_cast<std::size_t>(ends[e].first)].push_back(static_cast<int>(e));
      if (ends[e].second != ends[e].first)
        incident[static_cast<std::size_t>(ends[e].second)].push_back(static_cast<int>(e));
    }
    std::vector<bool> assigned(static_cast<std::size_t>(n_nodes), false);
    std::vector<int> value(static_cast<std::size_t>(n_nodes), -1);
    StepCounter steps(budget.enumeration_steps);

    auto rec = [&](auto&& self, int depth) -> void {
      if (depth == n_nodes) {
        lim.families.push_back(value);
        return;
      }
      int node = order[static_cast<std::size_t>(depth)];
      int size = d.objects[static_cast<std::size_t>(node)].size;
      for (int v = 0; v < size; ++v) {
        steps.tick("limit enumeration");
        bool ok = true;
        for (int e : incident[static_cast<std::size_t>(node)]) {
          auto [s, t] = ends[static_cast<std::size_t>(e)];
          const auto& m = d.morphisms[static_cast<std::size_t>(e)].table;
          if (s == t) {
            if (m[static_cast<std::size_t>(v)] != v) ok = false;
          } else if (node == t && assigned[static_cast<std::size_t>(s)]) {
            if (m[static_cast<std::size_t>(value[static_cast<std::size_t>(s)])] != v) ok = false;
          } else if (node == s && assigned[static_cast<std::size_t>(t)]) {
            if (m[static_cast<std::size_t>(v)] != value[static_cast<std::size_t>(t)]) ok = false;
          }
          if (!ok) break;
        }
        if (!ok) continue;
        value[static_cast<std::size_t>(node)] = v;
        assigned[static_cast<std::size_t>(node)] = true;
        self(self, depth + 1);
        assigned[static_cast<std::size_t>(node)] = false;
      }
    };
    rec(rec, 0);
    std::sort(lim.families.begin(), lim.families.end());
  }

  lim.carrier = SetObj{static_cast<int>(lim.families.size())};
  for (int n = 0; n < n_nodes; ++n) {
    std::vector<int> table;
    table.reserve(lim.families.size());
    for (const auto& fam : lim.families) table.push_back(fam[static_cast<std::size_t>(n)]);
    lim.projections.push_back(
        SetMap{lim.carrier.size, d.objects[static_cast<std::size_t>(n)].size, std::move(table)});
  }
  return lim;
}

VecLimit compute_limit(const Diagram<VecCat>& d, const Budget&) {
  d.validate();
  VecLimit lim;
  int n_nodes = static_cast<int>(d.shape.nodes.size());
  if (n_nodes == 0) {
    lim.carrier = VecObj{Fq(2), 0};
    lim.basis = Mat(Fq(2), 0, 0);
    return lim;
  }
  Fq f = d.objects[0].field;
  for (const auto& o : d.objects)
    require(o.field == f, Errc::type_mismatch, "diagram objects over different fields");

  int total = 0;
  for (const auto& o : d.objects) {
    lim.offsets.push_back(total);
    total += o.dim;
  }
  auto ends = d.edge_endpoints();
  int rows = 0;
  for (const auto& m : d.morphisms) rows += m.rows();

  // One row block per edge: M_e at the source block, minus identity at the
  // target block; the kernel is exactly the space of compatible families.
  Mat constraints(f, rows, total);
  int r0 = 0;
  for (std::size_t e = 0; e < d.morphisms.size(); ++e) {
    const Mat& m = d.morphisms[e];
    auto [s, t] = ends[e];
    int so = lim.offsets[static_cast<std::size_t>(s)];
    int to = lim.offsets[static_cast<std::size_t>(t)];
    for (int i = 0; i < m.rows(); ++i) {
      for (int j = 0; j < m.cols(); ++j)
        constraints(r0 + i, so + j) = f.add(constraints(r0 + i, so + j), m(i, j));
      constraints(r0 + i, to + i) = f.sub(constraints(r0 + i, to + i), 1);
    }
    r0 += m.rows();
  }

  lim.basis = kernel_basis(constraints);
  lim.carrier = VecObj{f, lim.basis.cols()};
  for (int n = 0; n < n_nodes; ++n) {
    int dim = d.objects[static_cast<std::size_t>(n)].dim;
    Mat proj(f, dim, lim.basis.cols());
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < lim.basis.cols(); ++j)
        proj(i, j) = lim.basis(lim.offsets[static_cast<std::size_t>(n)] + i, j);
    lim.projections.push_back(std::move(proj));
  }
  return lim;
}

SetMap mediating_morphism(const Diagram<SetCat>& d, const SetLimit& lim, const Cone<SetCat>& c) {
  require(c.legs.size() == d.shape.nodes.size(), Errc::type_mismatch,
          "cone leg count does not match diagram nodes");
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < lim.families.size(); ++i)
    index[lim.families[i]] = static_cast<int>(i);
  std::vector<int> table;
  table.reserve(static_cast<std::size_t>(c.apex.size));
  std::vector<int> fam(d.shape.nodes.size());
  for (int a = 0; a < c.apex.size; ++a) {
    for (std::size_t n = 0; n < d.shape.nodes.size(); ++n)
      fam[n] = c.legs[n].table[static_cast<std::size_t>(a)];
    auto it = index.find(fam);
    if (it == index.end())
      fail(Errc::no_factorization, "cone does not factor through the limit");
    table.push_back(it->second);
  }
  return SetMap{c.apex.size, lim.carrier.size, std::move(table)};
}

Mat mediating_morphism(const Diagram<VecCat>& d, const VecLimit& lim, const Cone<VecCat>& c) {
  require(c.legs.size() == d.shape.nodes.size(), Errc::type_mismatch,
          "cone leg count does not match diagram nodes");
  if (d.shape.nodes.empty()) return Mat(c.apex.field, 0, c.apex.dim);
  Fq f = lim.carrier.field;
  require(c.apex.field == f, Errc::type_mismatch, "cone apex over a different field");
  Mat stacked(f, lim.basis.rows(), c.apex.dim);
  for (std::size_t n = 0; n < c.legs.size(); ++n) {
    const Mat& leg = c.legs[n];
    int off = lim.offsets[n];
    for (int i = 0; i < leg.rows(); ++i)
      for (int j = 0; j < leg.cols(); ++j) stacked(off + i, j) = leg(i, j);
  }
  // The kernel basis has full column rank, so the solution is unique.
  auto sol = solve(lim.basis, stacked);
  if (!sol) fail(Errc::no_factorization, "cone does not factor through the limit");
  return *sol;
}

bool is_limit_cone(const Diagram<SetCat>& d, const Cone<SetCat>& c, const Budget& budget) {
  if (!check_cone(d, c)) return false;
  SetLimit lim = compute_limit(d, budget);
  try {
    return set_is_bijective(mediating_morphism(d, lim, c));
  } catch (const Error& err) {
    if (err.code() == Errc::no_factorization) return false;
    throw;
  }
}

bool is_limit_cone(const Diagram<VecCat>& d, const Cone<VecCat>& c, const Budget& budget) {
  if (!check_cone(d, c)) return false;
  VecLimit lim = compute_limit(d, budget);
  try {
    return is_invertible(mediating_morphism(d, lim, c));
  } catch (const Error& err) {
    if (err.code() == Errc::no_factorization) return false;
    throw;
  }
}

}  // namespace catlim
