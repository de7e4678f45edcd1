#include "finvec.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "error.hpp"
#include "limits.hpp"
#include "rng.hpp"

namespace catlim {

namespace {

ordered_json mat_rows_json(const Mat& m) {
  ordered_json rows = ordered_json::array();
  for (int r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back((int)m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat random_mat(Fq field, int rows, int cols, Rng& rng) {
  Mat m(field, rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      m(r, c) = (std::uint8_t)rng.below(field.q);
  return m;
}

std::string family_key(const std::vector<Mat>& family) {
  std::string k;
  for (const Mat& m : family) k += VecCat::mor_key(m) + ";";
  return k;
}

}  // namespace

Mat dual_map(const Mat& f) { return transpose(f); }

Mat dd_on_map(const Mat& f) {
  Mat ff = dual_map(dual_map(f));
  require(ff == f, Errc::internal, "double dual changed a matrix");
  return ff;
}

Mat dd_unit(Fq field, int dim) {
  // Entry (j, i) is the evaluation of the j-th dual-basis functional on the
  // i-th basis vector, i.e. the j-th double-dual coordinate of eta(e_i).
  Mat eta(field, dim, dim);
  for (int j = 0; j < dim; ++j) {
    Mat ej_star(field, 1, dim);
    ej_star(0, j) = 1;
    for (int i = 0; i < dim; ++i) {
      Mat ei(field, dim, 1);
      ei(i, 0) = 1;
      eta(j, i) = mul(ej_star, ei)(0, 0);
    }
  }
  require(is_invertible(eta), Errc::internal, "evaluation pairing is degenerate");
  return eta;
}

Mat dd_mult(Fq field, int dim) {
  // mu is the dual of the unit taken at the dual space, which has the same
  // dimension.
  Mat m = dual_map(dd_unit(field, dim));
  require(is_invertible(m), Errc::internal, "multiplication is degenerate");
  return m;
}

MonadComponents dd_monad(Fq field, int max_dim) {
  require(max_dim >= 0, Errc::invalid_argument, "max_dim must be >= 0");
  MonadComponents mc{field, max_dim, {}, {}};
  for (int d = 0; d <= max_dim; ++d) {
    Mat eta = dd_unit(field, d);
    Mat mu = dd_mult(field, d);
    Mat tx_id = Mat::identity(field, d);
    require(mul(mu, dd_unit(field, d)) == tx_id, Errc::internal, "left unit law fails");
    require(mul(mu, dd_on_map(eta)) == tx_id, Errc::internal, "right unit law fails");
    require(mul(mu, dd_on_map(mu)) == mul(mu, dd_mult(field, d)), Errc::internal,
            "associativity fails");
    mc.unit.push_back(std::move(eta));
    mc.mult.push_back(std::move(mu));
  }
  return mc;
}

Report dd_monad_check(Fq field, int max_dim, std::uint64_t sample_seed) {
  require(max_dim >= 1, Errc::invalid_argument, "max_dim must be >= 1");
  require(max_dim <= 4, Errc::bound_exceeded, "max_dim above 4 is not supported");
  Report r;
  r.check = "dd-monad";
  r.params["q"] = (int)field.q;
  r.params["max_dim"] = max_dim;
  r.anchor_label = "Cor 4.6";
  r.anchor_claim =
      "double dualization carries a monad structure whose unit is invertible, "
      "and rescaling the unit by any nonzero scalar (and the multiplication by "
      "its inverse) yields another monad structure on the same functor";

  MonadComponents mc = dd_monad(field, max_dim);
  for (int d = 0; d <= max_dim; ++d) {
    if (!is_invertible(mc.unit[(std::size_t)d])) {
      r.fail_with("unit is not invertible at dim " + std::to_string(d));
      return r;
    }
  }

  // Naturality of unit and mult, exhaustive where the hom-set is small and
  // seeded sampling where it is not.
  long exhaustive_maps = 0, sampled_maps = 0;
  bool sampled = false;
  Rng rng(sample_seed);
  for (int m = 0; m <= max_dim; ++m) {
    for (int n = 0; n <= max_dim; ++n) {
      long count = 1;
      bool small = true;
      for (int i = 0; i < m * n && small; ++i) {
        count *= field.q;
        if (count > 4096) small = false;
      }
      std::vector<Mat> maps;
      if (small) {
        maps = VecCat::hom(VecObj{field, m}, VecObj{field, n});
        exhaustive_maps += (long)maps.size();
      } else {
        sampled = true;
        for (int i = 0; i < 128; ++i) maps.push_back(random_mat(field, n, m, rng));
        sampled_maps += (long)maps.size();
      }
      for (const Mat& f : maps) {
        Mat ff = dd_on_map(f);
        if (mul(mc.unit[(std::size_t)n], f) != mul(ff, mc.unit[(std::size_t)m])) {
          ordered_json cx;
          cx["dim_src"] = m;
          cx["dim_dst"] = n;
          cx["matrix"] = mat_rows_json(f);
          r.fail_with("unit naturality fails", cx);
          return r;
        }
        Mat ffff = dd_on_map(ff);
        if (mul(mc.mult[(std::size_t)n], ffff) != mul(ff, mc.mult[(std::size_t)m])) {
          ordered_json cx;
          cx["dim_src"] = m;
          cx["dim_dst"] = n;
          cx["matrix"] = mat_rows_json(f);
          r.fail_with("multiplication naturality fails", cx);
          return r;
        }
      }
    }
  }
  if (sampled) r.seed = sample_seed;

  // Functor laws on the dims where the hom-sets stay small.
  long functor_pairs = 0;
  int fl_dim = std::min(max_dim, 2);
  for (int m = 0; m <= fl_dim; ++m) {
    Mat idm = Mat::identity(field, m);
    if (dd_on_map(idm) != idm) {
      r.fail_with("functor does not preserve the identity at dim " + std::to_string(m));
      return r;
    }
    for (int n = 0; n <= fl_dim; ++n) {
      for (int p = 0; p <= fl_dim; ++p) {
        auto fs = VecCat::hom(VecObj{field, m}, VecObj{field, n});
        auto gs = VecCat::hom(VecObj{field, n}, VecObj{field, p});
        for (const Mat& g : gs) {
          for (const Mat& f : fs) {
            ++functor_pairs;
            if (dd_on_map(mul(g, f)) != mul(dd_on_map(g), dd_on_map(f))) {
              ordered_json cx;
              cx["f"] = mat_rows_json(f);
              cx["g"] = mat_rows_json(g);
              r.fail_with("functor does not preserve composition", cx);
              return r;
            }
          }
        }
      }
    }
  }

  // Rescaled structures (k*unit, k^-1*mult) for nonzero k, checked against
  // the same three laws at every dim; distinctness is visible at dim 1.
  int alternates = 0;
  std::set<std::string> unit_keys;
  for (std::uint8_t k = 1; k < field.q; ++k) {
    for (int d = 0; d <= max_dim; ++d) {
      Mat eta_k = scaled(mc.unit[(std::size_t)d], k);
      Mat mu_k = scaled(mc.mult[(std::size_t)d], field.inv(k));
      Mat eta_tx_k = scaled(dd_unit(field, d), k);
      Mat mu_tx_k = scaled(dd_mult(field, d), field.inv(k));
      Mat tx_id = Mat::identity(field, d);
      bool ok = mul(mu_k, eta_tx_k) == tx_id && mul(mu_k, dd_on_map(eta_k)) == tx_id &&
                mul(mu_k, dd_on_map(mu_k)) == mul(mu_k, mu_tx_k);
      if (!ok) {
        r.fail_with("rescaled structure k=" + std::to_string((int)k) +
                    " violates a monad law at dim " + std::to_string(d));
        return r;
      }
    }
    unit_keys.insert(VecCat::mor_key(scaled(mc.unit[1], k)));
    ++alternates;
  }
  if ((int)unit_keys.size() != alternates) {
    r.fail_with("rescaled structures are not pairwise distinct");
    return r;
  }

  r.metrics["dims_checked"] = max_dim + 1;
  r.metrics["naturality_maps_exhaustive"] = exhaustive_maps;
  r.metrics["naturality_maps_sampled"] = sampled_maps;
  r.metrics["functor_pairs"] = functor_pairs;
  r.metrics["alternate_monads"] = alternates;
  return r;
}

std::vector<Mat> enumerate_linear_partitions(const VecObj& x, int max_cod,
                                             const Budget& budget) {
  require(max_cod >= 0, Errc::invalid_argument, "max_cod must be >= 0");
  StepCounter steps(budget.enumeration_steps);
  std::vector<Mat> out;
  int top = std::min(max_cod, x.dim);
  for (int k = 0; k <= top; ++k) {
    for (Mat& m : VecCat::hom(x, VecObj{x.field, k})) {
      steps.tick("linear partition enumeration");
      if (rank(m) != k) continue;
      if (rref(m) == m) out.push_back(std::move(m));
    }
  }
  return out;
}

std::optional<Mat> factor_through(const Mat& a, const Mat& b) {
  require(a.field() == b.field(), Errc::type_mismatch, "factor across different fields");
  require(a.cols() == b.cols(), Errc::mismatched_endpoints,
          "factor_through needs maps with a common source");
  require(rank(b) == b.rows(), Errc::invalid_argument,
          "factor_through target map must have full row rank");
  std::optional<Mat> ut = solve(transpose(b), transpose(a));
  if (!ut) return std::nullopt;
  Mat u = transpose(*ut);
  require(mul(u, b) == a, Errc::internal, "factorization does not recompose");
  return u;
}

DualChoice alpha_from_vector(const std::vector<std::uint8_t>& t, const VecObj& x,
                             const std::vector<Mat>& parts) {
  require((int)t.size() == x.dim, Errc::invalid_argument, "vector/space dimension mismatch");
  Mat tv = Mat::column(x.field, t);
  DualChoice ch;
  for (const Mat& p : parts) {
    Mat col = mul(p, tv);
    std::vector<std::uint8_t> v;
    for (int i = 0; i < col.rows(); ++i) v.push_back(col(i, 0));
    ch.alpha.push_back(std::move(v));
  }
  // Coherence: whenever one partition factors through another, the chosen
  // points must correspond.
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = 0; j < parts.size(); ++j) {
      std::optional<Mat> u = factor_through(parts[j], parts[i]);
      if (!u) continue;
      Mat lhs = Mat::column(x.field, ch.alpha[j]);
      Mat rhs = mul(*u, Mat::column(x.field, ch.alpha[i]));
      require(lhs == rhs, Errc::internal, "point evaluation is not coherent");
    }
  }
  return ch;
}

Report lemma42_check(Fq field, int n, const Budget& budget) {
  require(n >= 0, Errc::invalid_argument, "dimension must be >= 0");
  int top = field.q == 2 ? 3 : 2;
  require(n <= top, Errc::bound_exceeded,
          "dimension above " + std::to_string(top) + " is not supported for q=" +
              std::to_string((int)field.q));
  Report r;
  r.check = "lemma42";
  r.params["q"] = (int)field.q;
  r.params["dim"] = n;
  r.anchor_label = "Lemma 4.2";
  r.anchor_claim =
      "coherent choices of one point in every linear quotient of a finite "
      "coordinate space correspond exactly to evaluation at its points";

  VecObj x{field, n};
  std::vector<Mat> parts = enumerate_linear_partitions(x, n, budget);
  std::size_t np = parts.size();

  // fct[i][j]: the unique u with parts[j] = u * parts[i], when it exists.
  std::vector<std::vector<std::optional<Mat>>> fct(np);
  for (std::size_t i = 0; i < np; ++i) {
    fct[i].resize(np);
    for (std::size_t j = 0; j < np; ++j) fct[i][j] = factor_through(parts[j], parts[i]);
  }

  StepCounter steps(budget.enumeration_steps);
  std::vector<std::vector<std::uint8_t>> alpha(np);
  std::vector<DualChoice> found;
  long prefixes = 0;

  auto consistent = [&](std::size_t i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (fct[i][j]) {
        Mat lhs = Mat::column(field, alpha[j]);
        Mat rhs = mul(*fct[i][j], Mat::column(field, alpha[i]));
        if (lhs != rhs) return false;
      }
      if (fct[j][i]) {
        Mat lhs = Mat::column(field, alpha[i]);
        Mat rhs = mul(*fct[j][i], Mat::column(field, alpha[j]));
        if (lhs != rhs) return false;
      }
    }
    return true;
  };

  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == np) {
      found.push_back(DualChoice{alpha});
      return;
    }
    int k = parts[i].rows();
    long total = 1;
    for (int c = 0; c < k; ++c) total *= field.q;
    for (long idx = 0; idx < total; ++idx) {
      steps.tick("coherent choice enumeration");
      ++prefixes;
      std::vector<std::uint8_t> v((std::size_t)k, 0);
      long rest = idx;
      for (int c = k - 1; c >= 0; --c) {
        v[(std::size_t)c] = (std::uint8_t)(rest % field.q);
        rest /= field.q;
      }
      alpha[i] = std::move(v);
      if (consistent(i)) self(self, i + 1);
    }
  };
  rec(rec, 0);

  long expected = 1;
  for (int c = 0; c < n; ++c) expected *= field.q;

  // The found set must equal the evaluation choices exactly.
  std::set<std::string> found_keys, expected_keys;
  auto choice_key = [](const DualChoice& c) {
    std::string k;
    for (const auto& v : c.alpha) {
      for (std::uint8_t e : v) k += std::to_string((int)e) + ",";
      k += ";";
    }
    return k;
  };
  for (const DualChoice& c : found) found_keys.insert(choice_key(c));
  std::vector<std::uint8_t> t((std::size_t)n, 0);
  for (long idx = 0; idx < expected; ++idx) {
    long rest = idx;
    for (int c = n - 1; c >= 0; --c) {
      t[(std::size_t)c] = (std::uint8_t)(rest % field.q);
      rest /= field.q;
    }
    expected_keys.insert(choice_key(alpha_from_vector(t, x, parts)));
  }

  r.metrics["partitions"] = (long)np;
  r.metrics["coherent_choices"] = (long)found.size();
  r.metrics["expected_choices"] = expected;
  r.metrics["prefixes_visited"] = prefixes;
  if ((long)found.size() != expected) {
    r.fail_with("coherent choice count does not match the point count");
    return r;
  }
  if (found_keys.size() != found.size()) {
    r.fail_with("backtracking produced a duplicate choice");
    return r;
  }
  if (found_keys != expected_keys) {
    r.fail_with("coherent choices are not exactly the evaluation choices");
    return r;
  }
  return r;
}

bool is_evaluation_vector(const Mat& a, const std::vector<std::uint8_t>& x,
                          std::vector<std::uint8_t>* witness) {
  require((int)x.size() == a.cols(), Errc::invalid_argument,
          "vector does not live in the double dual of the source");
  Fq field = a.field();
  Mat y = mul(dd_on_map(a), Mat::column(field, x));
  std::optional<Mat> v = solve(dd_unit(field, a.rows()), y);
  if (!v) return false;
  if (witness) {
    witness->clear();
    for (int i = 0; i < v->rows(); ++i) witness->push_back((*v)(i, 0));
  }
  return true;
}

Report lemma45_scan(Fq field, int max_dim, ScanFunctor functor, const Budget& budget) {
  require(max_dim >= 0, Errc::invalid_argument, "max_dim must be >= 0");
  require(max_dim <= 2, Errc::bound_exceeded, "max_dim above 2 is not supported");
  Report r;
  r.check = "lemma45";
  r.params["q"] = (int)field.q;
  r.params["max_dim"] = max_dim;
  r.params["functor"] = functor == ScanFunctor::identity ? "id" : "dd";
  r.anchor_label = "Lemma 4.5";
  r.anchor_claim =
      "every family of maps into the double dual that is natural in the space "
      "is a scalar multiple of the evaluation family";

  // All candidate families (beta_d)_{d <= max_dim}.
  std::vector<std::vector<Mat>> choices;
  for (int d = 0; d <= max_dim; ++d)
    choices.push_back(VecCat::hom(VecObj{field, d}, VecObj{field, d}));

  // Naturality test maps, grouped by (src, dst).
  struct HomSet {
    int m, n;
    std::vector<Mat> maps;
  };
  std::vector<HomSet> homs;
  long nat_maps = 0;
  for (int m = 0; m <= max_dim; ++m) {
    for (int n = 0; n <= max_dim; ++n) {
      HomSet h{m, n, VecCat::hom(VecObj{field, m}, VecObj{field, n})};
      nat_maps += (long)h.maps.size();
      homs.push_back(std::move(h));
    }
  }

  StepCounter steps(budget.enumeration_steps);
  std::vector<std::size_t> pick((std::size_t)max_dim + 1, 0);
  std::vector<std::vector<Mat>> survivors;
  long candidates = 0;

  auto natural = [&](const std::vector<Mat>& beta) {
    for (const HomSet& h : homs) {
      for (const Mat& f : h.maps) {
        Mat src_side = functor == ScanFunctor::identity ? f : dd_on_map(f);
        Mat lhs = mul(beta[(std::size_t)h.n], src_side);
        Mat rhs = mul(dd_on_map(f), beta[(std::size_t)h.m]);
        if (lhs != rhs) return false;
      }
    }
    return true;
  };

  while (true) {
    steps.tick("naturality scan");
    ++candidates;
    std::vector<Mat> beta;
    for (int d = 0; d <= max_dim; ++d) beta.push_back(choices[(std::size_t)d][pick[(std::size_t)d]]);
    if (natural(beta)) survivors.push_back(std::move(beta));
    int i = max_dim;
    while (i >= 0 && pick[(std::size_t)i] + 1 == choices[(std::size_t)i].size()) {
      pick[(std::size_t)i] = 0;
      --i;
    }
    if (i < 0) break;
    ++pick[(std::size_t)i];
  }

  // Expected survivors: the scalar multiples of the unit family (the zero
  // family included). At max_dim 0 all scalars collapse to one family.
  std::set<std::string> expected_keys;
  for (std::uint8_t k = 0; k < field.q; ++k) {
    std::vector<Mat> fam;
    for (int d = 0; d <= max_dim; ++d) fam.push_back(scaled(dd_unit(field, d), k));
    expected_keys.insert(family_key(fam));
  }
  std::set<std::string> got_keys;
  for (const auto& fam : survivors) got_keys.insert(family_key(fam));

  r.metrics["candidates"] = candidates;
  r.metrics["survivors"] = (long)survivors.size();
  r.metrics["expected_survivors"] = (long)expected_keys.size();
  r.metrics["naturality_maps"] = nat_maps;
  if (got_keys != expected_keys) {
    ordered_json cx;
    cx["survivor_count"] = (long)survivors.size();
    if (!survivors.empty()) cx["first_survivor"] = mat_rows_json(survivors[0].back());
    r.fail_with("natural families are not exactly the scalar multiples of the unit", cx);
    return r;
  }
  return r;
}

Prop43Build build_prop43_diagram(Fq field, int n) {
  require(n >= 2, Errc::invalid_argument, "need at least two coordinates");
  require(n <= 4, Errc::bound_exceeded, "size above 4 is not supported");
  Prop43Build b;
  b.n = n;
  Diagram<VecCat>& d = b.diagram;
  for (int x = 0; x < n; ++x) {
    d.shape.nodes.push_back("K" + std::to_string(x));
    d.objects.push_back(VecObj{field, 1});
  }
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      d.shape.nodes.push_back("L" + std::to_string(x) + "_" + std::to_string(y));
      d.objects.push_back(VecObj{field, 2});
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      std::string lx = std::to_string(x), ly = std::to_string(y);
      std::string lnode = "L" + lx + "_" + ly;
      d.shape.edges.push_back(ShapeEdge{"a" + lx + "_" + ly + "_to_" + lx, lnode, "K" + lx});
      d.morphisms.push_back(Mat::from_rows(field, {{1, 0}}));
      d.shape.edges.push_back(ShapeEdge{"a" + lx + "_" + ly + "_to_" + ly, lnode, "K" + ly});
      d.morphisms.push_back(Mat::from_rows(field, {{0, 1}}));
    }
  }
  d.validate();

  b.cone.apex = VecObj{field, n};
  for (int x = 0; x < n; ++x) {
    Mat leg(field, 1, n);
    leg(0, x) = 1;
    b.cone.legs.push_back(std::move(leg));
  }
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      Mat leg(field, 2, n);
      leg(0, x) = 1;
      leg(1, y) = 1;
      b.cone.legs.push_back(std::move(leg));
    }
  }
  return b;
}

Report prop43_check(Fq field, int n, const Budget& budget) {
  Report r;
  r.check = "prop43";
  r.params["q"] = (int)field.q;
  r.params["n"] = n;
  r.anchor_label = "Prop 4.3";
  r.anchor_claim =
      "a finite coordinate space is the limit of its diagram of coordinate "
      "lines and planes, via the coordinate projections";

  Prop43Build b = build_prop43_diagram(field, n);
  r.metrics["nodes"] = (long)b.diagram.shape.nodes.size();
  r.metrics["edges"] = (long)b.diagram.shape.edges.size();

  std::string why;
  if (!check_cone(b.diagram, b.cone, &why)) {
    r.fail_with("constructed legs do not form a cone: " + why);
    return r;
  }
  VecLimit lim = compute_limit(b.diagram, budget);
  r.metrics["carrier_dim"] = lim.carrier.dim;
  r.metrics["expected_dim"] = n;
  if (lim.carrier.dim != n) {
    r.fail_with("limit dimension does not match the space");
    return r;
  }
  Mat med = mediating_morphism(b.diagram, lim, b.cone);
  if (!is_invertible(med)) {
    r.fail_with("mediating morphism is not invertible");
    return r;
  }
  return r;
}

}  // namespace catlim
