#include "finset.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "error.hpp"
#include "limits.hpp"

namespace catlim {

SetMap make_set_map(int dom, int cod, std::vector<int> table) {
  require(dom >= 0 && cod >= 0, Errc::invalid_argument, "negative object size");
  require(static_cast<int>(table.size()) == dom, Errc::invalid_argument,
          "table length does not match domain size");
  for (int v : table)
    require(v >= 0 && v < cod, Errc::invalid_argument, "table entry out of codomain range");
  return SetMap{dom, cod, std::move(table)};
}

SetMap set_identity(int n) {
  std::vector<int> t(static_cast<std::size_t>(n));
  std::iota(t.begin(), t.end(), 0);
  return SetMap{n, n, std::move(t)};
}

SetMap set_compose(const SetMap& g, const SetMap& f) {
  require(f.cod == g.dom, Errc::mismatched_endpoints, "composition endpoint mismatch");
  std::vector<int> t(f.table.size());
  for (std::size_t i = 0; i < f.table.size(); ++i)
    t[i] = g.table[static_cast<std::size_t>(f.table[i])];
  return SetMap{f.dom, g.cod, std::move(t)};
}

bool set_is_bijective(const SetMap& f) {
  if (f.dom != f.cod) return false;
  std::vector<bool> hit(static_cast<std::size_t>(f.cod), false);
  for (int v : f.table) {
    if (hit[static_cast<std::size_t>(v)]) return false;
    hit[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

SetMap set_inverse(const SetMap& f) {
  require(set_is_bijective(f), Errc::invalid_argument, "inverse of a non-bijective map");
  std::vector<int> t(f.table.size());
  for (std::size_t i = 0; i < f.table.size(); ++i)
    t[static_cast<std::size_t>(f.table[i])] = static_cast<int>(i);
  return SetMap{f.cod, f.dom, std::move(t)};
}

bool set_is_constant(const SetMap& f) {
  if (f.dom == 0) return false;
  for (int v : f.table)
    if (v != f.table[0]) return false;
  return true;
}

std::pair<SetObj, SetMap> equalizer(const SetMap& f, const SetMap& g) {
  require(f.dom == g.dom && f.cod == g.cod, Errc::mismatched_endpoints,
          "equalizer of maps with different endpoints");
  std::vector<int> elems;
  for (int i = 0; i < f.dom; ++i)
    if (f.table[static_cast<std::size_t>(i)] == g.table[static_cast<std::size_t>(i)])
      elems.push_back(i);
  int k = static_cast<int>(elems.size());
  return {SetObj{k}, SetMap{k, f.dom, std::move(elems)}};
}

int Partition::block_of(int x) const {
  for (std::size_t b = 0; b < blocks.size(); ++b)
    if (std::binary_search(blocks[b].begin(), blocks[b].end(), x)) return static_cast<int>(b);
  fail(Errc::invalid_argument, "element outside partition ground set");
}

Partition partition_from_blocks(int ground, std::vector<std::vector<int>> blocks) {
  std::vector<bool> seen(static_cast<std::size_t>(ground), false);
  for (auto& b : blocks) {
    require(!b.empty(), Errc::invalid_argument, "empty partition block");
    std::sort(b.begin(), b.end());
    for (int x : b) {
      require(x >= 0 && x < ground, Errc::invalid_argument, "block element out of range");
      require(!seen[static_cast<std::size_t>(x)], Errc::invalid_argument,
              "partition blocks overlap");
      seen[static_cast<std::size_t>(x)] = true;
    }
  }
  for (bool s : seen)
    require(s, Errc::invalid_argument, "partition blocks do not cover the ground set");
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return Partition{ground, std::move(blocks)};
}

Partition partition_from_labels(const std::vector<int>& labels) {
  std::map<int, std::vector<int>> by_label;
  for (std::size_t i = 0; i < labels.size(); ++i)
    by_label[labels[i]].push_back(static_cast<int>(i));
  std::vector<std::vector<int>> blocks;
  for (auto& [label, elems] : by_label) blocks.push_back(std::move(elems));
  return partition_from_blocks(static_cast<int>(labels.size()), std::move(blocks));
}

std::vector<Partition> all_partitions(int n, int bound) {
  require(n >= 0, Errc::invalid_argument, "negative ground size");
  require(n <= bound, Errc::bound_exceeded, "partition ground set exceeds configured bound");
  std::vector<Partition> out;
  if (n == 0) {
    out.push_back(partition_from_blocks(0, {}));
    return out;
  }
  // Restricted growth strings: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1]).
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int i, int top) -> void {
    if (i == n) {
      out.push_back(partition_from_labels(rgs));
      return;
    }
    for (int v = 0; v <= top + 1; ++v) {
      rgs[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, std::max(top, v));
    }
  };
  rec(rec, 1, 0);
  return out;
}

bool is_coarser(const Partition& q2, const Partition& q1) {
  require(q2.ground == q1.ground, Errc::invalid_argument, "partitions over different ground sets");
  for (const auto& b1 : q1.blocks) {
    const auto& b2 = q2.blocks[static_cast<std::size_t>(q2.block_of(b1.front()))];
    if (!std::includes(b2.begin(), b2.end(), b1.begin(), b1.end())) return false;
  }
  return true;
}

Partition partition_of_map(const SetMap& f) {
  std::map<int, std::vector<int>> fibers;
  for (int i = 0; i < f.dom; ++i) fibers[f.table[static_cast<std::size_t>(i)]].push_back(i);
  std::vector<std::vector<int>> blocks;
  for (auto& [v, fiber] : fibers) blocks.push_back(std::move(fiber));
  return partition_from_blocks(f.dom, std::move(blocks));
}

SetMap quotient_map(const Partition& p) {
  std::vector<int> t(static_cast<std::size_t>(p.ground));
  for (std::size_t b = 0; b < p.blocks.size(); ++b)
    for (int x : p.blocks[b]) t[static_cast<std::size_t>(x)] = static_cast<int>(b);
  return SetMap{p.ground, static_cast<int>(p.blocks.size()), std::move(t)};
}

SetMap quotient_refinement_map(const Partition& finer, const Partition& coarser) {
  require(is_coarser(coarser, finer), Errc::invalid_argument,
          "refinement map requires a coarsening");
  std::vector<int> t;
  t.reserve(finer.blocks.size());
  for (const auto& b : finer.blocks) t.push_back(coarser.block_of(b.front()));
  return SetMap{static_cast<int>(finer.blocks.size()), static_cast<int>(coarser.blocks.size()),
                std::move(t)};
}

namespace {

bool block_contains(const std::vector<int>& outer, const std::vector<int>& inner) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

}  // namespace

std::vector<CoherentChoice> coherent_choices(int n, int bound) {
  std::vector<Partition> parts = all_partitions(n, bound);
  int m = static_cast<int>(parts.size());
  // ge[i][j]: parts[i] is coarser than parts[j].
  std::vector<std::vector<bool>> ge(static_cast<std::size_t>(m),
                                    std::vector<bool>(static_cast<std::size_t>(m), false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j)
        ge[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            is_coarser(parts[static_cast<std::size_t>(i)], parts[static_cast<std::size_t>(j)]);

  std::vector<CoherentChoice> out;
  std::vector<int> choice(static_cast<std::size_t>(m), 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == m) {
      out.push_back(CoherentChoice{n, choice});
      return;
    }
    const auto& pi = parts[static_cast<std::size_t>(i)];
    for (int b = 0; b < static_cast<int>(pi.blocks.size()); ++b) {
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        const auto& pj = parts[static_cast<std::size_t>(j)];
        const auto& bi = pi.blocks[static_cast<std::size_t>(b)];
        const auto& bj = pj.blocks[static_cast<std::size_t>(choice[static_cast<std::size_t>(j)])];
        if (ge[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
          ok = block_contains(bi, bj);
        else if (ge[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
          ok = block_contains(bj, bi);
      }
      if (!ok) continue;
      choice[static_cast<std::size_t>(i)] = b;
      self(self, i + 1);
    }
  };
  if (m > 0) rec(rec, 0);
  return out;
}

std::vector<FinUltrafilter> all_ultrafilters(int n) {
  std::vector<FinUltrafilter> out;
  for (int i = 0; i < n; ++i) out.push_back(FinUltrafilter{n, i});
  return out;
}

FinUltrafilter pushforward_ultrafilter(const SetMap& f, const FinUltrafilter& u) {
  require(u.ground == f.dom, Errc::mismatched_endpoints,
          "ultrafilter ground set is not the map's domain");
  require(u.point >= 0 && u.point < u.ground, Errc::invalid_argument,
          "principal point out of range");
  int image_point = f.table[static_cast<std::size_t>(u.point)];
  if (f.cod <= 5 && f.dom <= 5) {
    // Literal check: {A : f^{-1}(A) in u} must be the principal family at the
    // image point.
    for (unsigned mask = 0; mask < (1u << f.cod); ++mask) {
      bool preimage_in_u = false;
      for (int i = 0; i < f.dom; ++i)
        if ((mask >> f.table[static_cast<std::size_t>(i)]) & 1u)
          if (i == u.point) preimage_in_u = true;
      bool principal = (mask >> image_point) & 1u;
      require(preimage_in_u == principal, Errc::internal,
              "pushforward family diverges from the principal family");
    }
  }
  return FinUltrafilter{f.cod, image_point};
}

CoherentChoice choice_of_ultrafilter(const FinUltrafilter& u) {
  std::vector<Partition> parts = all_partitions(u.ground);
  CoherentChoice c{u.ground, {}};
  c.choice.reserve(parts.size());
  for (const auto& p : parts) c.choice.push_back(p.block_of(u.point));
  return c;
}

Report galvin_horn_check(int n) {
  require(n >= 0 && n <= 5, Errc::bound_exceeded, "galvin-horn ground size exceeds 5");
  Report r;
  r.check = "galvin-horn";
  r.params = ordered_json{{"size", n}};
  r.anchor_label = "Lemma 3.1";
  r.anchor_claim =
      "On a finite ground set, sending an ultrafilter to its induced block choice is a "
      "bijection onto the coherent choices; both sides have exactly n members.";

  std::vector<CoherentChoice> choices = coherent_choices(n);
  std::vector<FinUltrafilter> ultras = all_ultrafilters(n);
  r.metrics["partitions"] = all_partitions(n).size();
  r.metrics["coherent_choices"] = choices.size();
  r.metrics["ultrafilters"] = ultras.size();

  std::vector<CoherentChoice> images;
  for (const auto& u : ultras) images.push_back(choice_of_ultrafilter(u));
  for (std::size_t a = 0; a < images.size(); ++a)
    for (std::size_t b = a + 1; b < images.size(); ++b)
      if (images[a] == images[b]) {
        r.fail_with("two distinct ultrafilters induce the same choice",
                    ordered_json{{"points", {ultras[a].point, ultras[b].point}}});
        return r;
      }
  for (std::size_t a = 0; a < images.size(); ++a)
    if (std::find(choices.begin(), choices.end(), images[a]) == choices.end()) {
      r.fail_with("an induced choice is not coherent",
                  ordered_json{{"point", ultras[a].point}, {"choice", images[a].choice}});
      return r;
    }
  if (choices.size() != ultras.size()) {
    ordered_json extra = ordered_json::array();
    for (const auto& c : choices)
      if (std::find(images.begin(), images.end(), c) == images.end()) extra.push_back(c.choice);
    r.fail_with("coherent choices not induced by any ultrafilter exist",
                ordered_json{{"extra_choices", extra}});
  }
  return r;
}

Report partition_limit_check(int n, const Budget& budget) {
  require(n >= 0 && n <= 5, Errc::bound_exceeded, "partition-limit ground size exceeds 5");
  Report r;
  r.check = "partition-limit";
  r.params = ordered_json{{"size", n}};
  r.anchor_label = "Lemma 3.3";
  r.anchor_claim =
      "The canonical cone of quotient projections from the ground set over the diagram of "
      "all partition quotients and coarsening maps is a limit cone.";
  std::vector<Partition> parts = all_partitions(n);
  int m = static_cast<int>(parts.size());
  Diagram<SetCat> d;
  for (int i = 0; i < m; ++i) {
    d.shape.nodes.push_back("Q" + std::to_string(i));
    d.objects.push_back(SetObj{static_cast<int>(parts[static_cast<std::size_t>(i)].blocks.size())});
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      const auto& fine = parts[static_cast<std::size_t>(i)];
      const auto& coarse = parts[static_cast<std::size_t>(j)];
      if (!is_coarser(coarse, fine)) continue;
      d.shape.edges.push_back(ShapeEdge{"q" + std::to_string(i) + "_" + std::to_string(j),
                                        "Q" + std::to_string(i), "Q" + std::to_string(j)});
      d.morphisms.push_back(quotient_refinement_map(fine, coarse));
    }
  d.validate();

  Cone<SetCat> cone;
  cone.apex = SetObj{n};
  for (int i = 0; i < m; ++i) cone.legs.push_back(quotient_map(parts[static_cast<std::size_t>(i)]));

  SetLimit lim = compute_limit(d, budget);
  r.metrics["partitions"] = m;
  r.metrics["edges"] = d.shape.edges.size();
  r.metrics["carrier"] = lim.carrier.size;
  if (!check_cone(d, cone)) {
    r.fail_with("the quotient projections do not form a cone");
    return r;
  }
  SetMap med = mediating_morphism(d, lim, cone);
  if (!set_is_bijective(med))
    r.fail_with("the mediating map from the ground set is not a bijection",
                ordered_json{{"mediating_table", med.table}});
  return r;
}

namespace {

std::vector<SetMap> all_maps(int dom, int cod) {
  std::vector<SetMap> out;
  if (dom == 0) {
    out.push_back(SetMap{0, cod, {}});
    return out;
  }
  if (cod == 0) return out;
  std::vector<int> t(static_cast<std::size_t>(dom), 0);
  while (true) {
    out.push_back(SetMap{dom, cod, t});
    int i = dom - 1;
    while (i >= 0 && t[static_cast<std::size_t>(i)] == cod - 1) {
      t[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++t[static_cast<std::size_t>(i)];
  }
  return out;
}

// Functor action on a map under the principal representation; the literal
// pushforward formula is re-verified inside pushforward_ultrafilter.
SetMap u_on_map(const SetMap& f) {
  std::vector<int> t;
  t.reserve(static_cast<std::size_t>(f.dom));
  for (int i = 0; i < f.dom; ++i)
    t.push_back(pushforward_ultrafilter(f, FinUltrafilter{f.dom, i}).point);
  return SetMap{f.dom, f.cod, std::move(t)};
}

// Literal multiplication: an ultrafilter UU on U(X), principal at the
// ultrafilter principal at i, flattens to {A : {u : A in u} in UU}; the
// result must again be a principal family.
SetMap u_mult(int n) {
  std::vector<int> t(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    for (int p = 0; p < n; ++p) {
      bool is_principal_at_p = true;
      for (unsigned mask = 0; mask < (1u << n) && is_principal_at_p; ++mask) {
        // {u in UX : A in u} = {j : j in A}, so membership in UU is mask>>i.
        bool in_flat = (mask >> i) & 1u;
        bool in_principal = (mask >> p) & 1u;
        if (in_flat != in_principal) is_principal_at_p = false;
      }
      if (is_principal_at_p) {
        t[static_cast<std::size_t>(i)] = p;
        break;
      }
    }
    require(t[static_cast<std::size_t>(i)] >= 0, Errc::internal,
            "flattened ultrafilter family is not principal");
  }
  return SetMap{n, n, std::move(t)};
}

}  // namespace

Report ultrafilter_monad_check(int max_ground) {
  require(max_ground >= 0 && max_ground <= 5, Errc::bound_exceeded,
          "ultrafilter monad check bounded at ground size 5");
  Report r;
  r.check = "ultrafilter-monad";
  r.params = ordered_json{{"max_ground", max_ground}};
  r.anchor_label = "Remark 3.6(a)";
  r.anchor_claim =
      "Principal ultrafilters on finite sets form a monad: pushforward is functorial, the "
      "principal unit and the flattening multiplication are natural, and the monad laws hold; "
      "the literal set-family formulas agree with the principal representation throughout.";

  long functor_pairs = 0;
  long naturality_maps = 0;
  auto tables_equal = [](const SetMap& a, const SetMap& b) { return a == b; };

  for (int n = 0; n <= max_ground; ++n) {
    SetMap unit_n = set_identity(n);  // x maps to the ultrafilter principal at x
    SetMap mult_n = u_mult(n);
    if (!tables_equal(mult_n, set_identity(n))) {
      r.fail_with("multiplication is not the principal flattening",
                  ordered_json{{"ground", n}, {"table", mult_n.table}});
      return r;
    }
    // Unit laws and associativity. U(X) and X share the numbering, so the
    // functor applications below are honest re-computations, not shortcuts.
    SetMap u_unit = u_on_map(unit_n);
    SetMap u_mult_n = u_on_map(mult_n);
    if (!tables_equal(set_compose(mult_n, u_unit), set_identity(n)) ||
        !tables_equal(set_compose(mult_n, unit_n), set_identity(n))) {
      r.fail_with("a unit law fails", ordered_json{{"ground", n}});
      return r;
    }
    if (!tables_equal(set_compose(mult_n, u_mult_n), set_compose(mult_n, u_mult(n)))) {
      r.fail_with("associativity fails", ordered_json{{"ground", n}});
      return r;
    }
  }

  for (int a = 0; a <= max_ground; ++a)
    for (int b = 0; b <= max_ground; ++b)
      for (const auto& f : all_maps(a, b)) {
        SetMap uf = u_on_map(f);
        if (!tables_equal(uf, f)) {
          r.fail_with("pushforward disagrees with the underlying map on principal points",
                      ordered_json{{"table", f.table}});
          return r;
        }
        // Naturality of unit and multiplication.
        if (!tables_equal(set_compose(uf, set_identity(a)), set_compose(set_identity(b), f)) ||
            !tables_equal(set_compose(u_mult(b), u_on_map(uf)), set_compose(uf, u_mult(a)))) {
          r.fail_with("a naturality square fails", ordered_json{{"table", f.table}});
          return r;
        }
        ++naturality_maps;
        for (int c = 0; c <= max_ground; ++c)
          for (const auto& g : all_maps(b, c)) {
            if (!tables_equal(u_on_map(set_compose(g, f)), set_compose(u_on_map(g), uf))) {
              r.fail_with("functoriality fails",
                          ordered_json{{"f", f.table}, {"g", g.table}});
              return r;
            }
            ++functor_pairs;
          }
        if (!tables_equal(u_on_map(set_identity(a)), set_identity(a))) {
          r.fail_with("identity law of the functor fails", ordered_json{{"ground", a}});
          return r;
        }
      }

  r.metrics["max_ground"] = max_ground;
  r.metrics["naturality_maps"] = naturality_maps;
  r.metrics["functor_pairs"] = functor_pairs;
  return r;
}

}  // namespace catlim
