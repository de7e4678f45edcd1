#include "codensity.hpp"

#include <map>

#include "finset.hpp"
#include "finvec.hpp"

namespace catlim {

namespace {

const char* kUnitNote =
    "unit convention: composing each projection with the unit returns that "
    "node's defining morphism (an identity-map reading does not typecheck and "
    "is not used)";

ordered_json table_json(const SetMap& f) {
  ordered_json j;
  j["dom"] = f.dom;
  j["cod"] = f.cod;
  j["table"] = f.table;
  return j;
}

}  // namespace

std::vector<SetObj> set_probes(int max_size) {
  require(max_size >= 1, Errc::invalid_argument, "probe bound must be >= 1");
  std::vector<SetObj> out;
  for (int s = 1; s <= max_size; ++s) out.push_back(SetObj{s});
  return out;
}

std::vector<VecObj> vec_probes(Fq field, int max_dim) {
  require(max_dim >= 0, Errc::invalid_argument, "probe bound must be >= 0");
  std::vector<VecObj> out;
  for (int d = 0; d <= max_dim; ++d) out.push_back(VecObj{field, d});
  return out;
}

Report codensity_set_report(int size, int probe_max, const Budget& budget) {
  require(size >= 0, Errc::invalid_argument, "size must be >= 0");
  require(size <= 4, Errc::bound_exceeded, "size above 4 is not supported");
  require(probe_max >= 1 && probe_max <= 3, Errc::invalid_argument,
          "probe bound must be between 1 and 3");
  Report r;
  r.check = "codensity-set";
  r.params["size"] = size;
  r.params["probe_max"] = probe_max;
  r.anchor_label = "Cor 3.7";
  r.anchor_claim =
      "with set probes of size up to three, the codensity value of a finite "
      "set is the set itself via the unit, and the action on maps is the "
      "ultrafilter pushforward";
  r.notes.push_back(kUnitNote);

  std::vector<SetObj> probes = set_probes(probe_max);
  std::map<int, CodensityValue<SetCat>> tv;
  tv.emplace(size, codensity_value<SetCat>(SetObj{size}, probes, budget));
  const CodensityValue<SetCat>& tk = tv.at(size);
  r.metrics["comma_nodes"] = (long)tk.comma.gs.size();
  r.metrics["comma_edges"] = (long)tk.comma.diagram.morphisms.size();
  r.metrics["carrier"] = tk.lim.carrier.size;

  if (probe_max < 3) {
    r.notes.push_back(
        "probe bound below three: carrier recorded without an isomorphism claim");
    r.metrics["unit_bijective"] = set_is_bijective(tk.unit);
    return r;
  }

  if (tk.lim.carrier.size != size) {
    r.fail_with("carrier size does not match the set");
    return r;
  }
  if (!set_is_bijective(tk.unit)) {
    r.fail_with("unit is not a bijection");
    return r;
  }

  // Pushforward agreement: under the unit identification, T(f) sends the
  // point x to the point of the pushed-forward principal ultrafilter.
  long checked_maps = 0;
  for (int lsize = 0; lsize <= 4; ++lsize) {
    if (!tv.count(lsize))
      tv.emplace(lsize, codensity_value<SetCat>(SetObj{lsize}, probes, budget));
    const CodensityValue<SetCat>& tl = tv.at(lsize);
    if (tl.lim.carrier.size != lsize || !set_is_bijective(tl.unit)) {
      r.fail_with("carrier of a target instance is not the set itself (size " +
                  std::to_string(lsize) + ")");
      return r;
    }
    for (const SetMap& f : SetCat::hom(SetObj{size}, SetObj{lsize})) {
      SetMap tf = codensity_on_map(tk, tl, f);
      for (int x = 0; x < size; ++x) {
        FinUltrafilter pushed = pushforward_ultrafilter(f, FinUltrafilter{size, x});
        int lhs = tf.table[(std::size_t)tk.unit.table[(std::size_t)x]];
        int rhs = tl.unit.table[(std::size_t)pushed.point];
        if (lhs != rhs) {
          ordered_json cx;
          cx["map"] = table_json(f);
          cx["point"] = x;
          r.fail_with("action on a map disagrees with the ultrafilter pushforward", cx);
          return r;
        }
      }
      ++checked_maps;
    }
  }
  r.metrics["pushforward_maps"] = checked_maps;
  return r;
}

Report codensity_vec_report(Fq field, int dim, int probe_max, const Budget& budget) {
  require(dim >= 0, Errc::invalid_argument, "dim must be >= 0");
  require(dim <= 3, Errc::bound_exceeded, "dim above 3 is not supported");
  require(probe_max >= 0 && probe_max <= 3, Errc::invalid_argument,
          "probe bound must be between 0 and 3");
  Report r;
  r.check = "codensity-vec";
  r.params["q"] = (int)field.q;
  r.params["dim"] = dim;
  r.params["probe_max"] = probe_max;
  r.anchor_label = "Cor 4.8";
  r.anchor_claim =
      "with probe spaces of dimension up to the space's own, the codensity "
      "value of a finite-dimensional space is its double dual: projections "
      "match double-dualized nodes and the unit matches evaluation";
  r.notes.push_back(kUnitNote);

  std::vector<VecObj> probes = vec_probes(field, probe_max);
  CodensityValue<VecCat> tk = codensity_value<VecCat>(VecObj{field, dim}, probes, budget);
  r.metrics["comma_nodes"] = (long)tk.comma.gs.size();
  r.metrics["comma_edges"] = (long)tk.comma.diagram.morphisms.size();
  r.metrics["carrier_dim"] = tk.lim.carrier.dim;
  r.metrics["double_dual_dim"] = dim;
  if (probe_max < dim)
    r.notes.push_back(
        "probe bound below the space dimension: the comparison map cannot be "
        "invertible, so a failure here is the expected outcome");

  // psi: X** -> T(X), mediating the cone whose leg at node g is g**.
  Cone<VecCat> cone;
  cone.apex = VecObj{field, dim};
  for (const Mat& g : tk.comma.gs) cone.legs.push_back(dd_on_map(g));
  std::string why;
  if (!check_cone(tk.comma.diagram, cone, &why)) {
    r.fail_with("double-dualized legs do not form a cone: " + why);
    return r;
  }
  Mat psi = mediating_morphism(tk.comma.diagram, tk.lim, cone);
  for (int i = 0; i < (int)tk.comma.gs.size(); ++i) {
    if (mul(limit_projection(tk.lim, i), psi) != dd_on_map(tk.comma.gs[(std::size_t)i])) {
      r.fail_with("projection " + std::to_string(i) +
                  " does not match the double-dualized node");
      return r;
    }
  }
  if (!is_invertible(psi)) {
    r.fail_with("comparison map between the double dual and the carrier is not invertible");
    return r;
  }
  if (tk.unit != mul(psi, dd_unit(field, dim))) {
    r.fail_with("unit does not match evaluation under the comparison map");
    return r;
  }
  return r;
}

Report codensity_set_laws_report(int max_size, int probe_max, const Budget& budget) {
  require(max_size >= 0 && max_size <= 2, Errc::invalid_argument,
          "max_size must be between 0 and 2");
  require(probe_max >= 1 && probe_max <= 2, Errc::invalid_argument,
          "probe bound must be 1 or 2");
  Report r;
  r.check = "codensity-set-laws";
  r.params["max_size"] = max_size;
  r.params["probe_max"] = probe_max;
  r.anchor_label = "Remark 3.6(b)";
  r.anchor_claim =
      "the codensity construction on sets carries a monad structure: unit and "
      "multiplication satisfy the unit and associativity laws";
  r.notes.push_back(kUnitNote);

  std::vector<SetObj> probes = set_probes(probe_max);
  long instances = 0;
  for (int s = 0; s <= max_size; ++s) {
    auto t1 = codensity_value<SetCat>(SetObj{s}, probes, budget);
    auto t2 = codensity_value<SetCat>(t1.lim.carrier, probes, budget);
    auto t3 = codensity_value<SetCat>(t2.lim.carrier, probes, budget);
    SetMap mu1 = codensity_mult(t1, t2);
    SetMap mu2 = codensity_mult(t2, t3);
    SetMap id_tk = set_identity(t1.lim.carrier.size);
    if (set_compose(mu1, t2.unit) != id_tk) {
      r.fail_with("left unit law fails at size " + std::to_string(s));
      return r;
    }
    SetMap t_eta = codensity_on_map(t1, t2, t1.unit);
    if (set_compose(mu1, t_eta) != id_tk) {
      r.fail_with("right unit law fails at size " + std::to_string(s));
      return r;
    }
    SetMap t_mu = codensity_on_map(t3, t2, mu1);
    if (set_compose(mu1, t_mu) != set_compose(mu1, mu2)) {
      r.fail_with("associativity fails at size " + std::to_string(s));
      return r;
    }
    ++instances;
  }
  r.metrics["instances"] = instances;
  return r;
}

Report codensity_vec_mult_report(Fq field, int max_dim, const Budget& budget) {
  require(max_dim >= 0 && max_dim <= 2, Errc::invalid_argument,
          "max_dim must be between 0 and 2");
  Report r;
  r.check = "codensity-vec-mu";
  r.params["q"] = (int)field.q;
  r.params["max_dim"] = max_dim;
  r.anchor_label = "Cor 4.8";
  r.anchor_claim =
      "the multiplication derived from the codensity limit satisfies the monad "
      "laws and agrees with the dual of the unit at the dual space, under the "
      "identification of the codensity value with the double dual";
  r.notes.push_back(kUnitNote);

  std::vector<VecObj> probes = vec_probes(field, std::max(1, max_dim));
  long instances = 0;
  for (int d = 0; d <= max_dim; ++d) {
    auto t1 = codensity_value<VecCat>(VecObj{field, d}, probes, budget);
    auto t2 = codensity_value<VecCat>(t1.lim.carrier, probes, budget);
    auto t3 = codensity_value<VecCat>(t2.lim.carrier, probes, budget);
    Mat mu1 = codensity_mult(t1, t2);
    Mat mu2 = codensity_mult(t2, t3);
    Mat id_tk = Mat::identity(field, t1.lim.carrier.dim);
    if (mul(mu1, t2.unit) != id_tk) {
      r.fail_with("left unit law fails at dim " + std::to_string(d));
      return r;
    }
    Mat t_eta = codensity_on_map(t1, t2, t1.unit);
    if (mul(mu1, t_eta) != id_tk) {
      r.fail_with("right unit law fails at dim " + std::to_string(d));
      return r;
    }
    Mat t_mu = codensity_on_map(t3, t2, mu1);
    if (mul(mu1, t_mu) != mul(mu1, mu2)) {
      r.fail_with("associativity fails at dim " + std::to_string(d));
      return r;
    }

    // Cross-validation against the dual construction: transport mu along
    // the comparison isomorphisms and compare with the dualized unit.
    auto psi_of = [&](const CodensityValue<VecCat>& t, int n) {
      Cone<VecCat> cone;
      cone.apex = VecObj{field, n};
      for (const Mat& g : t.comma.gs) cone.legs.push_back(dd_on_map(g));
      return mediating_morphism(t.comma.diagram, t.lim, cone);
    };
    Mat psi_x = psi_of(t1, d);
    Mat psi_tx = psi_of(t2, t1.lim.carrier.dim);
    std::optional<Mat> phi_x = inverse(psi_x);
    std::optional<Mat> phi_tx = inverse(psi_tx);
    if (!phi_x || !phi_tx) {
      r.fail_with("comparison map is not invertible at dim " + std::to_string(d));
      return r;
    }
    Mat lhs = mul(*phi_x, mu1);
    Mat rhs = mul(dd_mult(field, d), mul(dd_on_map(*phi_x), *phi_tx));
    if (lhs != rhs) {
      r.fail_with("codensity multiplication disagrees with the dualized unit at dim " +
                  std::to_string(d));
      return r;
    }
    ++instances;
  }
  r.metrics["instances"] = instances;
  return r;
}

}  // namespace catlim
