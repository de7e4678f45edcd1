#pragma once

#include <set>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "budget.hpp"
#include "category.hpp"
#include "diagram.hpp"
#include "error.hpp"
#include "limits.hpp"
#include "report.hpp"

namespace catlim {

// Skeletal probe objects: one set per size 1..max_size (the empty set adds
// nothing for nonempty test objects), one space per dim 0..max_dim.
std::vector<SetObj> set_probes(int max_size);
std::vector<VecObj> vec_probes(Fq field, int max_dim);

// The diagram of all morphisms from a fixed object into the probes: one
// node per such morphism g (carrying the probe as its object), one edge
// g -> h.g for every probe morphism h; duplicate (src, dst, h) merged.
template <class Cat>
struct Comma {
  std::vector<typename Cat::Obj> probes;
  Diagram<Cat> diagram;
  std::vector<typename Cat::Mor> gs;  // node -> its defining morphism
  std::vector<int> probe_of;          // node -> probe index
  std::unordered_map<std::string, int> index;

  int node_of(const typename Cat::Mor& g) const {
    auto it = index.find(Cat::mor_key(g));
    require(it != index.end(), Errc::internal, "morphism is not a comma node");
    return it->second;
  }
};

template <class Cat>
Comma<Cat> build_comma(const typename Cat::Obj& k,
                       const std::vector<typename Cat::Obj>& probes,
                       const Budget& budget = {}) {
  Comma<Cat> c;
  c.probes = probes;
  StepCounter steps(budget.enumeration_steps);
  for (std::size_t pi = 0; pi < probes.size(); ++pi) {
    for (auto& g : Cat::hom(k, probes[pi])) {
      steps.tick("comma node enumeration");
      int idx = static_cast<int>(c.gs.size());
      require(idx < budget.comma_node_budget, Errc::budget_exceeded,
              "comma diagram node budget exceeded");
      c.diagram.shape.nodes.push_back("g" + std::to_string(idx));
      c.diagram.objects.push_back(probes[pi]);
      c.index.emplace(Cat::mor_key(g), idx);
      c.gs.push_back(std::move(g));
      c.probe_of.push_back(static_cast<int>(pi));
    }
  }
  std::set<std::tuple<int, int, std::string>> seen;
  for (int i = 0; i < static_cast<int>(c.gs.size()); ++i) {
    const auto& src_probe = c.probes[static_cast<std::size_t>(c.probe_of[static_cast<std::size_t>(i)])];
    for (std::size_t pj = 0; pj < probes.size(); ++pj) {
      for (const auto& h : Cat::hom(src_probe, probes[pj])) {
        steps.tick("comma edge enumeration");
        int j = c.node_of(Cat::compose(h, c.gs[static_cast<std::size_t>(i)]));
        if (!seen.insert({i, j, Cat::mor_key(h)}).second) continue;
        c.diagram.shape.edges.push_back(
            ShapeEdge{"e" + std::to_string(c.diagram.shape.edges.size()),
                      c.diagram.shape.nodes[static_cast<std::size_t>(i)],
                      c.diagram.shape.nodes[static_cast<std::size_t>(j)]});
        c.diagram.morphisms.push_back(h);
      }
    }
  }
  c.diagram.validate();
  return c;
}

// The codensity value at one object: the limit of the comma diagram plus
// the unit, whose defining property is that the projection at each node
// gives back that node's morphism.
template <class Cat>
struct CodensityValue {
  typename Cat::Obj k;
  Comma<Cat> comma;
  LimitOf<Cat> lim;
  typename Cat::Mor unit;  // k -> carrier
};

template <class Cat>
CodensityValue<Cat> codensity_value(const typename Cat::Obj& k,
                                    const std::vector<typename Cat::Obj>& probes,
                                    const Budget& budget = {}) {
  CodensityValue<Cat> v;
  v.k = k;
  v.comma = build_comma<Cat>(k, probes, budget);
  v.lim = compute_limit(v.comma.diagram, budget);

  Cone<Cat> cone;
  cone.apex = k;
  for (const auto& g : v.comma.gs) cone.legs.push_back(g);
  std::string why;
  require(check_cone(v.comma.diagram, cone, &why), Errc::internal,
          "unit legs do not form a cone: " + why);
  v.unit = mediating_morphism(v.comma.diagram, v.lim, cone);

  for (int i = 0; i < static_cast<int>(v.comma.gs.size()); ++i)
    require(Cat::eq(Cat::compose(limit_projection(v.lim, i), v.unit),
                    v.comma.gs[static_cast<std::size_t>(i)]),
            Errc::internal, "projection after unit is not the defining morphism");
  auto ends = v.comma.diagram.edge_endpoints();
  for (std::size_t e = 0; e < v.comma.diagram.morphisms.size(); ++e)
    require(Cat::eq(Cat::compose(v.comma.diagram.morphisms[e],
                                 limit_projection(v.lim, ends[e].first)),
                    limit_projection(v.lim, ends[e].second)),
            Errc::internal, "edge coherence fails on the comma limit");
  return v;
}

// T(f): the unique morphism whose projection at a node g of the target
// instance is the source projection at the node g.f.
template <class Cat>
typename Cat::Mor codensity_on_map(const CodensityValue<Cat>& tk,
                                   const CodensityValue<Cat>& tl,
                                   const typename Cat::Mor& f) {
  require(Cat::dom(f) == tk.k && Cat::cod(f) == tl.k, Errc::mismatched_endpoints,
          "map endpoints do not match the codensity instances");
  require(tk.comma.probes == tl.comma.probes, Errc::invalid_argument,
          "codensity instances use different probes");
  Cone<Cat> cone;
  cone.apex = limit_carrier(tk.lim);
  for (const auto& g : tl.comma.gs)
    cone.legs.push_back(limit_projection(tk.lim, tk.comma.node_of(Cat::compose(g, f))));
  return mediating_morphism(tl.comma.diagram, tl.lim, cone);
}

// mu: T(T(k)) -> T(k), evaluating a compatible family of the iterated
// value at the projections, which are themselves comma nodes of the
// iterated instance. ttk must be the codensity value at the carrier of tk.
template <class Cat>
typename Cat::Mor codensity_mult(const CodensityValue<Cat>& tk,
                                 const CodensityValue<Cat>& ttk) {
  require(ttk.k == limit_carrier(tk.lim), Errc::invalid_argument,
          "iterated instance must sit at the carrier of the first");
  require(tk.comma.probes == ttk.comma.probes, Errc::invalid_argument,
          "codensity instances use different probes");
  Cone<Cat> cone;
  cone.apex = limit_carrier(ttk.lim);
  for (int i = 0; i < static_cast<int>(tk.comma.gs.size()); ++i)
    cone.legs.push_back(
        limit_projection(ttk.lim, ttk.comma.node_of(limit_projection(tk.lim, i))));
  return mediating_morphism(tk.comma.diagram, tk.lim, cone);
}

// For sets with probes {1,2,3}: the value is the object itself via the
// unit and the action on maps is the ultrafilter pushforward. For smaller
// probe bounds the carrier is recorded without an isomorphism claim.
Report codensity_set_report(int size, int probe_max, const Budget& budget = {});

// For spaces with probe dims up to m: the value is the double dual, with
// projections matching double-dualized probes and unit matching
// evaluation; fails honestly when m < dim.
Report codensity_vec_report(Fq field, int dim, int probe_max, const Budget& budget = {});

// Monad laws on the smallest faithful instances.
Report codensity_set_laws_report(int max_size = 2, int probe_max = 2,
                                 const Budget& budget = {});
// Monad laws plus cross-validation of mu against the dual construction.
Report codensity_vec_mult_report(Fq field, int max_dim = 1, const Budget& budget = {});

}  // namespace catlim
