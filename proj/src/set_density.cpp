#include "set_density.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "diagram_io.hpp"
#include "error.hpp"
#include "rng.hpp"

namespace catlim {

Prop38Build build_prop38_diagram(int n) {
  require(n >= 3, Errc::invalid_argument,
          "the construction needs at least 3 elements; smaller sets are covered by the "
          "equalizer witnesses");
  Prop38Build b;
  b.inst.n = n;
  auto k_id = [](int x) { return "K" + std::to_string(x); };
  auto y_id = [](int x, int y) { return "Y" + std::to_string(x) + "_" + std::to_string(y); };

  // K_x nodes, each with a fixed-point-free-on-s endomap p_x (s goes to t).
  for (int x = 1; x < n; ++x) {
    b.diagram.shape.nodes.push_back(k_id(x));
    b.diagram.objects.push_back(SetObj{3});
    b.inst.k_of.push_back(x);
  }
  // Y nodes with the two restriction maps onto K_x and K_x'.
  for (int x = 1; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      b.diagram.shape.nodes.push_back(y_id(x, y));
      b.diagram.objects.push_back(SetObj{3});
      b.inst.y_of.emplace_back(x, y);
    }
  for (int x = 1; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      // Local order in Y is (t, x, y); in K_z it is (t, z, s).
      b.diagram.shape.edges.push_back(
          ShapeEdge{"f_" + std::to_string(x) + "_" + std::to_string(y) + "_to_" +
                        std::to_string(x),
                    y_id(x, y), k_id(x)});
      b.diagram.morphisms.push_back(make_set_map(3, 3, {0, 1, 0}));
      b.diagram.shape.edges.push_back(
          ShapeEdge{"f_" + std::to_string(x) + "_" + std::to_string(y) + "_to_" +
                        std::to_string(y),
                    y_id(x, y), k_id(y)});
      b.diagram.morphisms.push_back(make_set_map(3, 3, {0, 0, 1}));
    }
  for (int x = 1; x < n; ++x) {
    b.diagram.shape.edges.push_back(ShapeEdge{"p_" + std::to_string(x), k_id(x), k_id(x)});
    b.diagram.morphisms.push_back(make_set_map(3, 3, {0, 1, 0}));
  }
  b.diagram.validate();

  b.cone.apex = SetObj{n};
  for (int x : b.inst.k_of) {
    std::vector<int> t(static_cast<std::size_t>(n), 0);
    t[static_cast<std::size_t>(x)] = 1;
    b.cone.legs.push_back(make_set_map(n, 3, std::move(t)));
  }
  for (auto [x, y] : b.inst.y_of) {
    std::vector<int> t(static_cast<std::size_t>(n), 0);
    t[static_cast<std::size_t>(x)] = 1;
    t[static_cast<std::size_t>(y)] = 2;
    b.cone.legs.push_back(make_set_map(n, 3, std::move(t)));
  }
  return b;
}

Report verify_prop38(int n, const Budget& budget) {
  Report r;
  r.check = "prop38";
  r.params = ordered_json{{"size", n}};
  r.anchor_label = "Prop 3.8";
  r.anchor_claim =
      "The canonical cone from an n-element set over the diagram of three-element nodes "
      "(one K per non-distinguished element, one Y per 2-subset, restriction maps and one "
      "self-map per K) is a limit cone, so the carrier has exactly n families.";
  require(n <= 6, Errc::bound_exceeded, "construction bounded at 6 elements by default");
  Prop38Build b = build_prop38_diagram(n);
  r.metrics["nodes"] = b.diagram.shape.nodes.size();
  r.metrics["edges"] = b.diagram.shape.edges.size();

  SetLimit lim = compute_limit(b.diagram, budget);
  r.metrics["carrier"] = lim.carrier.size;
  if (!check_cone(b.diagram, b.cone)) {
    r.fail_with("the canonical legs do not form a cone");
    return r;
  }
  SetMap med = mediating_morphism(b.diagram, lim, b.cone);
  if (!set_is_bijective(med)) {
    r.fail_with("the mediating map is not a bijection",
                ordered_json{{"mediating_table", med.table}, {"carrier", lim.carrier.size}});
    return r;
  }
  if (lim.carrier.size != n)
    r.fail_with("carrier size differs from n", ordered_json{{"carrier", lim.carrier.size}});
  return r;
}

EqualizerWitness equalizer_witness(int m) {
  require(m >= 0 && m <= 2, Errc::invalid_argument, "witness target must be 0, 1, or 2");
  EqualizerWitness w;
  Report& r = w.report;
  r.check = "equalizer";
  r.params = ordered_json{{"m", m}};
  r.anchor_label = "Prop 3.8";
  r.anchor_claim =
      "Every set of at most 2 elements arises as an equalizer of two endomaps of a "
      "3-element set.";

  std::vector<SetMap> endos;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) endos.push_back(make_set_map(3, 3, {a, b, c}));
  int pairs = 0;
  for (const auto& f : endos)
    for (const auto& g : endos) {
      ++pairs;
      auto [obj, incl] = equalizer(f, g);
      if (obj.size == m) {
        w.f = f;
        w.g = g;
        r.metrics["pairs_scanned"] = pairs;
        r.metrics["f"] = f.table;
        r.metrics["g"] = g.table;
        r.metrics["equalizer"] = incl.table;
        return w;
      }
    }
  r.fail_with("no endomap pair on a 3-element set has an equalizer of the requested size");
  return w;
}

namespace {

struct ClosureMaps {
  // maps[u][v] = set of map tables realized by directed paths u -> v in the
  // localized diagram, identities included. Sizes are at most 2, so each set
  // holds at most 4 tables.
  std::vector<std::vector<std::set<std::vector<int>>>> maps;
};

ClosureMaps path_closure(int n_nodes, const std::vector<SetObj>& objects,
                         const std::vector<std::tuple<int, int, SetMap>>& arrows) {
  ClosureMaps c;
  c.maps.assign(static_cast<std::size_t>(n_nodes),
                std::vector<std::set<std::vector<int>>>(static_cast<std::size_t>(n_nodes)));
  for (int v = 0; v < n_nodes; ++v)
    c.maps[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)].insert(
        set_identity(objects[static_cast<std::size_t>(v)].size).table);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [a, b, m] : arrows)
      for (int u = 0; u < n_nodes; ++u) {
        auto& into_a = c.maps[static_cast<std::size_t>(u)][static_cast<std::size_t>(a)];
        auto& into_b = c.maps[static_cast<std::size_t>(u)][static_cast<std::size_t>(b)];
        for (const auto& f : into_a) {
          SetMap comp = set_compose(
              m, SetMap{static_cast<int>(f.size()), objects[static_cast<std::size_t>(a)].size, f});
          if (into_b.insert(comp.table).second) changed = true;
        }
      }
  }
  return c;
}

bool table_is_constant(const std::vector<int>& t) {
  if (t.empty()) return false;
  for (int v : t)
    if (v != t[0]) return false;
  return true;
}

}  // namespace

ReductionResult reduce_set3(const Diagram<SetCat>& d) {
  d.validate();
  for (std::size_t i = 0; i < d.objects.size(); ++i)
    require(d.objects[i].size <= 2, Errc::oversized_node,
            "node \"" + d.shape.nodes[i] + "\" has more than 2 elements");

  ReductionResult res;
  int n_nodes = static_cast<int>(d.shape.nodes.size());
  for (const auto& o : d.objects)
    if (o.size == 0) return res;  // a compatible family needs an element everywhere

  // Localization: adjoin the inverse of every bijective edge map.
  auto ends = d.edge_endpoints();
  std::vector<std::tuple<int, int, SetMap>> arrows;
  for (std::size_t e = 0; e < d.morphisms.size(); ++e) {
    arrows.emplace_back(ends[e].first, ends[e].second, d.morphisms[e]);
    if (set_is_bijective(d.morphisms[e]))
      arrows.emplace_back(ends[e].second, ends[e].first, set_inverse(d.morphisms[e]));
  }

  ClosureMaps closure = path_closure(n_nodes, d.objects, arrows);

  // A node receiving two constant composites with different values forces the
  // empty limit; a node receiving any constant composite has a forced value
  // and leaves the restricted diagram.
  std::vector<bool> in_d0(static_cast<std::size_t>(n_nodes), true);
  for (int v = 0; v < n_nodes; ++v) {
    int constant_value = -1;
    for (int u = 0; u < n_nodes; ++u)
      for (const auto& t : closure.maps[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)])
        if (table_is_constant(t)) {
          if (constant_value >= 0 && constant_value != t[0]) return res;  // verdict empty
          constant_value = t[0];
          in_d0[static_cast<std::size_t>(v)] = false;
        }
  }

  // Restricted diagram nodes all have 2 elements and receive only bijective
  // composites; a constant edge between surviving nodes would contradict the
  // discard rule above.
  std::vector<std::tuple<int, int, SetMap>> d0_edges;
  for (const auto& [a, b, m] : arrows) {
    if (!in_d0[static_cast<std::size_t>(a)] || !in_d0[static_cast<std::size_t>(b)]) continue;
    require(d.objects[static_cast<std::size_t>(a)].size == 2 &&
                d.objects[static_cast<std::size_t>(b)].size == 2,
            Errc::internal, "restricted diagram retained a node of size != 2");
    require(set_is_bijective(m), Errc::internal,
            "restricted diagram retained a non-bijective edge");
    d0_edges.emplace_back(a, b, m);
  }
  for (int v = 0; v < n_nodes; ++v)
    if (in_d0[static_cast<std::size_t>(v)])
      res.surviving_nodes.push_back(d.shape.nodes[static_cast<std::size_t>(v)]);

  // Components of the restricted diagram; propagate one of the two values
  // along a spanning tree and check every remaining edge. Inside a component
  // all composites are bijections of a 2-element set, so consistency at one
  // root value implies it at the other.
  std::vector<int> comp(static_cast<std::size_t>(n_nodes), -1);
  std::vector<int> val(static_cast<std::size_t>(n_nodes), -1);
  int n_comp = 0;
  for (int root = 0; root < n_nodes; ++root) {
    if (!in_d0[static_cast<std::size_t>(root)] || comp[static_cast<std::size_t>(root)] >= 0)
      continue;
    std::vector<int> stack{root};
    comp[static_cast<std::size_t>(root)] = n_comp;
    val[static_cast<std::size_t>(root)] = 0;
    std::vector<std::string> members;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      members.push_back(d.shape.nodes[static_cast<std::size_t>(u)]);
      for (const auto& [a, b, m] : d0_edges) {
        int other = -1, image = -1;
        if (a == u && comp[static_cast<std::size_t>(b)] < 0) {
          other = b;
          image = m.table[static_cast<std::size_t>(val[static_cast<std::size_t>(u)])];
        } else if (b == u && comp[static_cast<std::size_t>(a)] < 0) {
          other = a;
          image = set_inverse(m).table[static_cast<std::size_t>(val[static_cast<std::size_t>(u)])];
        }
        if (other < 0) continue;
        comp[static_cast<std::size_t>(other)] = n_comp;
        val[static_cast<std::size_t>(other)] = image;
        stack.push_back(other);
      }
    }
    std::sort(members.begin(), members.end());
    res.components.push_back(std::move(members));
    ++n_comp;
  }
  for (const auto& [a, b, m] : d0_edges)
    if (m.table[static_cast<std::size_t>(val[static_cast<std::size_t>(a)])] !=
        val[static_cast<std::size_t>(b)])
      return ReductionResult{Verdict::empty, 0, res.surviving_nodes, res.components};

  res.verdict = Verdict::power_of_two;
  res.k = n_comp;
  return res;
}

Report verify_power_of_two(const Diagram<SetCat>& d, const Budget& budget) {
  Report r;
  r.check = "set3";
  r.anchor_label = "Remark 3.9(a)";
  r.anchor_claim =
      "A diagram whose node objects have at most 2 elements has a limit of cardinality 0 or "
      "a power of 2, and the localize-and-restrict reduction computes it exactly.";

  SetLimit lim = compute_limit(d, budget);
  std::size_t size = lim.families.size();
  r.metrics["carrier"] = size;

  bool power = size > 0 && (size & (size - 1)) == 0;
  if (size != 0 && !power) {
    r.fail_with("brute-force carrier size is neither 0 nor a power of 2",
                ordered_json{{"carrier", size}, {"diagram", diagram_to_json_value(d)}});
    return r;
  }

  ReductionResult red = reduce_set3(d);
  r.metrics["verdict"] =
      red.verdict == Verdict::empty ? "empty" : "2^" + std::to_string(red.k);
  bool match = red.verdict == Verdict::empty
                   ? size == 0
                   : size == (static_cast<std::size_t>(1) << red.k);
  if (!match)
    r.fail_with("reduction verdict disagrees with brute force",
                ordered_json{{"carrier", size},
                             {"verdict", r.metrics["verdict"]},
                             {"diagram", diagram_to_json_value(d)}});
  return r;
}

Diagram<SetCat> random_set3_diagram(std::uint64_t seed, int max_nodes, int max_edges) {
  require(max_nodes >= 1 && max_edges >= 0, Errc::invalid_argument, "bounds must be positive");
  Rng rng(seed);
  Diagram<SetCat> d;
  int n_nodes = rng.range(1, max_nodes);
  for (int i = 0; i < n_nodes; ++i) {
    d.shape.nodes.push_back("d" + std::to_string(i));
    int size = rng.chance(0.05) ? 0 : rng.range(1, 2);
    d.objects.push_back(SetObj{size});
  }
  int n_edges = rng.range(0, max_edges);
  for (int e = 0; e < n_edges; ++e) {
    int src = rng.range(0, n_nodes - 1);
    int dst = rng.range(0, n_nodes - 1);
    while (d.objects[static_cast<std::size_t>(src)].size > 0 &&
           d.objects[static_cast<std::size_t>(dst)].size == 0) {
      src = rng.range(0, n_nodes - 1);
      dst = rng.range(0, n_nodes - 1);
    }
    std::vector<int> table;
    for (int i = 0; i < d.objects[static_cast<std::size_t>(src)].size; ++i)
      table.push_back(rng.range(0, d.objects[static_cast<std::size_t>(dst)].size - 1));
    d.shape.edges.push_back(ShapeEdge{"e" + std::to_string(e), "d" + std::to_string(src),
                                      "d" + std::to_string(dst)});
    d.morphisms.push_back(make_set_map(d.objects[static_cast<std::size_t>(src)].size,
                                       d.objects[static_cast<std::size_t>(dst)].size,
                                       std::move(table)));
  }
  d.validate();
  return d;
}

Report set3_corpus_check(int count, std::uint64_t seed, const Budget& budget) {
  require(count >= 0, Errc::invalid_argument, "corpus count must be nonnegative");
  Report r;
  r.check = "set3";
  r.params = ordered_json{{"count", count}};
  r.seed = seed;
  r.anchor_label = "Remark 3.9(a)";
  r.anchor_claim =
      "Across a seeded corpus of random small diagrams with node sizes at most 2, every "
      "brute-force limit size is 0 or a power of 2 and matches the reduction verdict.";

  int empties = 0, max_k = 0;
  for (int i = 0; i < count; ++i) {
    Diagram<SetCat> d = random_set3_diagram(seed + static_cast<std::uint64_t>(i));
    Report one = verify_power_of_two(d, budget);
    if (one.failed()) {
      r.status = Report::Status::fail;
      r.reason = "instance " + std::to_string(i) + ": " + one.reason;
      r.counterexample = one.counterexample;
      r.counterexample["seed"] = seed + static_cast<std::uint64_t>(i);
      return r;
    }
    std::size_t size = one.metrics["carrier"].get<std::size_t>();
    if (size == 0)
      ++empties;
    else {
      int k = 0;
      while ((static_cast<std::size_t>(1) << k) < size) ++k;
      max_k = std::max(max_k, k);
    }
  }
  r.metrics["diagrams"] = count;
  r.metrics["empty_limits"] = empties;
  r.metrics["max_power"] = max_k;
  return r;
}

}  // namespace catlim
