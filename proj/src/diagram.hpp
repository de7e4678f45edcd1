#pragma once

#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "category.hpp"
#include "error.hpp"

namespace catlim {

struct ShapeEdge {
  std::string id;
  std::string src;
  std::string dst;
};

// Finite directed multigraph; diagrams are taken over the free category on
// it, so cone compatibility over single edges suffices everywhere.
struct ShapeGraph {
  std::vector<std::string> nodes;
  std::vector<ShapeEdge> edges;

  int node_index(const std::string& id) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (nodes[i] == id) return static_cast<int>(i);
    return -1;
  }

  void validate() const {
    std::unordered_set<std::string> seen;
    for (const auto& n : nodes)
      require(seen.insert(n).second, Errc::malformed_diagram, "duplicate node id: " + n);
    std::unordered_set<std::string> eseen;
    for (const auto& e : edges) {
      require(eseen.insert(e.id).second, Errc::malformed_diagram, "duplicate edge id: " + e.id);
      require(seen.count(e.src) != 0, Errc::malformed_diagram,
              "edge \"" + e.id + "\": src \"" + e.src + "\" is not a node");
      require(seen.count(e.dst) != 0, Errc::malformed_diagram,
              "edge \"" + e.id + "\": dst \"" + e.dst + "\" is not a node");
    }
  }
};

template <class Cat>
struct Diagram {
  ShapeGraph shape;
  std::vector<typename Cat::Obj> objects;    // aligned with shape.nodes
  std::vector<typename Cat::Mor> morphisms;  // aligned with shape.edges

  void validate() const {
    shape.validate();
    require(objects.size() == shape.nodes.size(), Errc::malformed_diagram,
            "object list does not match node list");
    require(morphisms.size() == shape.edges.size(), Errc::malformed_diagram,
            "morphism list does not match edge list");
    for (std::size_t e = 0; e < shape.edges.size(); ++e) {
      int s = shape.node_index(shape.edges[e].src);
      int d = shape.node_index(shape.edges[e].dst);
      const auto& m = morphisms[e];
      require(Cat::dom(m) == objects[static_cast<std::size_t>(s)], Errc::malformed_diagram,
              "edge \"" + shape.edges[e].id + "\": domain does not match its source object");
      require(Cat::cod(m) == objects[static_cast<std::size_t>(d)], Errc::malformed_diagram,
              "edge \"" + shape.edges[e].id + "\": codomain does not match its target object");
    }
  }

  // Endpoint indices for each edge, resolved once.
  std::vector<std::pair<int, int>> edge_endpoints() const {
    std::unordered_map<std::string, int> index;
    for (std::size_t i = 0; i < shape.nodes.size(); ++i)
      index[shape.nodes[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> out;
    out.reserve(shape.edges.size());
    for (const auto& e : shape.edges) out.emplace_back(index.at(e.src), index.at(e.dst));
    return out;
  }
};

template <class Cat>
struct Cone {
  typename Cat::Obj apex;
  std::vector<typename Cat::Mor> legs;  // aligned with shape.nodes
};

// True iff every leg is typed apex -> node object and every edge equation
// morphism(e) . leg(src) = leg(dst) holds exactly.
template <class Cat>
bool check_cone(const Diagram<Cat>& d, const Cone<Cat>& c, std::string* why = nullptr) {
  require(c.legs.size() == d.shape.nodes.size(), Errc::type_mismatch,
          "cone leg count does not match diagram nodes");
  for (std::size_t n = 0; n < c.legs.size(); ++n) {
    require(Cat::dom(c.legs[n]) == c.apex, Errc::type_mismatch,
            "cone leg at node \"" + d.shape.nodes[n] + "\" does not start at the apex");
    require(Cat::cod(c.legs[n]) == d.objects[n], Errc::type_mismatch,
            "cone leg at node \"" + d.shape.nodes[n] + "\" does not end at the node object");
  }
  auto ends = d.edge_endpoints();
  for (std::size_t e = 0; e < d.shape.edges.size(); ++e) {
    auto [s, t] = ends[e];
    if (!Cat::eq(Cat::compose(d.morphisms[e], c.legs[static_cast<std::size_t>(s)]),
                 c.legs[static_cast<std::size_t>(t)])) {
      if (why) *why = "edge \"" + d.shape.edges[e].id + "\" equation violated";
      return false;
    }
  }
  return true;
}

}  // namespace catlim
