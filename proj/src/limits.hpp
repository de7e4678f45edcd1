#pragma once

#include <vector>

#include "budget.hpp"
#include "diagram.hpp"

namespace catlim {

// Explicit limit of a finite-set diagram: the compatible families, sorted
// lexicographically in node declaration order.
struct SetLimit {
  SetObj carrier;
  std::vector<std::vector<int>> families;
  std::vector<SetMap> projections;  // family index -> component at node
};

// Limit of a diagram of coordinate spaces: the solution subspace of the
// stacked edge constraints, carried by a canonical kernel basis.
struct VecLimit {
  VecObj carrier;
  Mat basis;                 // (sum of node dims) x carrier.dim
  std::vector<int> offsets;  // node -> first row of its block in basis
  std::vector<Mat> projections;
};

SetLimit compute_limit(const Diagram<SetCat>& d, const Budget& budget = {});
VecLimit compute_limit(const Diagram<VecCat>& d, const Budget& budget = {});

// The unique morphism m with projection_n . m = leg_n for every node.
// Throws no_factorization if the cone does not factor.
SetMap mediating_morphism(const Diagram<SetCat>& d, const SetLimit& lim, const Cone<SetCat>& c);
Mat mediating_morphism(const Diagram<VecCat>& d, const VecLimit& lim, const Cone<VecCat>& c);

bool is_limit_cone(const Diagram<SetCat>& d, const Cone<SetCat>& c, const Budget& budget = {});
bool is_limit_cone(const Diagram<VecCat>& d, const Cone<VecCat>& c, const Budget& budget = {});

// Uniform access for code templated over the category.
template <class Cat>
struct LimitTraits;
template <>
struct LimitTraits<SetCat> {
  using Limit = SetLimit;
};
template <>
struct LimitTraits<VecCat> {
  using Limit = VecLimit;
};
template <class Cat>
using LimitOf = typename LimitTraits<Cat>::Limit;

inline SetObj limit_carrier(const SetLimit& l) { return l.carrier; }
inline VecObj limit_carrier(const VecLimit& l) { return l.carrier; }
inline const SetMap& limit_projection(const SetLimit& l, int node) {
  return l.projections[static_cast<std::size_t>(node)];
}
inline const Mat& limit_projection(const VecLimit& l, int node) {
  return l.projections[static_cast<std::size_t>(node)];
}

}  // namespace catlim
