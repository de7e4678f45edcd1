#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "budget.hpp"
#include "category.hpp"
#include "diagram.hpp"
#include "matrix.hpp"
#include "report.hpp"

namespace catlim {

// Double dualization over F_q in coordinates. With the dual basis
// convention the dual of a map is its transpose, so f** has the same
// matrix as f and the unit is the identity matrix; both are built from
// the evaluation pairing and asserted, not hardcoded.
Mat dual_map(const Mat& f);
Mat dd_on_map(const Mat& f);
Mat dd_unit(Fq field, int dim);
Mat dd_mult(Fq field, int dim);

struct MonadComponents {
  Fq field;
  int max_dim = 0;
  std::vector<Mat> unit;  // unit[d]: F^d -> F^d**, d <= max_dim
  std::vector<Mat> mult;  // mult[d]: F^d**** -> F^d**
};

// Components with unit/mult laws verified on construction.
MonadComponents dd_monad(Fq field, int max_dim);

// Full monad check: unit invertibility, naturality (exhaustive on small
// hom-sets, seeded sampling on large ones), unit/associativity laws, and
// the rescaled family (k*unit, k^-1*mult) for every nonzero k.
Report dd_monad_check(Fq field, int max_dim, std::uint64_t sample_seed = 1);

// Canonical representatives of the linear quotients of x with codomain
// dimension <= max_cod: all full-row-rank matrices in reduced row echelon
// form, ordered by codomain dimension then lexicographically.
std::vector<Mat> enumerate_linear_partitions(const VecObj& x, int max_cod,
                                             const Budget& budget = {});

// The unique u with a = u * b when it exists (b must have full row rank,
// so u is determined); nullopt when a does not factor through b.
std::optional<Mat> factor_through(const Mat& a, const Mat& b);

// A choice of one point in every linear quotient, aligned with
// enumerate_linear_partitions order.
struct DualChoice {
  std::vector<std::vector<std::uint8_t>> alpha;
  bool operator==(const DualChoice&) const = default;
};

// The choice a |-> a(t); coherence across factoring pairs is asserted.
DualChoice alpha_from_vector(const std::vector<std::uint8_t>& t, const VecObj& x,
                             const std::vector<Mat>& parts);

// Counts coherent choices over all linear quotients of F_q^n by
// backtracking and matches them against {alpha_from_vector(t)}.
Report lemma42_check(Fq field, int n, const Budget& budget = {});

// x is a coordinate vector in the double dual of dom(a). True when
// a**(x) is the evaluation functional of some point of cod(a); that point
// is written to *witness. (Over a finite-dimensional space the unit is
// onto, so this always holds; the check still inverts the pairing.)
bool is_evaluation_vector(const Mat& a, const std::vector<std::uint8_t>& x,
                          std::vector<std::uint8_t>* witness = nullptr);

enum class ScanFunctor { identity, double_dual };

// Enumerates every family (beta_n : F^n -> F^n**)_{n <= max_dim} and keeps
// those natural in n; survivors must be exactly the scalar multiples of
// the unit family. max_dim <= 2.
Report lemma45_scan(Fq field, int max_dim, ScanFunctor functor,
                    const Budget& budget = {});

struct Prop43Build {
  Diagram<VecCat> diagram;
  Cone<VecCat> cone;
  int n = 0;
};

// Lines K_x (one per coordinate functional) and planes L_{x,x'} with the
// two coordinate projections; the cone from F_q^n uses the coordinate
// rows. Its limit is F_q^n again.
Prop43Build build_prop43_diagram(Fq field, int n);
Report prop43_check(Fq field, int n, const Budget& budget = {});

}  // namespace catlim
