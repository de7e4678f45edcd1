#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "limits.hpp"
#include "report.hpp"

namespace catlim {

// The three-element density construction over X = {0..n-1} with t = 0.
// Node K_x = (t, x, s) for each x != t; node Y = (t, x, x') for each 2-subset
// of X minus t. Every node object has exactly 3 elements.
struct Prop38Instance {
  int n = 0;
  std::vector<int> k_of;                      // K node order: the x it belongs to
  std::vector<std::pair<int, int>> y_of;      // Y node order: the pair (x, x'), x < x'
};

struct Prop38Build {
  Diagram<SetCat> diagram;
  Cone<SetCat> cone;  // legs from X: x to its copy in K_x / Y, everything else to t
  Prop38Instance inst;
};

Prop38Build build_prop38_diagram(int n);
// Passes iff the canonical cone is a limit cone (mediating bijection); the
// carrier then has exactly n families.
Report verify_prop38(int n, const Budget& budget = {});

// A pair of endomaps of {0,1,2} whose equalizer has exactly m elements,
// found by exhaustive search over all 729 pairs.
struct EqualizerWitness {
  SetMap f;
  SetMap g;
  Report report;
};
EqualizerWitness equalizer_witness(int m);

enum class Verdict { empty, power_of_two };

struct ReductionResult {
  Verdict verdict = Verdict::empty;
  int k = 0;  // limit cardinality is 2^k when verdict is power_of_two
  std::vector<std::string> surviving_nodes;
  std::vector<std::vector<std::string>> components;
};

// Localize-and-restrict reduction for diagrams whose node objects all have
// at most 2 elements: adjoin inverses of bijective edges, discard nodes that
// receive a constant composite (a node receiving constants with two distinct
// values already forces an empty limit), then count consistent components.
ReductionResult reduce_set3(const Diagram<SetCat>& d);

// Oracle comparison: brute-force carrier size must be 0 or a power of 2 and
// must match reduce_set3's verdict exactly.
Report verify_power_of_two(const Diagram<SetCat>& d, const Budget& budget = {});

// Seeded corpus generator: 1..max_nodes nodes with sizes in {1,2} plus a 5%
// chance of an empty node, 0..max_edges edges with uniform endpoints and
// tables (endpoints are resampled while a nonempty source points at an empty
// target, since no such map exists).
Diagram<SetCat> random_set3_diagram(std::uint64_t seed, int max_nodes = 6, int max_edges = 12);

// Runs verify_power_of_two over diagrams generated from seed, seed+1, ...
Report set3_corpus_check(int count, std::uint64_t seed, const Budget& budget = {});

}  // namespace catlim
