#pragma once

#include <utility>
#include <vector>

#include "budget.hpp"
#include "report.hpp"

namespace catlim {

// Objects are {0, ..., size-1}.
struct SetObj {
  int size = 0;
  bool operator==(const SetObj&) const = default;
};

// table[i] = image of i. Always built through make_set_map so entries are
// known to be in range.
struct SetMap {
  int dom = 0;
  int cod = 0;
  std::vector<int> table;
  bool operator==(const SetMap&) const = default;
};

SetMap make_set_map(int dom, int cod, std::vector<int> table);
SetMap set_identity(int n);
SetMap set_compose(const SetMap& g, const SetMap& f);  // g after f
bool set_is_bijective(const SetMap& f);
SetMap set_inverse(const SetMap& f);
// Image is a singleton. A map with empty domain is not constant.
bool set_is_constant(const SetMap& f);

// The subset {i : f(i) = g(i)} with its inclusion.
std::pair<SetObj, SetMap> equalizer(const SetMap& f, const SetMap& g);

// Canonical form: each block ascending, blocks ordered by least element.
struct Partition {
  int ground = 0;
  std::vector<std::vector<int>> blocks;
  bool operator==(const Partition&) const = default;
  int block_of(int x) const;
};

Partition partition_from_blocks(int ground, std::vector<std::vector<int>> blocks);
// labels[i] = block label of i; any labeling, canonicalized.
Partition partition_from_labels(const std::vector<int>& labels);
// Every set partition of {0..n-1} in restricted-growth-string order
// (single block first, all singletons last). n = 0 yields the one empty
// partition, so sizes follow the Bell numbers from n = 0 on.
std::vector<Partition> all_partitions(int n, int bound = 6);
// True iff every block of q1 is contained in some block of q2.
bool is_coarser(const Partition& q2, const Partition& q1);
// Blocks are the nonempty fibers of f.
Partition partition_of_map(const SetMap& f);
// ground -> block index.
SetMap quotient_map(const Partition& p);
// blocks(finer) -> blocks(coarser); requires is_coarser(coarser, finer).
SetMap quotient_refinement_map(const Partition& finer, const Partition& coarser);

// One block index per partition of the ground set, aligned with
// all_partitions(ground); whenever Q2 is coarser than Q1 the chosen block of
// Q2 contains the chosen block of Q1.
struct CoherentChoice {
  int ground = 0;
  std::vector<int> choice;
  bool operator==(const CoherentChoice&) const = default;
};

std::vector<CoherentChoice> coherent_choices(int n, int bound = 6);

// Every ultrafilter on a finite set is principal, so the point is the whole
// representation; the set-family view is materialized only for verification.
struct FinUltrafilter {
  int ground = 0;
  int point = 0;
  bool operator==(const FinUltrafilter&) const = default;
};

std::vector<FinUltrafilter> all_ultrafilters(int n);
// Principal at f(point). For ground sizes <= 5 the family computed literally
// as {A : preimage of A belongs to u} is verified to be that principal family.
FinUltrafilter pushforward_ultrafilter(const SetMap& f, const FinUltrafilter& u);
// Pick, in every partition, the block containing the principal point.
CoherentChoice choice_of_ultrafilter(const FinUltrafilter& u);

// Bijectivity of the ultrafilter -> coherent-choice passage; n <= 5.
Report galvin_horn_check(int n);
// The quotient diagram over all partitions of {0..n-1} has the canonical cone
// from the ground set as a limit cone; n <= 5. At n = 0 the single empty
// quotient forces the empty limit, which still matches the ground set.
Report partition_limit_check(int n, const Budget& budget = {});
// Functor, unit, multiplication, and monad laws of the finite ultrafilter
// monad, exhaustive over ground sizes <= max_ground, with the literal
// set-family formulas cross-checked against the principal representation.
Report ultrafilter_monad_check(int max_ground = 4);

}  // namespace catlim
