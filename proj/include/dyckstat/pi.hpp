#pragma once

#include <string>
#include <vector>

#include "dyckstat/dyck.hpp"
#include "dyckstat/tree.hpp"

namespace dyckstat {

/// Which branch of the recursive construction applies at the top level.
enum class PhiCase { Base, Case1, Case2, Case3 };

std::string to_string(PhiCase c);

/// Recursion events, outermost call first; each entry is a case label and the
/// Dyck word of the planted tree it was applied to.
struct PhiTrace {
  struct Entry {
    int depth = 0;
    PhiCase label = PhiCase::Base;
    std::string word;
  };
  std::vector<Entry> entries;
};

/// Top-level case of the forward map on `t`:
///   Base  - t is a path;
///   Case1 - the last child edge below the stalk is exterior;
///   Case2 - it is not, but the one before it is;
///   Case3 - neither of the last two child edges is exterior.
PhiCase phi_case(const PlantedTree& t);

/// Top-level case of the inverse map, read off the rightmost level-3 edge xy
/// with root path p-q-x-y:
///   Base  - no red edge (t is a bouquet);
///   Case1 - x has more than one child;
///   Case2 - x has one child and q has another non-leaf child;
///   Case3 - x has one child and every other child of q is a leaf.
PhiCase phi_inverse_case(const PlantedTree& t);

/// Edge-count preserving bijection on planted trees carrying exterior edges to
/// red edges (level divisible by 3). The stalk of a non-path input becomes the
/// rightmost level-3 edge of the output.
PlantedTree phi(const PlantedTree& t, PhiTrace* trace = nullptr);
/// Total on planted trees: one without a red edge has height at most 2 and is
/// therefore a bouquet.
PlantedTree phi_inverse(const PlantedTree& t, PhiTrace* trace = nullptr);

/// Applies phi to each planted component at the root.
OrderedTree Phi(const OrderedTree& t, PhiTrace* trace = nullptr);
OrderedTree Phi_inverse(const OrderedTree& t, PhiTrace* trace = nullptr);

/// Dyck-path bijection carrying exterior pairs to up steps at height = 0 mod 3.
DyckPath Pi(const DyckPath& p, PhiTrace* trace = nullptr);
DyckPath Pi_inverse(const DyckPath& p, PhiTrace* trace = nullptr);

}  // namespace dyckstat
