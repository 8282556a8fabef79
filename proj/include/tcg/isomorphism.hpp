#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "tcg/finite_group.hpp"

namespace tcg {

struct Homomorphism {
  const FiniteGroup* source = nullptr;
  const FiniteGroup* target = nullptr;
  /// source element index -> target element index
  std::vector<int> map;
};

bool is_homomorphism(const Homomorphism& h);
bool is_isomorphism(const Homomorphism& h);

/// A generating sequence chosen greedily so that each generator maximizes
/// the growth of the closure of the prefix.
std::vector<int> greedy_generators(const FiniteGroup& g);

/// Callback invoked after each successful generator-image extension with the
/// partial map (source -> target, -1 undefined) and the list of source
/// elements defined so far. Return false to prune that branch.
using PartialHook = std::function<bool(const std::vector<int>&, const std::vector<int>&)>;
/// Invoked with each complete isomorphism; return true to stop the search.
using CompleteHook = std::function<bool(const std::vector<int>&)>;

/// Enumerates isomorphisms G -> H by backtracking over generator images,
/// pruned by element order and conjugacy class size. Sound and complete.
void for_each_isomorphism(const FiniteGroup& g, const FiniteGroup& h, const PartialHook& on_extend,
                          const CompleteHook& on_complete);

/// First isomorphism found, or nullopt. Throws OrderTooLarge above max_order.
std::optional<Homomorphism> group_isomorphic(const FiniteGroup& g, const FiniteGroup& h,
                                             int max_order = 256);

/// A partial monomorphism under construction. push() adds one assignment and
/// closes the map under products, rejecting any inconsistency or injectivity
/// violation. The defined set is always a subgroup of the source.
struct PartialMono {
  std::vector<int> map;   // source -> target, -1 undefined
  std::vector<int> used;  // target -> source, -1 unused
  std::vector<int> defined;

  PartialMono(int source_order, int target_order)
      : map(source_order, -1), used(target_order, -1) {}

  bool push(const FiniteGroup& source, const FiniteGroup& target, int g, int h);
  bool total() const { return defined.size() == map.size(); }
};

}  // namespace tcg
