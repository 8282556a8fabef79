#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tcg/error.hpp"

namespace tcg {

/// Hard cap on group order (default 512, overridable via TCG_MAX_ORDER).
int order_cap();

/// A finite group given by its full Cayley table. Element 0 is always the
/// identity. Immutable after construction; safe to share across threads.
class FiniteGroup {
 public:
  /// Validates all group axioms: identity at 0, Latin square rows/columns,
  /// and a full associativity sweep. Throws tcg::Error on any defect.
  static FiniteGroup validate(const std::vector<std::vector<int>>& table,
                              std::string name = "G");
  static FiniteGroup validate_flat(int n, std::vector<int> table, std::string name = "G");

  /// Constructs without the associativity sweep. Reserved for tables that
  /// are groups by construction (direct products of validated groups,
  /// quotients by verified normal subgroups). Still checks identity and
  /// builds the inverse table.
  static FiniteGroup trusted(int n, std::vector<int> table, std::string name);

  int order() const { return n_; }
  int mul(int a, int b) const { return table_[a * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  /// g x g^-1
  int conj(int g, int x) const { return mul(mul(g, x), inv_[g]); }
  int power(int x, long long e) const;
  int element_order(int x) const;
  bool commutes(int a, int b) const { return mul(a, b) == mul(b, a); }

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  const std::vector<int>& flat_table() const { return table_; }

 private:
  FiniteGroup(int n, std::vector<int> table, std::string name);

  int n_;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::string name_;
};

/// A subset of the elements of a parent group, kept sorted ascending.
struct Subset {
  const FiniteGroup* parent = nullptr;
  std::vector<int> members;

  int size() const { return static_cast<int>(members.size()); }
  bool contains(int x) const;
};

bool is_abelian(const FiniteGroup& g);
bool is_subgroup(const Subset& s);
/// Requires s to be a subgroup; true when all its elements commute pairwise.
bool is_abelian_subgroup(const Subset& s);
bool is_normal_subgroup(const FiniteGroup& g, const Subset& s);

Subset center(const FiniteGroup& g);
Subset centralizer(const FiniteGroup& g, int x);
int commutator(const FiniteGroup& g, int x, int y);
Subset derived_subgroup(const FiniteGroup& g);
Subset subgroup_closure(const FiniteGroup& g, std::span<const int> seed);
Subset intersect(const Subset& a, const Subset& b);
Subset normalizer(const FiniteGroup& g, const Subset& s);

std::vector<Subset> conjugacy_classes(const FiniteGroup& g);
/// cs(G): the sorted set of distinct conjugacy class sizes.
std::vector<int> conjugate_type(const FiniteGroup& g);

struct Quotient {
  FiniteGroup group;
  /// element index -> coset index (identity coset is 0)
  std::vector<int> projection;
  /// coset index -> minimal representative element
  std::vector<int> representatives;
};

/// G/N for a normal subgroup N. Cosets are indexed by sorted minimal
/// representative, which places the identity coset at 0.
Quotient quotient_group(const FiniteGroup& g, const Subset& n);

/// The transversal of subgroup z picking the minimal element of each left
/// coset; contains 0 and is deterministic.
Subset canonical_transversal(const FiniteGroup& g, const Subset& z);

/// Cosets of z in g, each sorted, ordered by minimal element.
std::vector<std::vector<int>> left_cosets(const FiniteGroup& g, const Subset& z);

struct SubgroupGroup {
  FiniteGroup group;
  /// subgroup element index -> parent element index
  std::vector<int> to_parent;
  /// parent element index -> subgroup index, or -1
  std::vector<int> from_parent;
};

/// Reindexes a subgroup as a standalone FiniteGroup (identity at 0).
SubgroupGroup subgroup_as_group(const FiniteGroup& g, const Subset& s, std::string name = "");

bool is_prime(int p);
/// Sylow p-subgroup found by normalizer climbing from a cyclic p-subgroup.
Subset sylow_subgroup(const FiniteGroup& g, int p);
/// Frattini subgroup of a p-group, computed as closure(G' ∪ {g^p}).
Subset frattini_p_group(const FiniteGroup& g, int p);

}  // namespace tcg
