#include "tcg/finite_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <queue>
#include <unordered_set>

namespace tcg {

int order_cap() {
  static int cap = [] {
    if (const char* env = std::getenv("TCG_MAX_ORDER")) {
      int v = std::atoi(env);
      if (v > 0) return v;
    }
    return 512;
  }();
  return cap;
}

FiniteGroup::FiniteGroup(int n, std::vector<int> table, std::string name)
    : n_(n), table_(std::move(table)), inv_(n, -1), name_(std::move(name)) {
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (mul(i, j) == 0 && mul(j, i) == 0) {
        inv_[i] = j;
        break;
      }
    }
    if (inv_[i] < 0) fail(ErrorCode::NotLatinSquare, "element " + std::to_string(i) + " has no inverse");
  }
}

FiniteGroup FiniteGroup::trusted(int n, std::vector<int> table, std::string name) {
  return FiniteGroup(n, std::move(table), std::move(name));
}

FiniteGroup FiniteGroup::validate_flat(int n, std::vector<int> table, std::string name) {
  if (n < 1) fail(ErrorCode::ZeroOrder, "group order must be positive");
  if (n > order_cap())
    fail(ErrorCode::OrderTooLarge,
         "order " + std::to_string(n) + " exceeds cap " + std::to_string(order_cap()));
  if (static_cast<int>(table.size()) != n * n)
    fail(ErrorCode::NotLatinSquare, "table is not n x n");
  for (int v : table)
    if (v < 0 || v >= n) fail(ErrorCode::NotLatinSquare, "table entry out of range");

  auto at = [&](int i, int j) { return table[i * n + j]; };

  for (int j = 0; j < n; ++j)
    if (at(0, j) != j) fail(ErrorCode::NoIdentity, "element 0 is not a left identity at column " + std::to_string(j));
  for (int i = 0; i < n; ++i)
    if (at(i, 0) != i) fail(ErrorCode::NoIdentity, "element 0 is not a right identity at row " + std::to_string(i));

  std::vector<char> seen(n);
  for (int i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < n; ++j) {
      if (seen[at(i, j)]) fail(ErrorCode::NotLatinSquare, "row " + std::to_string(i) + " repeats a value");
      seen[at(i, j)] = 1;
    }
  }
  for (int j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int i = 0; i < n; ++i) {
      if (seen[at(i, j)]) fail(ErrorCode::NotLatinSquare, "column " + std::to_string(j) + " repeats a value");
      seen[at(i, j)] = 1;
    }
  }

  // Full O(n^3) sweep; desk-scale orders make this affordable.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int ij = at(i, j);
      for (int k = 0; k < n; ++k)
        if (at(ij, k) != at(i, at(j, k)))
          fail(ErrorCode::NotAssociative, "associativity fails at (" + std::to_string(i) + "," +
                                              std::to_string(j) + "," + std::to_string(k) + ")");
    }

  return FiniteGroup(n, std::move(table), std::move(name));
}

FiniteGroup FiniteGroup::validate(const std::vector<std::vector<int>>& table, std::string name) {
  int n = static_cast<int>(table.size());
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) fail(ErrorCode::NotLatinSquare, "table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return validate_flat(n, std::move(flat), std::move(name));
}

int FiniteGroup::power(int x, long long e) const {
  if (e < 0) {
    x = inv(x);
    e = -e;
  }
  int acc = 0;
  while (e > 0) {
    if (e & 1) acc = mul(acc, x);
    x = mul(x, x);
    e >>= 1;
  }
  return acc;
}

int FiniteGroup::element_order(int x) const {
  int acc = x;
  int ord = 1;
  while (acc != 0) {
    acc = mul(acc, x);
    ++ord;
  }
  return ord;
}

bool Subset::contains(int x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

bool is_abelian(const FiniteGroup& g) {
  int n = g.order();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!g.commutes(i, j)) return false;
  return true;
}

bool is_subgroup(const Subset& s) {
  const FiniteGroup& g = *s.parent;
  if (!s.contains(0)) return false;
  for (int a : s.members) {
    if (!s.contains(g.inv(a))) return false;
    for (int b : s.members)
      if (!s.contains(g.mul(a, b))) return false;
  }
  return true;
}

bool is_abelian_subgroup(const Subset& s) {
  const FiniteGroup& g = *s.parent;
  for (size_t i = 0; i < s.members.size(); ++i)
    for (size_t j = i + 1; j < s.members.size(); ++j)
      if (!g.commutes(s.members[i], s.members[j])) return false;
  return true;
}

bool is_normal_subgroup(const FiniteGroup& g, const Subset& s) {
  for (int x = 0; x < g.order(); ++x)
    for (int a : s.members)
      if (!s.contains(g.conj(x, a))) return false;
  return true;
}

Subset center(const FiniteGroup& g) {
  Subset z{&g, {}};
  for (int x = 0; x < g.order(); ++x) {
    bool central = true;
    for (int y = 0; y < g.order() && central; ++y) central = g.commutes(x, y);
    if (central) z.members.push_back(x);
  }
  return z;
}

Subset centralizer(const FiniteGroup& g, int x) {
  Subset c{&g, {}};
  for (int y = 0; y < g.order(); ++y)
    if (g.commutes(x, y)) c.members.push_back(y);
  return c;
}

int commutator(const FiniteGroup& g, int x, int y) {
  return g.mul(g.mul(g.mul(x, y), g.inv(x)), g.inv(y));
}

Subset subgroup_closure(const FiniteGroup& g, std::span<const int> seed) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> elems;
  auto add = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      elems.push_back(x);
    }
  };
  add(0);
  for (int s : seed) add(s);
  for (size_t i = 0; i < elems.size(); ++i) {
    for (size_t j = 0; j < elems.size(); ++j) {
      add(g.mul(elems[i], elems[j]));
      add(g.mul(elems[j], elems[i]));
    }
    add(g.inv(elems[i]));
  }
  std::sort(elems.begin(), elems.end());
  return Subset{&g, std::move(elems)};
}

Subset derived_subgroup(const FiniteGroup& g) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> comms;
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y) {
      int c = commutator(g, x, y);
      if (!in[c]) {
        in[c] = 1;
        comms.push_back(c);
      }
    }
  return subgroup_closure(g, comms);
}

Subset intersect(const Subset& a, const Subset& b) {
  Subset out{a.parent, {}};
  std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                        std::back_inserter(out.members));
  return out;
}

Subset normalizer(const FiniteGroup& g, const Subset& s) {
  Subset out{&g, {}};
  for (int x = 0; x < g.order(); ++x) {
    bool norm = true;
    for (int a : s.members)
      if (!s.contains(g.conj(x, a))) {
        norm = false;
        break;
      }
    if (norm) out.members.push_back(x);
  }
  return out;
}

std::vector<Subset> conjugacy_classes(const FiniteGroup& g) {
  std::vector<char> done(g.order(), 0);
  std::vector<Subset> classes;
  for (int x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    std::vector<char> in(g.order(), 0);
    std::vector<int> cls;
    for (int y = 0; y < g.order(); ++y) {
      int c = g.conj(y, x);
      if (!in[c]) {
        in[c] = 1;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    for (int c : cls) done[c] = 1;
    classes.push_back(Subset{&g, std::move(cls)});
  }
  return classes;
}

std::vector<int> conjugate_type(const FiniteGroup& g) {
  std::vector<int> sizes;
  for (const Subset& c : conjugacy_classes(g)) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  return sizes;
}

std::vector<std::vector<int>> left_cosets(const FiniteGroup& g, const Subset& z) {
  std::vector<char> done(g.order(), 0);
  std::vector<std::vector<int>> cosets;
  for (int x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    std::vector<int> coset;
    for (int s : z.members) coset.push_back(g.mul(x, s));
    std::sort(coset.begin(), coset.end());
    for (int e : coset) done[e] = 1;
    cosets.push_back(std::move(coset));
  }
  // already ordered by minimal element: x scans upward and skips seen cosets
  return cosets;
}

Quotient quotient_group(const FiniteGroup& g, const Subset& n) {
  if (n.parent != &g || !is_subgroup(n)) fail(ErrorCode::NotSubgroup, "N is not a subgroup");
  for (int x = 0; x < g.order(); ++x)
    for (int a : n.members)
      if (!n.contains(g.conj(x, a)))
        fail(ErrorCode::NotNormal, "conjugate of " + std::to_string(a) + " by " +
                                       std::to_string(x) + " escapes N");

  auto cosets = left_cosets(g, n);
  int q = static_cast<int>(cosets.size());
  std::vector<int> proj(g.order(), -1);
  std::vector<int> reps(q);
  for (int c = 0; c < q; ++c) {
    reps[c] = cosets[c].front();
    for (int e : cosets[c]) proj[e] = c;
  }
  std::vector<int> table(static_cast<size_t>(q) * q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) table[a * q + b] = proj[g.mul(reps[a], reps[b])];
  FiniteGroup qg = FiniteGroup::trusted(q, std::move(table), g.name() + "/N");
  return Quotient{std::move(qg), std::move(proj), std::move(reps)};
}

Subset canonical_transversal(const FiniteGroup& g, const Subset& z) {
  if (z.parent != &g || !is_subgroup(z)) fail(ErrorCode::NotSubgroup, "Z is not a subgroup");
  Subset t{&g, {}};
  for (const auto& coset : left_cosets(g, z)) t.members.push_back(coset.front());
  std::sort(t.members.begin(), t.members.end());
  return t;
}

SubgroupGroup subgroup_as_group(const FiniteGroup& g, const Subset& s, std::string name) {
  if (s.parent != &g || !is_subgroup(s)) fail(ErrorCode::NotSubgroup, "not a subgroup");
  int m = s.size();
  std::vector<int> from(g.order(), -1);
  for (int i = 0; i < m; ++i) from[s.members[i]] = i;
  std::vector<int> table(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) table[i * m + j] = from[g.mul(s.members[i], s.members[j])];
  if (name.empty()) name = g.name() + "-sub" + std::to_string(m);
  FiniteGroup sg = FiniteGroup::trusted(m, std::move(table), std::move(name));
  return SubgroupGroup{std::move(sg), s.members, std::move(from)};
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace {

// p'-part of x: x^(m) where order(x) = p^k * m with gcd(m, p) = 1.
int p_part(const FiniteGroup& g, int x, int p) {
  int ord = g.element_order(x);
  while (ord % p == 0) ord /= p;
  return g.power(x, ord);
}

}  // namespace

Subset sylow_subgroup(const FiniteGroup& g, int p) {
  if (!is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (g.order() % p != 0)
    fail(ErrorCode::DoesNotDivide, std::to_string(p) + " does not divide the group order");
  int p_power = 1;
  int rest = g.order();
  while (rest % p == 0) {
    rest /= p;
    p_power *= p;
  }

  // Seed with the p-part of any element of order divisible by p (Cauchy).
  int seed = -1;
  for (int x = 1; x < g.order(); ++x)
    if (g.element_order(x) % p == 0) {
      seed = p_part(g, x, p);
      break;
    }
  Subset sub = subgroup_closure(g, std::vector<int>{seed});

  while (sub.size() < p_power) {
    Subset nm = normalizer(g, sub);
    bool grown = false;
    for (int x : nm.members) {
      if (sub.contains(x)) continue;
      int h = p_part(g, x, p);
      if (h != 0 && !sub.contains(h)) {
        std::vector<int> gens = sub.members;
        gens.push_back(h);
        sub = subgroup_closure(g, gens);
        grown = true;
        break;
      }
    }
    if (!grown)
      fail(ErrorCode::DecompositionNotFound, "normalizer climbing stalled (internal error)");
  }
  return sub;
}

Subset frattini_p_group(const FiniteGroup& g, int p) {
  if (!is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  int n = g.order();
  while (n % p == 0) n /= p;
  if (n != 1) fail(ErrorCode::NotPGroup, g.name() + " is not a " + std::to_string(p) + "-group");
  std::vector<int> gens = derived_subgroup(g).members;
  for (int x = 0; x < g.order(); ++x) gens.push_back(g.power(x, p));
  return subgroup_closure(g, gens);
}

}  // namespace tcg
