#include "tcg/constructions.hpp"

#include <algorithm>
#include <cctype>

#include "tcg/cayley_io.hpp"

namespace tcg {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

FiniteGroup validated(int n, std::vector<int> table, std::string name) {
  return FiniteGroup::validate_flat(n, std::move(table), std::move(name));
}

}  // namespace

FiniteGroup cyclic(int n) {
  if (n < 1) fail(ErrorCode::ZeroOrder, "cyclic group order must be positive");
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i * n + j] = (i + j) % n;
  return validated(n, std::move(table), "C" + std::to_string(n));
}

namespace {

// Shared normal form x^i y^j (i mod m, j mod 2) with y x y^-1 = x^-1 and
// y^2 = x^t. t = 0 gives dihedral, m = 4/t = 2 gives Q8.
FiniteGroup two_generator_metacyclic(int m, int t, std::string name) {
  int n = 2 * m;
  auto idx = [m](int i, int j) { return j * m + mod(i, m); };
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < 2; ++l) {
          // (x^i y^j)(x^k y^l): y x^k = x^-k y
          int e = i + (j ? -k : k);
          int f = j + l;
          if (f == 2) {
            e += t;
            f = 0;
          }
          table[idx(i, j) * n + idx(k, l)] = idx(e, f);
        }
  return validated(n, std::move(table), std::move(name));
}

}  // namespace

FiniteGroup dihedral(int order) {
  if (order < 6 || order % 2 != 0)
    fail(ErrorCode::OrderTooSmall, "dihedral order must be even and at least 6");
  return two_generator_metacyclic(order / 2, 0, "D" + std::to_string(order));
}

FiniteGroup quaternion8() { return two_generator_metacyclic(4, 2, "Q8"); }

FiniteGroup heisenberg_mod_p(int p) {
  if (!is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  int n = p * p * p;
  if (n > order_cap()) fail(ErrorCode::OrderCapExceeded, "order p^3 exceeds cap");
  auto idx = [p](int i, int j, int k) { return (mod(i, p) * p + mod(j, p)) * p + mod(k, p); };
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      for (int k = 0; k < p; ++k)
        for (int I = 0; I < p; ++I)
          for (int J = 0; J < p; ++J)
            for (int K = 0; K < p; ++K) {
              // b^j a^I = a^I b^j c^(-jI)
              int a = idx(i, j, k);
              int b = idx(I, J, K);
              table[a * n + b] = idx(i + I, j + J, k + K - j * I);
            }
  std::string name = p == 3 ? "M(3)" : "H(" + std::to_string(p) + ")";
  return validated(n, std::move(table), std::move(name));
}

FiniteGroup group_J() {
  // Normal form a^i b^j c^k, i in 0..3, j in 0..1, k in 0..3, with
  //   c^k a^I = a^((-1)^k I) c^k,   c^k b = b c^-k,   b^2 = a^2,  ab = ba.
  // callers reduce the b exponent to 0..1 before indexing
  auto idx = [](int i, int j, int k) { return (mod(i, 4) * 2 + j) * 4 + mod(k, 4); };
  int n = 32;
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 4; ++k)
        for (int I = 0; I < 4; ++I)
          for (int J = 0; J < 2; ++J)
            for (int K = 0; K < 4; ++K) {
              int sigma = (k % 2 == 0) ? 1 : -1;  // c^k a^I = a^(sigma I) c^k
              int tau = (J % 2 == 0) ? 1 : -1;    // c^k b^J = b^J c^(tau k)
              int e = i + sigma * I;
              int f = j + J;
              int h = tau * k + K;
              if (f >= 2) {
                e += 2;
                f -= 2;
              }
              table[idx(i, j, k) * n + idx(I, J, K)] = idx(e, f, h);
            }
  return validated(n, std::move(table), "J");
}

namespace {

std::vector<int> product_table(const FiniteGroup& g, const FiniteGroup& h) {
  int ng = g.order(), nh = h.order();
  int n = ng * nh;
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ga = a / nh, ha = a % nh, gb = b / nh, hb = b % nh;
      table[static_cast<size_t>(a) * n + b] = g.mul(ga, gb) * nh + h.mul(ha, hb);
    }
  return table;
}

}  // namespace

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  long long n = static_cast<long long>(g.order()) * h.order();
  if (n > order_cap())
    fail(ErrorCode::OrderCapExceeded, "direct product order " + std::to_string(n) + " exceeds cap");
  return FiniteGroup::trusted(static_cast<int>(n), product_table(g, h),
                              g.name() + "x" + h.name());
}

FiniteGroup central_product(const FiniteGroup& g, const FiniteGroup& h,
                            const std::vector<int>& theta) {
  Subset zg = center(g);
  Subset zh = center(h);
  if (static_cast<int>(theta.size()) != g.order())
    fail(ErrorCode::NotIsomorphism, "theta must be indexed by elements of G");
  // theta must map Z(G) bijectively onto Z(H) and respect products.
  std::vector<char> hit(h.order(), 0);
  for (int z : zg.members) {
    int t = theta[z];
    if (t < 0 || t >= h.order() || !zh.contains(t) || hit[t])
      fail(ErrorCode::NotIsomorphism, "theta is not a bijection Z(G) -> Z(H)");
    hit[t] = 1;
  }
  if (zg.size() != zh.size()) fail(ErrorCode::CentersNotIsomorphic, "centers differ in size");
  for (int a : zg.members)
    for (int b : zg.members)
      if (theta[g.mul(a, b)] != h.mul(theta[a], theta[b]))
        fail(ErrorCode::NotIsomorphism, "theta is not a homomorphism");

  // Build G x H without the cap (intermediate only), then kill the diagonal.
  int nh = h.order();
  int n = g.order() * nh;
  FiniteGroup prod = FiniteGroup::trusted(n, product_table(g, h), "tmp");
  std::vector<int> nmembers;
  for (int z : zg.members) nmembers.push_back(z * nh + h.inv(theta[z]));
  std::sort(nmembers.begin(), nmembers.end());
  Subset nsub{&prod, std::move(nmembers)};
  Quotient q = quotient_group(prod, nsub);
  FiniteGroup out = std::move(q.group);
  if (out.order() > order_cap())
    fail(ErrorCode::OrderCapExceeded, "central product order exceeds cap");
  out.set_name(g.name() + "o" + h.name());
  return out;
}

FiniteGroup central_product(const FiniteGroup& g, const FiniteGroup& h) {
  SubgroupGroup zg = subgroup_as_group(g, center(g), "Z");
  SubgroupGroup zh = subgroup_as_group(h, center(h), "Z");
  auto iso = group_isomorphic(zg.group, zh.group);
  if (!iso) fail(ErrorCode::CentersNotIsomorphic, "centers are not isomorphic");
  std::vector<int> theta(g.order(), -1);
  for (int i = 0; i < zg.group.order(); ++i) theta[zg.to_parent[i]] = zh.to_parent[iso->map[i]];
  return central_product(g, h, theta);
}

FiniteGroup extraspecial(int p, int n, ExtraspecialType type) {
  if (!is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (n < 1) fail(ErrorCode::OrderTooSmall, "extraspecial needs n >= 1");
  if (p != 2 && type == ExtraspecialType::Minus)
    fail(ErrorCode::UnsupportedType, "minus type for odd p is not supported");
  long long order = 1;
  for (int i = 0; i < 2 * n + 1; ++i) order *= p;
  if (order > order_cap()) fail(ErrorCode::OrderCapExceeded, "extraspecial order exceeds cap");

  auto base = [&](bool minus) {
    if (p == 2) return minus ? quaternion8() : dihedral(8);
    return heisenberg_mod_p(p);
  };
  FiniteGroup acc = base(type == ExtraspecialType::Minus);
  for (int i = 1; i < n; ++i) acc = central_product(acc, base(false));
  std::string tag = type == ExtraspecialType::Minus ? "-" : "+";
  acc.set_name("E(" + std::to_string(p) + "^" + std::to_string(2 * n + 1) + tag + ")");
  // Certify the composed table post hoc.
  return FiniteGroup::validate_flat(acc.order(), acc.flat_table(), acc.name());
}

bool is_extraspecial(const FiniteGroup& g) {
  int n = g.order();
  int p = 0;
  for (int d = 2; d <= n; ++d)
    if (n % d == 0) {
      p = d;
      break;
    }
  int rest = n;
  while (rest % p == 0) rest /= p;
  if (rest != 1) fail(ErrorCode::NotPGroup, g.name() + " is not a p-group");
  Subset z = center(g);
  if (z.size() != p) return false;
  Subset d = derived_subgroup(g);
  Subset f = frattini_p_group(g, p);
  return d.members == z.members && f.members == z.members;
}

namespace {

struct SpecParser {
  const std::string& s;
  size_t pos = 0;

  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorCode::ParseError, "spec parse error at position " + std::to_string(pos) + ": " + msg);
  }

  bool eat(char c) {
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  std::string ident() {
    size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (pos == start) error("expected a constructor name");
    return s.substr(start, pos - start);
  }

  int integer() {
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) error("expected an integer");
    return std::stoi(s.substr(start, pos - start));
  }

  std::string until_delim() {
    size_t start = pos;
    while (pos < s.size() && s[pos] != ',' && s[pos] != ')') ++pos;
    return s.substr(start, pos - start);
  }

  FiniteGroup parse() {
    std::string name = ident();
    if (name == "m3") return heisenberg_mod_p(3);
    if (name == "jgroup") return group_J();
    if (name == "direct" || name == "central") {
      if (!eat('(')) error("expected '('");
      FiniteGroup a = parse();
      if (!eat(',')) error("expected ','");
      FiniteGroup b = parse();
      if (!eat(')')) error("expected ')'");
      return name == "direct" ? direct_product(a, b) : central_product(a, b);
    }
    if (!eat(':')) error("expected ':' after " + name);
    if (name == "cyclic") return cyclic(integer());
    if (name == "dihedral") return dihedral(integer());
    if (name == "quaternion") {
      if (integer() != 8) error("only quaternion:8 is supported");
      return quaternion8();
    }
    if (name == "heisenberg") return heisenberg_mod_p(integer());
    if (name == "file") return read_cayley_file(until_delim());
    if (name == "extraspecial") {
      if (!eat('p') || !eat('=')) error("expected p=<prime>");
      int p = integer();
      if (!eat(',') || !eat('n') || !eat('=')) error("expected n=<int>");
      int n = integer();
      if (!eat(',') || !eat('t') || !eat('y') || !eat('p') || !eat('e') || !eat('='))
        error("expected type=<+|->");
      ExtraspecialType t;
      if (eat('+'))
        t = ExtraspecialType::Plus;
      else if (eat('-'))
        t = ExtraspecialType::Minus;
      else
        error("type must be + or -");
      return extraspecial(p, n, t);
    }
    error("unknown constructor '" + name + "'");
  }
};

}  // namespace

FiniteGroup build_from_spec(const std::string& spec) {
  SpecParser parser{spec};
  FiniteGroup g = parser.parse();
  if (parser.pos != spec.size()) parser.error("trailing input");
  return g;
}

}  // namespace tcg
