#pragma once

// Concrete groups of order p^2 q with cyclic Sylow p-subgroup and of order pq,
// realised as semidirect products <a> . <b> with a^-1 b a = b^t. Elements are
// stored in the normal form a^v b^u and indexed by v * n_mod + u, which is the
// lexicographic (v, u) order every canonical form in this library derives from.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "arith.hpp"
#include "cayley.hpp"
#include "error.hpp"

namespace skewbrace {

enum class Family { P2QType1, P2QType2, P2QType3, P2QType4, PQCyclic, PQMetacyclic };

inline std::string to_string(Family f) {
  switch (f) {
  case Family::P2QType1: return "P2Q-Type1";
  case Family::P2QType2: return "P2Q-Type2";
  case Family::P2QType3: return "P2Q-Type3";
  case Family::P2QType4: return "P2Q-Type4";
  case Family::PQCyclic: return "PQ-Cyclic";
  case Family::PQMetacyclic: return "PQ-Metacyclic";
  }
  return "?";
}

inline bool is_p2q(Family f) {
  return f != Family::PQCyclic && f != Family::PQMetacyclic;
}

/// The isomorphism type a family realises.
inline IsoType iso_type_of(Family f) {
  switch (f) {
  case Family::P2QType1: return IsoType::Type1;
  case Family::P2QType2: return IsoType::Type2;
  case Family::P2QType3: return IsoType::Type3;
  case Family::P2QType4: return IsoType::Type4;
  case Family::PQCyclic: return IsoType::PQCyclic;
  case Family::PQMetacyclic: return IsoType::PQMetacyclic;
  }
  return IsoType::Other;
}

inline Family p2q_family(int type) {
  switch (type) {
  case 1: return Family::P2QType1;
  case 2: return Family::P2QType2;
  case 3: return Family::P2QType3;
  case 4: return Family::P2QType4;
  default: throw InvalidInput("invalid-type", "group type must be 1..4, got " + std::to_string(type));
  }
}

/// 1..4 for the p^2 q types, 0 otherwise.
inline int p2q_type_number(IsoType t) {
  switch (t) {
  case IsoType::Type1: return 1;
  case IsoType::Type2: return 2;
  case IsoType::Type3: return 3;
  case IsoType::Type4: return 4;
  default: return 0;
  }
}

struct GroupSpec {
  Family family = Family::P2QType1;
  std::int64_t p = 0;
  std::int64_t q = 0;
  int n_mod = 0; // order of the normal generator b
  int c_mod = 0; // order of the complement generator a
  std::int64_t t = 1;

  int order() const noexcept { return n_mod * c_mod; }
  bool operator==(const GroupSpec&) const = default;
};

struct GroupElement {
  int v = 0; // exponent of a
  int u = 0; // exponent of b

  bool operator==(const GroupElement&) const = default;
  auto operator<=>(const GroupElement&) const = default;
};

inline constexpr int kMaxGroupOrder = 10000;

inline GroupSpec make_group(Family family, std::int64_t p, std::int64_t q) {
  GroupSpec s;
  s.family = family;
  s.p = p;
  s.q = q;
  if (is_p2q(family)) {
    const DivisibilityProfile prof = divisibility_profile(p, q);
    const int type = p2q_type_number(iso_type_of(family));
    if (!prof.admits(type))
      throw InvalidInput("inapplicable-type", "type " + std::to_string(type) +
                                                  " does not exist for p = " + std::to_string(p) +
                                                  ", q = " + std::to_string(q));
    const std::int64_t p2 = p * p;
    if (p2 * q > kMaxGroupOrder)
      throw InvalidInput("group-too-large", "p^2 q exceeds " + std::to_string(kMaxGroupOrder));
    switch (family) {
    case Family::P2QType1:
      s.n_mod = static_cast<int>(q);
      s.c_mod = static_cast<int>(p2);
      s.t = 1;
      break;
    case Family::P2QType2:
      s.n_mod = static_cast<int>(q);
      s.c_mod = static_cast<int>(p2);
      s.t = canonical_action_exponent(p, Modulus(q));
      break;
    case Family::P2QType3:
      s.n_mod = static_cast<int>(q);
      s.c_mod = static_cast<int>(p2);
      s.t = canonical_action_exponent(p2, Modulus(q));
      break;
    case Family::P2QType4:
      s.n_mod = static_cast<int>(p2);
      s.c_mod = static_cast<int>(q);
      s.t = canonical_action_exponent(q, Modulus(p2));
      break;
    default: break;
    }
    return s;
  }
  if (!is_prime(p) || !is_prime(q))
    throw InvalidInput("not-prime", "p and q must be prime");
  if (p <= q)
    throw InvalidInput("invalid-pq", "order-pq families need p > q");
  if (p * q > kMaxGroupOrder)
    throw InvalidInput("group-too-large", "pq exceeds " + std::to_string(kMaxGroupOrder));
  s.n_mod = static_cast<int>(p);
  s.c_mod = static_cast<int>(q);
  if (family == Family::PQCyclic) {
    s.t = 1;
  } else {
    if ((p - 1) % q != 0)
      throw InvalidInput("inapplicable-type", "C_p x| C_q needs q | p - 1");
    s.t = canonical_action_exponent(q, Modulus(p));
  }
  return s;
}

// Normal-form arithmetic straight from the presentation.

inline GroupElement mul(const GroupSpec& s, GroupElement x, GroupElement y) {
  const std::int64_t twist = mod_pow(s.t, static_cast<std::uint64_t>(y.v), Modulus(s.n_mod));
  return {(x.v + y.v) % s.c_mod,
          static_cast<int>((x.u * twist + y.u) % s.n_mod)};
}

inline GroupElement inv_elem(const GroupSpec& s, GroupElement x) {
  // (a^v b^u)^-1 = b^-u a^-v = a^-v b^(-u t^-v)
  const int v = (s.c_mod - x.v) % s.c_mod;
  const std::int64_t twist = mod_pow(s.t, static_cast<std::uint64_t>(v), Modulus(s.n_mod));
  const std::int64_t u = (static_cast<std::int64_t>(s.n_mod - x.u) % s.n_mod) * twist % s.n_mod;
  return {v, static_cast<int>(u)};
}

inline int elem_order(const GroupSpec& s, GroupElement x) {
  GroupElement y = x;
  int k = 1;
  while (y != GroupElement{}) {
    y = mul(s, y, x);
    ++k;
  }
  return k;
}

inline std::vector<GroupElement> elements(const GroupSpec& s) {
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(s.order()));
  for (int v = 0; v < s.c_mod; ++v)
    for (int u = 0; u < s.n_mod; ++u)
      out.push_back({v, u});
  return out;
}

/// Index-based view of a GroupSpec with a precomputed multiplication table.
class Group {
public:
  explicit Group(GroupSpec spec) : spec_(spec), n_(spec.order()) {
    std::vector<int> table(static_cast<std::size_t>(n_) * n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        table[static_cast<std::size_t>(i) * n_ + j] = index(skewbrace::mul(spec_, element(i), element(j)));
    cayley_ = CayleyTable(n_, std::move(table));
    inverse_.resize(n_);
    order_.resize(n_);
    for (int i = 0; i < n_; ++i) {
      inverse_[i] = index(inv_elem(spec_, element(i)));
      int y = i;
      int k = 1;
      while (y != 0) {
        y = mul(y, i);
        ++k;
      }
      order_[i] = k;
    }
  }

  const GroupSpec& spec() const noexcept { return spec_; }
  int order() const noexcept { return n_; }
  static constexpr int identity() noexcept { return 0; }

  int index(GroupElement x) const noexcept { return x.v * spec_.n_mod + x.u; }
  GroupElement element(int i) const noexcept { return {i / spec_.n_mod, i % spec_.n_mod}; }
  int gen_a() const noexcept { return index({1, 0}); }
  int gen_b() const noexcept { return index({0, 1}); }

  int mul(int x, int y) const { return cayley_.at(x, y); }
  int inv(int x) const { return inverse_[x]; }
  int order_of(int x) const { return order_[x]; }
  /// g^-1 x g
  int conj(int x, int g) const { return mul(mul(inv(g), x), g); }
  int pow(int x, std::int64_t k) const {
    const int o = order_[x];
    k %= o;
    if (k < 0)
      k += o;
    int r = 0;
    for (std::int64_t i = 0; i < k; ++i)
      r = mul(r, x);
    return r;
  }
  bool is_abelian() const {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (mul(i, j) != mul(j, i))
          return false;
    return true;
  }

  const CayleyTable& cayley() const noexcept { return cayley_; }

private:
  GroupSpec spec_;
  int n_;
  CayleyTable cayley_;
  std::vector<int> inverse_;
  std::vector<int> order_;
};

/// Sorted member list of the subgroup generated by `gens`.
inline std::vector<int> generated_subgroup(const Group& g, const std::vector<int>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> members{0};
  in[0] = 1;
  for (std::size_t k = 0; k < members.size(); ++k)
    for (int s : gens) {
      const int y = g.mul(members[k], s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  std::sort(members.begin(), members.end());
  return members;
}

struct CyclicSubgroup {
  int generator = 0; // smallest-index generator
  std::vector<int> members;
};

/// All cyclic subgroups of the given order, ordered by canonical generator.
inline std::vector<CyclicSubgroup> cyclic_subgroups(const Group& g, int order) {
  std::vector<CyclicSubgroup> out;
  std::vector<char> taken(g.order(), 0);
  for (int x = 0; x < g.order(); ++x) {
    if (g.order_of(x) != order || taken[x])
      continue;
    CyclicSubgroup c{x, generated_subgroup(g, {x})};
    for (int y : c.members)
      if (g.order_of(y) == order)
        taken[y] = 1;
    out.push_back(std::move(c));
  }
  return out;
}

struct Automorphism {
  GroupElement img_a;
  GroupElement img_b;
  std::vector<int> perm; // perm[x] = x^alpha

  int apply(int x) const { return perm[x]; }
};

inline std::int64_t closed_form_aut_order(const GroupSpec& s) {
  const std::int64_t p = s.p, q = s.q;
  switch (s.family) {
  case Family::P2QType1: return p * (p - 1) * (q - 1);
  case Family::P2QType2: return p * q * (q - 1);
  case Family::P2QType3: return q * (q - 1);
  case Family::P2QType4: return p * p * p * (p - 1);
  case Family::PQCyclic: return (p - 1) * (q - 1);
  case Family::PQMetacyclic: return p * (p - 1);
  }
  return 0;
}

/// Aut(G) found by exhaustive search over generator images, canonically
/// ordered by (index(img_a), index(img_b)). Composition is right-to-left in
/// the action sense: compose(i, j) applies i first, then j.
class AutGroup {
public:
  explicit AutGroup(const Group& g) : n_(g.order()), gen_a_(g.gen_a()), gen_b_(g.gen_b()) {
    const GroupSpec& s = g.spec();
    std::vector<int> seen(n_, -1);
    int stamp = 0;
    for (int x = 0; x < n_; ++x) {
      if (g.order_of(x) != s.c_mod)
        continue;
      for (int y = 0; y < n_; ++y) {
        if (g.order_of(y) != s.n_mod)
          continue;
        if (g.conj(y, x) != g.pow(y, s.t))
          continue;
        std::vector<int> xpow(s.c_mod), ypow(s.n_mod);
        xpow[0] = ypow[0] = 0;
        for (int v = 1; v < s.c_mod; ++v)
          xpow[v] = g.mul(xpow[v - 1], x);
        for (int u = 1; u < s.n_mod; ++u)
          ypow[u] = g.mul(ypow[u - 1], y);
        std::vector<int> perm(n_);
        bool bijective = true;
        ++stamp;
        for (int i = 0; i < n_ && bijective; ++i) {
          const GroupElement e = g.element(i);
          perm[i] = g.mul(xpow[e.v], ypow[e.u]);
          bijective = seen[perm[i]] != stamp;
          seen[perm[i]] = stamp;
        }
        if (!bijective)
          continue;
        elems_.push_back({g.element(x), g.element(y), std::move(perm)});
      }
    }
    const std::int64_t expected = closed_form_aut_order(s);
    if (static_cast<std::int64_t>(elems_.size()) != expected)
      throw ConsistencyFailure("aut-size-mismatch",
                               "found " + std::to_string(elems_.size()) +
                                   " automorphisms, expected " + std::to_string(expected));
    for (std::size_t i = 0; i < elems_.size(); ++i)
      lookup_[key(elems_[i].perm[gen_a_], elems_[i].perm[gen_b_])] = static_cast<int>(i);

    const int m = size();
    identity_ = *find_by_images(gen_a_, gen_b_);
    compose_.resize(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        const auto& ai = elems_[i];
        const auto& aj = elems_[j];
        compose_[static_cast<std::size_t>(i) * m + j] =
            *find_by_images(aj.perm[ai.perm[gen_a_]], aj.perm[ai.perm[gen_b_]]);
      }
    inverse_.resize(m);
    order_.resize(m);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j)
        if (compose(i, j) == identity_) {
          inverse_[i] = j;
          break;
        }
      int y = i;
      int k = 1;
      while (y != identity_) {
        y = compose(y, i);
        ++k;
      }
      order_[i] = k;
    }
  }

  int size() const noexcept { return static_cast<int>(elems_.size()); }
  int identity() const noexcept { return identity_; }
  const Automorphism& at(int i) const { return elems_[i]; }
  const std::vector<Automorphism>& elements() const noexcept { return elems_; }
  int apply(int alpha, int x) const { return elems_[alpha].perm[x]; }
  int compose(int i, int j) const { return compose_[static_cast<std::size_t>(i) * size() + j]; }
  int inverse(int i) const { return inverse_[i]; }
  int order_of(int i) const { return order_[i]; }
  int pow(int i, std::int64_t k) const {
    const int o = order_[i];
    k %= o;
    if (k < 0)
      k += o;
    int r = identity_;
    for (std::int64_t j = 0; j < k; ++j)
      r = compose(r, i);
    return r;
  }

  /// The automorphism sending a to `img_a` and b to `img_b`, if any.
  std::optional<int> find_by_images(int img_a, int img_b) const {
    auto it = lookup_.find(key(img_a, img_b));
    if (it == lookup_.end())
      return std::nullopt;
    return it->second;
  }
  /// Locates an arbitrary permutation of G; nullopt if it is not an automorphism.
  std::optional<int> find(const std::vector<int>& perm) const {
    auto idx = find_by_images(perm[gen_a_], perm[gen_b_]);
    if (!idx || elems_[*idx].perm != perm)
      return std::nullopt;
    return idx;
  }

private:
  std::int64_t key(int x, int y) const { return static_cast<std::int64_t>(x) * n_ + y; }

  int n_;
  int gen_a_;
  int gen_b_;
  int identity_ = 0;
  std::vector<Automorphism> elems_;
  std::unordered_map<std::int64_t, int> lookup_;
  std::vector<int> compose_;
  std::vector<int> inverse_;
  std::vector<int> order_;
};

/// A group together with its automorphism group; immutable once built and
/// shared read-only by every gamma function on it.
struct GroupContext {
  explicit GroupContext(const GroupSpec& s) : spec(s), group(s), aut(group) {
    inner.resize(group.order());
    for (int g = 0; g < group.order(); ++g)
      inner[g] = *aut.find_by_images(group.conj(group.gen_a(), g), group.conj(group.gen_b(), g));
  }

  GroupSpec spec;
  Group group;
  AutGroup aut;
  std::vector<int> inner; // inner[g] = index of x -> g^-1 x g
};

using ContextPtr = std::shared_ptr<const GroupContext>;

inline ContextPtr make_context(const GroupSpec& s) { return std::make_shared<const GroupContext>(s); }
inline ContextPtr make_context(Family f, std::int64_t p, std::int64_t q) {
  return make_context(make_group(f, p, q));
}

/// Inner automorphism x -> g^-1 x g.
inline int iota(const GroupContext& ctx, int g) { return ctx.inner[g]; }

/// The order-p automorphism psi attached to a Sylow subgroup <a_gen>.
/// Type 4: a_gen (order q) is fixed and b -> b^(1+p).
/// Type 2: b is fixed and a_gen (order p^2) -> a_gen^(1+p).
inline int psi_for_A(const GroupContext& ctx, int a_gen) {
  const Group& G = ctx.group;
  const std::int64_t p = ctx.spec.p;
  std::optional<int> psi;
  if (ctx.spec.family == Family::P2QType4) {
    if (G.order_of(a_gen) != ctx.spec.q)
      throw InvalidInput("bad-generator", "psi on type 4 needs an element of order q");
    for (int i = 0; i < ctx.aut.size() && !psi; ++i)
      if (ctx.aut.apply(i, a_gen) == a_gen && ctx.aut.apply(i, G.gen_b()) == G.pow(G.gen_b(), 1 + p))
        psi = i;
  } else if (ctx.spec.family == Family::P2QType2) {
    if (G.order_of(a_gen) != p * p)
      throw InvalidInput("bad-generator", "psi on type 2 needs an element of order p^2");
    for (int i = 0; i < ctx.aut.size() && !psi; ++i)
      if (ctx.aut.apply(i, G.gen_b()) == G.gen_b() && ctx.aut.apply(i, a_gen) == G.pow(a_gen, 1 + p))
        psi = i;
  } else {
    throw InvalidInput("bad-family", "psi is defined for types 2 and 4 only");
  }
  if (!psi)
    throw ConsistencyFailure("psi-not-found", "no automorphism with the psi images");
  return *psi;
}

} // namespace skewbrace
