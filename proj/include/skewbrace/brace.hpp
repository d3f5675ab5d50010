#pragma once

// Gamma functions gamma : G -> Aut(G) with
//   gamma(g^gamma(h) h) = gamma(g) gamma(h),
// the circle operation g o h = g^gamma(h) h they induce, and the skew brace
// records built from them. Right-brace convention throughout:
//   (g h) o k = (g o k) k^-1 (h o k).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cayley.hpp"
#include "error.hpp"
#include "groups.hpp"
#include "holomorph.hpp"

namespace skewbrace {

class GammaFunction {
public:
  GammaFunction(ContextPtr ctx, std::vector<int> table) : ctx_(std::move(ctx)), table_(std::move(table)) {
    if (static_cast<int>(table_.size()) != ctx_->group.order())
      throw InvalidInput("malformed-gamma", "gamma table must have one entry per element");
    for (int a : table_)
      if (a < 0 || a >= ctx_->aut.size())
        throw InvalidInput("malformed-gamma", "gamma entry is not an automorphism index");
  }

  static GammaFunction identity(ContextPtr ctx) {
    const int n = ctx->group.order();
    const int id = ctx->aut.identity();
    return GammaFunction(std::move(ctx), std::vector<int>(n, id));
  }

  const GroupContext& context() const noexcept { return *ctx_; }
  const ContextPtr& context_ptr() const noexcept { return ctx_; }
  int size() const noexcept { return static_cast<int>(table_.size()); }
  int operator()(int g) const { return table_[g]; }
  const std::vector<int>& table() const noexcept { return table_; }

  bool operator==(const GammaFunction& o) const { return table_ == o.table_; }
  bool operator<(const GammaFunction& o) const { return table_ < o.table_; }

private:
  ContextPtr ctx_;
  std::vector<int> table_;
};

/// gamma(y) = iota(y^-1); its circle operation is the opposite group law.
inline GammaFunction opposite_gamma(const ContextPtr& ctx) {
  std::vector<int> t(ctx->group.order());
  for (int y = 0; y < ctx->group.order(); ++y)
    t[y] = iota(*ctx, ctx->group.inv(y));
  return GammaFunction(ctx, std::move(t));
}

struct GfeCheck {
  bool ok = true;
  int g = -1; // first failing pair, if any
  int h = -1;

  explicit operator bool() const noexcept { return ok; }
};

inline GfeCheck check_gfe(const GammaFunction& gamma) {
  const GroupContext& c = gamma.context();
  const int n = c.group.order();
  for (int h = 0; h < n; ++h)
    for (int g = 0; g < n; ++g) {
      const int x = c.group.mul(c.aut.apply(gamma(h), g), h);
      if (gamma(x) != c.aut.compose(gamma(g), gamma(h)))
        return {false, g, h};
    }
  return {};
}

inline int circle(const GammaFunction& gamma, int g, int h) {
  const GroupContext& c = gamma.context();
  return c.group.mul(c.aut.apply(gamma(h), g), h);
}

/// (a^-1)^(gamma(a)^-1)
inline int circle_inverse(const GammaFunction& gamma, int a) {
  const GroupContext& c = gamma.context();
  return c.aut.apply(c.aut.inverse(gamma(a)), c.group.inv(a));
}

inline CayleyTable circle_table(const GammaFunction& gamma) {
  const int n = gamma.size();
  std::vector<int> data(static_cast<std::size_t>(n) * n);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      data[static_cast<std::size_t>(g) * n + h] = circle(gamma, g, h);
  return CayleyTable(n, std::move(data));
}

inline std::vector<int> kernel(const GammaFunction& gamma) {
  std::vector<int> k;
  const int id = gamma.context().aut.identity();
  for (int g = 0; g < gamma.size(); ++g)
    if (gamma(g) == id)
      k.push_back(g);
  return k;
}

struct SkewBraceRecord {
  GammaFunction gamma;
  CayleyTable circle_table;
  IsoType circle_type = IsoType::Other;
  Fingerprint circle_fingerprint;
  std::vector<int> kernel;
  int orbit_id = -1;

  const std::vector<int>& canonical_key() const noexcept { return gamma.table(); }
};

inline constexpr int kExhaustiveBraceAxiomLimit = 63;

/// (g h) o k == (g o k) k^-1 (h o k) on every triple when |G| is at most
/// `exhaustive_limit`, otherwise on `samples` triples from a fixed-seed RNG.
inline bool brace_axiom_holds(const GammaFunction& gamma, const CayleyTable& circ,
                              int exhaustive_limit = kExhaustiveBraceAxiomLimit, int samples = 20000) {
  const Group& G = gamma.context().group;
  const int n = G.order();
  auto holds = [&](int g, int h, int k) {
    return circ.at(G.mul(g, h), k) == G.mul(G.mul(circ.at(g, k), G.inv(k)), circ.at(h, k));
  };
  if (n <= exhaustive_limit) {
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h)
        for (int k = 0; k < n; ++k)
          if (!holds(g, h, k))
            return false;
    return true;
  }
  std::mt19937 rng(0x5eed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int i = 0; i < samples; ++i)
    if (!holds(pick(rng), pick(rng), pick(rng)))
      return false;
  return true;
}

inline SkewBraceRecord brace_from_gamma(const GammaFunction& gamma) {
  if (auto chk = check_gfe(gamma); !chk)
    throw InvalidInput("gfe-violation", "gamma functional equation fails at (g, h) = (" +
                                            std::to_string(chk.g) + ", " + std::to_string(chk.h) + ")");
  const Group& G = gamma.context().group;
  SkewBraceRecord r{gamma, circle_table(gamma), IsoType::Other, {}, kernel(gamma), -1};
  const Classification cls = classify_trusted(r.circle_table);
  r.circle_type = cls.type;
  r.circle_fingerprint = cls.fingerprint;

  std::vector<char> in_ker(G.order(), 0);
  for (int k : r.kernel)
    in_ker[k] = 1;
  for (int x : r.kernel)
    for (int y : r.kernel)
      if (!in_ker[G.mul(x, y)])
        throw ConsistencyFailure("kernel-not-subgroup", "kernel is not closed under the group law");
  for (int a = 0; a < G.order(); ++a) {
    const int ai = circle_inverse(gamma, a);
    for (int k : r.kernel)
      if (!in_ker[r.circle_table.at(r.circle_table.at(ai, k), a)])
        throw ConsistencyFailure("kernel-not-normal", "kernel is not normal in the circle group");
  }
  if (!brace_axiom_holds(gamma, r.circle_table))
    throw ConsistencyFailure("brace-axiom-violation", "(g h) o k != (g o k) k^-1 (h o k)");
  return r;
}

/// {(gamma(g), g)}: the regular subgroup of Hol(G) attached to gamma, sorted.
inline std::vector<HolElement> nu_subgroup(const GammaFunction& gamma) {
  std::vector<HolElement> out;
  out.reserve(gamma.size());
  for (int g = 0; g < gamma.size(); ++g)
    out.push_back({gamma(g), g});
  std::sort(out.begin(), out.end());
  return out;
}

/// Reads gamma back from a regular subgroup: the member moving 1 to g is (gamma(g), g).
inline GammaFunction gamma_from_regular(const ContextPtr& ctx, const std::vector<HolElement>& members) {
  const int n = ctx->group.order();
  if (static_cast<int>(members.size()) != n)
    throw InvalidInput("not-regular", "a regular subgroup has exactly |G| members");
  std::vector<int> t(n, -1);
  for (const auto& m : members) {
    if (t[m.g] != -1)
      throw InvalidInput("not-regular", "two members move 1 to the same element");
    t[m.g] = m.alpha;
  }
  return GammaFunction(ctx, std::move(t));
}

/// x -> gamma(x^-1) iota(x^-1)
inline GammaFunction dual_gamma(const GammaFunction& gamma) {
  const GroupContext& c = gamma.context();
  std::vector<int> t(gamma.size());
  for (int x = 0; x < gamma.size(); ++x) {
    const int xi = c.group.inv(x);
    t[x] = c.aut.compose(gamma(xi), iota(c, xi));
  }
  return GammaFunction(gamma.context_ptr(), std::move(t));
}

/// g -> beta^-1 gamma(g^(beta^-1)) beta, the gamma function of nu(G)^beta.
inline GammaFunction conjugate_gamma(const GammaFunction& gamma, int beta) {
  const AutGroup& A = gamma.context().aut;
  const int bi = A.inverse(beta);
  std::vector<int> t(gamma.size());
  for (int g = 0; g < gamma.size(); ++g)
    t[g] = A.compose(A.compose(bi, gamma(A.apply(bi, g))), beta);
  return GammaFunction(gamma.context_ptr(), std::move(t));
}

inline bool is_morphism(const GammaFunction& gamma) {
  const GroupContext& c = gamma.context();
  for (int x = 0; x < gamma.size(); ++x)
    for (int y = 0; y < gamma.size(); ++y)
      if (gamma(c.group.mul(x, y)) != c.aut.compose(gamma(x), gamma(y)))
        return false;
  return true;
}

// ---------------------------------------------------------------------------
// Relative gamma functions on cyclic subgroups and their liftings.

struct RGF {
  ContextPtr ctx;
  int generator = 0;
  std::vector<int> domain; // sorted members of <generator>
  std::vector<int> values; // indexed by element; -1 outside the domain

  int operator()(int x) const { return values[x]; }
  bool contains(int x) const { return values[x] >= 0; }
};

inline bool is_morphism(const RGF& r) {
  const GroupContext& c = *r.ctx;
  for (int x : r.domain)
    for (int y : r.domain)
      if (r(c.group.mul(x, y)) != c.aut.compose(r(x), r(y)))
        return false;
  return true;
}

/// The unique RGF on A = <a> with gamma(a) = eta, given by
/// gamma(a^(e_s(k))) = eta^k where a^eta = a^s.
inline RGF rgf_from_generator(const ContextPtr& ctx, int a, int eta) {
  const Group& G = ctx->group;
  const AutGroup& A = ctx->aut;
  const int m = G.order_of(a);
  if (prime_power_base(m) == 0)
    throw InvalidInput("not-prime-power", "the generator must have prime-power order");
  const int image = A.apply(eta, a);
  int s = -1;
  for (int k = 0, y = 0; k < m; ++k, y = G.mul(y, a))
    if (y == image) {
      s = k;
      break;
    }
  if (s < 0)
    throw InvalidInput("not-invariant", "<a> is not invariant under eta");
  if (m % A.order_of(eta) != 0)
    throw InvalidInput("order-too-big", "ord(eta) does not divide ord(a)");

  RGF r{ctx, a, generated_subgroup(G, {a}), std::vector<int>(G.order(), -1)};
  if (m == 1) {
    r.values[0] = A.identity();
    return r;
  }
  const EsTable table(s, Modulus(m));
  int eta_k = A.identity();
  for (int k = 0; k < m; ++k) {
    r.values[G.pow(a, table.es(k))] = eta_k;
    eta_k = A.compose(eta_k, eta);
  }
  for (int h : r.domain)
    for (int g : r.domain) {
      const int x = G.mul(A.apply(r(h), g), h);
      if (!r.contains(x) || r(x) != A.compose(r(g), r(h)))
        throw ConsistencyFailure("rgf-gfe-violation", "constructed RGF fails the functional equation");
    }
  return r;
}

/// gamma(a b) = gamma'(a) for a in A, b in B, where G = A B.
inline GammaFunction lift_rgf(const RGF& rgf, const std::vector<int>& B) {
  const GroupContext& c = *rgf.ctx;
  const Group& G = c.group;
  const int n = G.order();
  std::vector<char> in_b(n, 0);
  for (int b : B)
    in_b[b] = 1;
  int meet = 0;
  for (int a : rgf.domain)
    if (in_b[a]) {
      ++meet;
      if (rgf(a) != c.aut.identity())
        throw InvalidInput("lift-precondition-failed",
                           "condition (1): gamma' is not trivial on the intersection of A and B");
    }
  if (static_cast<std::int64_t>(rgf.domain.size()) * static_cast<std::int64_t>(B.size()) != static_cast<std::int64_t>(n) * meet)
    throw InvalidInput("not-a-factorisation", "G is not the product A B");
  for (int a : rgf.domain) {
    const int theta = c.aut.compose(rgf(a), iota(c, a));
    for (int b : B)
      if (!in_b[c.aut.apply(theta, b)])
        throw InvalidInput("lift-precondition-failed",
                           "condition (2): B is not invariant under gamma'(a) iota(a)");
  }
  std::vector<int> t(n, -1);
  for (int a : rgf.domain)
    for (int b : B)
      t[G.mul(a, b)] = rgf(a);
  GammaFunction gamma(rgf.ctx, std::move(t));
  if (!check_gfe(gamma))
    throw ConsistencyFailure("lift-gfe-violation", "lifted map fails the functional equation");
  return gamma;
}

// ---------------------------------------------------------------------------
// Constraint propagation for the functional equation. Assigning gamma(g) and
// gamma(h) forces gamma(g^gamma(h) h) = gamma(g) gamma(h); the search closes
// every partial assignment under this rule and branches on the least
// unassigned element. The assigned set is then closed under the circle
// operation, hence a subgroup of (G, o), so its size must divide |domain|.

class GfePropagator {
public:
  GfePropagator(const GroupContext& ctx, std::vector<int> domain, std::vector<int> candidates)
      : ctx_(ctx), domain_(std::move(domain)), candidates_(std::move(candidates)),
        val_(ctx.group.order(), -1), in_domain_(ctx.group.order(), 0) {
    for (int x : domain_)
      in_domain_[x] = 1;
  }

  const std::vector<int>& candidates() const noexcept { return candidates_; }

  /// Calls on_solution(values) for every total assignment on the domain that
  /// extends the `fixed` pairs. `first_filter(i)` selects which candidate
  /// indices are tried at the first branching point (used to split work).
  template <class OnSolution, class Filter>
  void solve(const std::vector<std::pair<int, int>>& fixed, OnSolution&& on_solution, Filter&& first_filter) {
    reset();
    bool ok = assign(0, ctx_.aut.identity());
    for (auto [x, a] : fixed)
      ok = ok && assign(x, a);
    if (!ok)
      return;
    dfs(on_solution, first_filter, true);
  }

  template <class OnSolution>
  void solve(const std::vector<std::pair<int, int>>& fixed, OnSolution&& on_solution) {
    solve(fixed, on_solution, [](std::size_t) { return true; });
  }

private:
  void reset() {
    for (int x : trail_)
      val_[x] = -1;
    trail_.clear();
    head_ = 0;
  }

  bool assign(int x, int a) {
    if (!in_domain_[x])
      return false;
    if (val_[x] >= 0)
      return val_[x] == a;
    val_[x] = a;
    trail_.push_back(x);
    return true;
  }

  bool propagate() {
    const Group& G = ctx_.group;
    const AutGroup& A = ctx_.aut;
    for (; head_ < trail_.size(); ++head_) {
      const int z = trail_[head_];
      for (std::size_t k = 0; k <= head_; ++k) {
        const int y = trail_[k];
        if (!assign(G.mul(A.apply(val_[y], z), y), A.compose(val_[z], val_[y])))
          return false;
        if (y != z && !assign(G.mul(A.apply(val_[z], y), z), A.compose(val_[y], val_[z])))
          return false;
      }
    }
    return domain_.size() % trail_.size() == 0;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      val_[trail_.back()] = -1;
      trail_.pop_back();
    }
    head_ = std::min(head_, mark);
  }

  template <class OnSolution, class Filter>
  void dfs(OnSolution& on_solution, Filter& first_filter, bool first) {
    if (!propagate())
      return;
    if (trail_.size() == domain_.size()) {
      on_solution(static_cast<const std::vector<int>&>(val_));
      return;
    }
    int x = -1;
    for (int d : domain_)
      if (val_[d] < 0) {
        x = d;
        break;
      }
    const std::size_t mark = trail_.size();
    const std::size_t head = head_;
    for (std::size_t i = 0; i < candidates_.size(); ++i) {
      if (first && !first_filter(i))
        continue;
      assign(x, candidates_[i]);
      dfs(on_solution, first_filter, false);
      undo(mark);
      head_ = head;
    }
  }

  const GroupContext& ctx_;
  std::vector<int> domain_;
  std::vector<int> candidates_;
  std::vector<int> val_;
  std::vector<char> in_domain_;
  std::vector<int> trail_;
  std::size_t head_ = 0;
};

/// Number of maps gamma : <a> -> Aut(G) with gamma(a) = eta satisfying the
/// functional equation on <a>, found by exhaustive propagation search.
inline std::int64_t count_rgfs_with_generator_image(const ContextPtr& ctx, int a, int eta) {
  const Group& G = ctx->group;
  std::vector<int> domain = generated_subgroup(G, {a});
  std::vector<char> in_a(G.order(), 0);
  for (int x : domain)
    in_a[x] = 1;
  std::vector<int> cands;
  for (int alpha = 0; alpha < ctx->aut.size(); ++alpha) {
    bool inv = true;
    for (int x : domain)
      inv = inv && in_a[ctx->aut.apply(alpha, x)];
    if (inv)
      cands.push_back(alpha);
  }
  GfePropagator search(*ctx, std::move(domain), std::move(cands));
  std::int64_t count = 0;
  search.solve({{a, eta}}, [&](const std::vector<int>&) { ++count; });
  return count;
}

} // namespace skewbrace
