#pragma once

// Structural identities every skew brace on these groups must satisfy. Each
// check returns true when the identity holds for the given brace.

#include <algorithm>
#include <optional>
#include <vector>

#include "brace.hpp"

namespace skewbrace {

namespace detail {

inline bool contains_all(const std::vector<int>& sorted_super, const std::vector<int>& sub) {
  return std::includes(sorted_super.begin(), sorted_super.end(), sub.begin(), sub.end());
}

inline std::vector<int> powers_of(const Group& G, int x) { return generated_subgroup(G, {x}); }

} // namespace detail

/// The subgroup C whose containment in the kernel separates a brace from its
/// dual: B for types 2 and 3, the order-p subgroup of B for type 4.
inline std::optional<std::vector<int>> dichotomy_subgroup(const GroupContext& ctx) {
  const Group& G = ctx.group;
  switch (ctx.spec.family) {
  case Family::P2QType2:
  case Family::P2QType3: return detail::powers_of(G, G.gen_b());
  case Family::P2QType4: return detail::powers_of(G, G.pow(G.gen_b(), ctx.spec.p));
  default: return std::nullopt;
  }
}

/// C <= ker(gamma) exactly when C is not contained in ker(dual gamma).
inline bool kernel_dichotomy_holds(const GammaFunction& gamma) {
  auto C = dichotomy_subgroup(gamma.context());
  if (!C)
    return true;
  return detail::contains_all(kernel(gamma), *C) != detail::contains_all(kernel(dual_gamma(gamma)), *C);
}

inline bool dual_is_involution(const GammaFunction& gamma) { return dual_gamma(dual_gamma(gamma)) == gamma; }

/// Types 2 and 3: nu(B) is rho(B) or lambda(B), i.e. gamma is trivial on B or
/// gamma(b) = iota(b^-1) on all of B.
inline bool nu_b_dichotomy_holds(const GammaFunction& gamma) {
  const GroupContext& c = gamma.context();
  if (c.spec.family != Family::P2QType2 && c.spec.family != Family::P2QType3)
    return true;
  const auto B = detail::powers_of(c.group, c.group.gen_b());
  const bool trivial = std::all_of(B.begin(), B.end(), [&](int b) { return gamma(b) == c.aut.identity(); });
  const bool opposite = std::all_of(B.begin(), B.end(), [&](int b) { return gamma(b) == iota(c, c.group.inv(b)); });
  return trivial || opposite;
}

/// The closed inverse formula agrees with the inverse read off the circle table.
inline bool inverse_formula_holds(const GammaFunction& gamma, const CayleyTable& circ) {
  for (int a = 0; a < gamma.size(); ++a) {
    const int ai = circle_inverse(gamma, a);
    if (circ.at(ai, a) != 0 || circ.at(a, ai) != 0)
      return false;
  }
  return true;
}

/// A morphism satisfying the functional equation kills every commutator
/// x^-1 x^gamma(y).
inline bool morphism_commutator_holds(const GammaFunction& gamma) {
  if (!is_morphism(gamma))
    return true;
  const GroupContext& c = gamma.context();
  for (int x = 0; x < gamma.size(); ++x)
    for (int y = 0; y < gamma.size(); ++y) {
      const int comm = c.group.mul(c.group.inv(x), c.aut.apply(gamma(y), x));
      if (gamma(comm) != c.aut.identity())
        return false;
    }
  return true;
}

/// Sylow subgroups of G: every cyclic subgroup of order p^2 and of order q
/// (or p and q for order pq).
inline std::vector<CyclicSubgroup> sylow_subgroups(const GroupContext& ctx) {
  const Group& G = ctx.group;
  const int p_part = is_p2q(ctx.spec.family) ? static_cast<int>(ctx.spec.p * ctx.spec.p)
                                              : static_cast<int>(ctx.spec.p);
  auto out = cyclic_subgroups(G, p_part);
  auto qs = cyclic_subgroups(G, static_cast<int>(ctx.spec.q));
  out.insert(out.end(), qs.begin(), qs.end());
  return out;
}

namespace detail {

inline bool gamma_invariant(const GammaFunction& gamma, const std::vector<int>& H) {
  const GroupContext& c = gamma.context();
  std::vector<char> in(gamma.size(), 0);
  for (int x : H)
    in[x] = 1;
  for (int h : H)
    for (int x : H)
      if (!in[c.aut.apply(gamma(h), x)])
        return false;
  return true;
}

inline bool circle_closed(const CayleyTable& circ, const std::vector<int>& H) {
  std::vector<char> in(circ.size(), 0);
  for (int x : H)
    in[x] = 1;
  for (int x : H)
    for (int y : H)
      if (!in[circ.at(x, y)])
        return false;
  return true;
}

} // namespace detail

/// For a subgroup H of G: H is gamma(H)-invariant iff (H, o) is a subgroup.
inline bool invariance_closure_equivalence_holds(const GammaFunction& gamma, const CayleyTable& circ) {
  for (const auto& H : sylow_subgroups(gamma.context()))
    if (detail::gamma_invariant(gamma, H.members) != detail::circle_closed(circ, H.members))
      return false;
  return true;
}

/// For a cyclic gamma(A)-invariant Sylow A = <a>, a has the same order in (A, o).
inline bool same_generator_order_holds(const GammaFunction& gamma, const CayleyTable& circ) {
  const Group& G = gamma.context().group;
  for (const auto& A : sylow_subgroups(gamma.context())) {
    if (!detail::gamma_invariant(gamma, A.members))
      continue;
    const int a = A.generator;
    int y = a;
    int k = 1;
    while (y != 0) {
      y = circ.at(y, a);
      ++k;
    }
    if (k != G.order_of(a))
      return false;
  }
  return true;
}

/// The circle group has cyclic Sylow p-subgroups, so it is one of the named types.
inline bool sylow_type_preserved(const SkewBraceRecord& r) { return r.circle_type != IsoType::Other; }

/// gamma -> nu(G) -> gamma is the identity.
inline bool regular_round_trip_holds(const GammaFunction& gamma) {
  return gamma_from_regular(gamma.context_ptr(), nu_subgroup(gamma)) == gamma;
}

} // namespace skewbrace
