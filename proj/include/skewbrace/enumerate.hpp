#pragma once

// Three independent routes to the complete set of gamma functions on G:
//  * structured: explicit per-family parameterisations, every member checked;
//  * gfe-search: depth-first constraint propagation over Aut(G);
//  * closure-oracle: regular subgroups of Hol(G) read back as gamma functions.
// Plus the partition of a brace set into Aut(G)-conjugacy orbits.

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "brace.hpp"
#include "error.hpp"
#include "groups.hpp"
#include "holomorph.hpp"

namespace skewbrace {

enum class Method { Structured, GfeSearch, ClosureOracle };

inline std::string to_string(Method m) {
  switch (m) {
  case Method::Structured: return "structured";
  case Method::GfeSearch: return "gfe-search";
  case Method::ClosureOracle: return "closure-oracle";
  }
  return "?";
}

struct Orbit {
  int id = 0;
  int length = 0;
  IsoType circle_type = IsoType::Other;
  int kernel_size = 0;
  std::vector<int> members; // indices into EnumerationResult::braces
};

struct EnumerationResult {
  ContextPtr ctx;
  Method method = Method::Structured;
  std::vector<SkewBraceRecord> braces; // sorted by gamma table
  std::vector<Orbit> orbits;

  const GroupSpec& spec() const { return ctx->spec; }

  std::map<IsoType, std::int64_t> counts_by_type() const {
    std::map<IsoType, std::int64_t> c;
    for (const auto& b : braces)
      ++c[b.circle_type];
    return c;
  }
  std::int64_t count(IsoType t) const {
    auto c = counts_by_type();
    auto it = c.find(t);
    return it == c.end() ? 0 : it->second;
  }
  /// (count, length) pairs of the orbits of the given circle type, ascending by length.
  std::vector<std::pair<std::int64_t, std::int64_t>> class_profile(IsoType t) const {
    std::map<std::int64_t, std::int64_t> by_length;
    for (const auto& o : orbits)
      if (o.circle_type == t)
        ++by_length[o.length];
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (auto [len, cnt] : by_length)
      out.emplace_back(cnt, len);
    return out;
  }
};

inline bool same_brace_set(const EnumerationResult& x, const EnumerationResult& y) {
  if (x.braces.size() != y.braces.size())
    return false;
  for (std::size_t i = 0; i < x.braces.size(); ++i)
    if (x.braces[i].gamma != y.braces[i].gamma)
      return false;
  return true;
}

namespace detail {

inline std::vector<SkewBraceRecord> make_records(std::vector<GammaFunction> gammas) {
  std::sort(gammas.begin(), gammas.end());
  gammas.erase(std::unique(gammas.begin(), gammas.end()), gammas.end());
  std::vector<SkewBraceRecord> out;
  out.reserve(gammas.size());
  for (auto& g : gammas)
    out.push_back(brace_from_gamma(g));
  return out;
}

/// A small generating set of Aut(G), chosen greedily in canonical order.
inline std::vector<int> aut_generators(const AutGroup& A) {
  std::vector<char> in(A.size(), 0);
  std::vector<int> members{A.identity()};
  in[A.identity()] = 1;
  std::vector<int> gens;
  for (int cand = 0; cand < A.size() && static_cast<int>(members.size()) < A.size(); ++cand) {
    if (in[cand])
      continue;
    gens.push_back(cand);
    for (std::size_t k = 0; k < members.size(); ++k)
      for (int s : gens) {
        const int y = A.compose(members[k], s);
        if (!in[y]) {
          in[y] = 1;
          members.push_back(y);
        }
      }
  }
  return gens;
}

} // namespace detail

/// Orbits of the conjugation action gamma -> gamma^beta on the brace set.
/// Assigns orbit ids (ordered by smallest member) to the records in place.
inline void aut_orbits(EnumerationResult& result) {
  auto& braces = result.braces;
  const int m = static_cast<int>(braces.size());
  std::map<std::vector<int>, int> where;
  for (int i = 0; i < m; ++i)
    where.emplace(braces[i].gamma.table(), i);
  const auto gens = detail::aut_generators(result.ctx->aut);
  std::vector<int> orbit_of(m, -1);
  result.orbits.clear();
  for (int i = 0; i < m; ++i) {
    if (orbit_of[i] >= 0)
      continue;
    Orbit o;
    o.id = static_cast<int>(result.orbits.size());
    o.members.push_back(i);
    orbit_of[i] = o.id;
    for (std::size_t k = 0; k < o.members.size(); ++k)
      for (int beta : gens) {
        const GammaFunction img = conjugate_gamma(braces[o.members[k]].gamma, beta);
        auto it = where.find(img.table());
        if (it == where.end())
          throw ConsistencyFailure("orbit-not-closed", "a conjugate gamma function is missing from the brace set");
        if (orbit_of[it->second] < 0) {
          orbit_of[it->second] = o.id;
          o.members.push_back(it->second);
        }
      }
    std::sort(o.members.begin(), o.members.end());
    o.length = static_cast<int>(o.members.size());
    o.circle_type = braces[i].circle_type;
    o.kernel_size = static_cast<int>(braces[i].kernel.size());
    for (int j : o.members) {
      braces[j].orbit_id = o.id;
      if (braces[j].circle_type != o.circle_type)
        throw ConsistencyFailure("orbit-type-mismatch", "conjugate braces have different circle types");
    }
    result.orbits.push_back(std::move(o));
  }
}

inline EnumerationResult make_result(ContextPtr ctx, Method method, std::vector<GammaFunction> gammas) {
  EnumerationResult r{std::move(ctx), method, detail::make_records(std::move(gammas)), {}};
  aut_orbits(r);
  return r;
}

// ---------------------------------------------------------------------------
// Structured enumeration.

namespace detail {

class StructuredBuilder {
public:
  explicit StructuredBuilder(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  /// Records one branch: every candidate must be a distinct gamma function of
  /// the stated circle type, and their number must equal `expected`.
  void branch(const std::string& name, std::vector<std::pair<GammaFunction, IsoType>> items,
              std::int64_t expected) {
    std::set<std::vector<int>> distinct;
    for (auto& [g, type] : items) {
      const SkewBraceRecord r = brace_from_gamma(g);
      if (r.circle_type != type)
        throw ConsistencyFailure("structured-count-mismatch",
                                 name + ": circle type " + to_string(r.circle_type) + " where " +
                                     to_string(type) + " was expected");
      distinct.insert(g.table());
    }
    if (static_cast<std::int64_t>(distinct.size()) != expected ||
        static_cast<std::int64_t>(items.size()) != expected)
      throw ConsistencyFailure("structured-count-mismatch",
                               name + ": built " + std::to_string(distinct.size()) + " distinct of " +
                                   std::to_string(items.size()) + ", expected " + std::to_string(expected));
    for (auto& item : items)
      gammas_.push_back(std::move(item.first));
  }

  /// Adds the dual of every gamma collected so far; none may be self-dual.
  void double_by_duality() {
    std::set<std::vector<int>> before;
    for (const auto& g : gammas_)
      before.insert(g.table());
    const std::size_t n = gammas_.size();
    for (std::size_t i = 0; i < n; ++i) {
      GammaFunction d = dual_gamma(gammas_[i]);
      if (before.count(d.table()))
        throw ConsistencyFailure("structured-count-mismatch", "a constructed brace is self-dual or duals overlap");
      gammas_.push_back(std::move(d));
    }
  }

  std::vector<GammaFunction> take() { return std::move(gammas_); }

private:
  ContextPtr ctx_;
  std::vector<GammaFunction> gammas_;
};

inline std::vector<int> sylow_b(const Group& G) { return generated_subgroup(G, {G.gen_b()}); }

inline IsoType type_by_p_order(std::int64_t ord, std::int64_t p) {
  if (ord == 1)
    return IsoType::Type1;
  return ord == p ? IsoType::Type2 : IsoType::Type3;
}

inline std::vector<GammaFunction> structured_type1(const ContextPtr& ctx) {
  const Group& G = ctx->group;
  const AutGroup& A = ctx->aut;
  const std::int64_t p = ctx->spec.p, q = ctx->spec.q;
  const std::int64_t p2 = p * p;
  const int a = G.gen_a();
  const auto B = sylow_b(G);
  StructuredBuilder sb(ctx);

  // B in the kernel: one lifting per eta of order dividing p^2.
  std::vector<std::pair<GammaFunction, IsoType>> items;
  for (int eta = 0; eta < A.size(); ++eta) {
    if (p2 % A.order_of(eta) != 0)
      continue;
    // order of eta on B: eta(b) = b^r, ord(r mod q)
    const int img = A.apply(eta, G.gen_b());
    const std::int64_t r = G.element(img).u;
    const std::int64_t ord_b = mult_order(r, Modulus(q));
    items.emplace_back(lift_rgf(rgf_from_generator(ctx, a, eta), B), type_by_p_order(ord_b, p));
  }
  const DivisibilityProfile prof = divisibility_profile(p, q);
  std::int64_t expected = p;
  if (prof.p_divides_q_minus_1 != PDivision::NotDividing)
    expected += p * (p - 1);
  if (prof.p_divides_q_minus_1 == PDivision::Squared)
    expected += p2 * (p - 1);
  sb.branch("type 1, B in kernel", std::move(items), expected);

  // A in the kernel, gamma(b) of order q.
  if (prof.q_divides_p_minus_1) {
    const auto Asub = generated_subgroup(G, {a});
    std::vector<std::pair<GammaFunction, IsoType>> more;
    for (int eta = 0; eta < A.size(); ++eta)
      if (A.order_of(eta) == q)
        more.emplace_back(lift_rgf(rgf_from_generator(ctx, G.gen_b(), eta), Asub), IsoType::Type4);
    sb.branch("type 1, A in kernel", std::move(more), q - 1);
  }
  return sb.take();
}

inline std::vector<GammaFunction> structured_type2(const ContextPtr& ctx) {
  const Group& G = ctx->group;
  const AutGroup& A = ctx->aut;
  const std::int64_t p = ctx->spec.p, q = ctx->spec.q;
  const std::int64_t p2 = p * p;
  const auto B = sylow_b(G);
  const auto sylows = cyclic_subgroups(G, static_cast<int>(p2));
  StructuredBuilder sb(ctx);

  sb.branch("type 2, identity", {{GammaFunction::identity(ctx), IsoType::Type2}}, 1);

  {
    const int a = G.gen_a();
    const int psi = psi_for_A(*ctx, a);
    std::vector<std::pair<GammaFunction, IsoType>> items;
    for (std::int64_t j = 1; j < p; ++j)
      items.emplace_back(lift_rgf(rgf_from_generator(ctx, a, A.pow(psi, j)), B), IsoType::Type2);
    sb.branch("type 2, image <psi>", std::move(items), p - 1);
  }

  {
    std::vector<std::pair<GammaFunction, IsoType>> items;
    for (const auto& S : sylows) {
      const int a = S.generator;
      const int psi = psi_for_A(*ctx, a);
      for (std::int64_t s = 1; s < p; ++s)
        for (std::int64_t t = 0; t < p; ++t) {
          const int eta = A.compose(iota(*ctx, G.pow(a, -s)), A.pow(psi, t));
          items.emplace_back(lift_rgf(rgf_from_generator(ctx, a, eta), B),
                             s == 1 ? IsoType::Type1 : IsoType::Type2);
        }
    }
    sb.branch("type 2, image of order p", std::move(items), q * p * (p - 1));
  }

  if ((q - 1) % p2 == 0) {
    std::vector<std::pair<GammaFunction, IsoType>> items;
    for (const auto& S : sylows) {
      const int a = S.generator;
      std::vector<char> in_a(G.order(), 0);
      for (int x : S.members)
        in_a[x] = 1;
      std::set<int> inner_powers;
      for (std::int64_t k = 1; k < p; ++k)
        inner_powers.insert(A.pow(iota(*ctx, a), k));
      for (int theta = 0; theta < A.size(); ++theta) {
        if (A.order_of(theta) != p2 || !inner_powers.count(A.pow(theta, p)) || !in_a[A.apply(theta, a)])
          continue;
        items.emplace_back(lift_rgf(rgf_from_generator(ctx, a, theta), B), IsoType::Type3);
      }
    }
    sb.branch("type 2, image of order p^2", std::move(items), q * p2 * (p - 1));
  }
  sb.double_by_duality();
  return sb.take();
}

inline std::vector<GammaFunction> structured_type3(const ContextPtr& ctx) {
  const Group& G = ctx->group;
  const std::int64_t p = ctx->spec.p, q = ctx->spec.q;
  const std::int64_t p2 = p * p;
  const auto B = sylow_b(G);
  StructuredBuilder sb(ctx);
  sb.branch("type 3, identity", {{GammaFunction::identity(ctx), IsoType::Type3}}, 1);
  std::vector<std::pair<GammaFunction, IsoType>> items;
  for (const auto& S : cyclic_subgroups(G, static_cast<int>(p2))) {
    const int a = S.generator;
    for (std::int64_t s = 1; s < p2; ++s) {
      const IsoType type = s == 1 ? IsoType::Type1 : (s % p == 1 ? IsoType::Type2 : IsoType::Type3);
      items.emplace_back(lift_rgf(rgf_from_generator(ctx, a, iota(*ctx, G.pow(a, -s))), B), type);
    }
  }
  sb.branch("type 3, inner images", std::move(items), q * (p2 - 1));
  sb.double_by_duality();
  return sb.take();
}

inline std::vector<GammaFunction> structured_type4(const ContextPtr& ctx) {
  const Group& G = ctx->group;
  const AutGroup& A = ctx->aut;
  const std::int64_t p = ctx->spec.p, q = ctx->spec.q;
  const std::int64_t p2 = p * p;
  const int b = G.gen_b();
  const auto B = sylow_b(G);
  const auto sylows = cyclic_subgroups(G, static_cast<int>(q));
  StructuredBuilder sb(ctx);
  sb.branch("type 4, identity", {{GammaFunction::identity(ctx), IsoType::Type4}}, 1);

  {
    std::vector<std::pair<GammaFunction, IsoType>> items;
    for (const auto& S : sylows) {
      const int a = S.generator;
      for (std::int64_t j = 1; j < q; ++j)
        items.emplace_back(lift_rgf(rgf_from_generator(ctx, a, A.pow(iota(*ctx, a), j)), B),
                           j == q - 1 ? IsoType::Type1 : IsoType::Type4);
    }
    sb.branch("type 4, kernel B", std::move(items), p2 * (q - 1));
  }

  {
    std::vector<std::pair<GammaFunction, IsoType>> items;
    for (const auto& S : sylows) {
      const int a = S.generator;
      const int psi = psi_for_A(*ctx, a);
      for (std::int64_t t = 1; t < p; ++t) {
        std::vector<int> table(G.order());
        for (std::int64_t i = 0; i < q; ++i)
          for (std::int64_t j = 0; j < p2; ++j)
            table[G.mul(G.pow(a, i), G.pow(b, j))] =
                A.compose(iota(*ctx, G.pow(a, -i)), A.pow(psi, t * j));
        items.emplace_back(GammaFunction(ctx, std::move(table)), IsoType::Type1);
      }
    }
    sb.branch("type 4, kernel of order p", std::move(items), p2 * (p - 1));
  }
  sb.double_by_duality();
  auto out = sb.take();
  for (const auto& g : out)
    if (static_cast<std::int64_t>(kernel(g).size()) == p * q)
      throw ConsistencyFailure("structured-count-mismatch", "type 4 brace with kernel of order pq");
  return out;
}

} // namespace detail

inline EnumerationResult structured_enumerate(const ContextPtr& ctx) {
  std::vector<GammaFunction> gammas;
  switch (ctx->spec.family) {
  case Family::P2QType1: gammas = detail::structured_type1(ctx); break;
  case Family::P2QType2: gammas = detail::structured_type2(ctx); break;
  case Family::P2QType3: gammas = detail::structured_type3(ctx); break;
  case Family::P2QType4: gammas = detail::structured_type4(ctx); break;
  default: throw InvalidInput("bad-family", "structured enumeration covers the p^2 q families only");
  }
  std::set<std::vector<int>> distinct;
  for (const auto& g : gammas)
    distinct.insert(g.table());
  if (distinct.size() != gammas.size())
    throw ConsistencyFailure("structured-count-mismatch", "branches overlap");
  return make_result(ctx, Method::Structured, std::move(gammas));
}

// ---------------------------------------------------------------------------
// Propagation search.

inline constexpr int kMaxSearchGroupOrder = 200;
inline constexpr int kMaxSearchAutOrder = 1200;

inline EnumerationResult gfe_search(const ContextPtr& ctx, int jobs = 1) {
  const int n = ctx->group.order();
  if (n > kMaxSearchGroupOrder || ctx->aut.size() > kMaxSearchAutOrder)
    throw ResourceLimit("search-too-large", "|G| = " + std::to_string(n) + ", |Aut(G)| = " +
                                                std::to_string(ctx->aut.size()));
  std::vector<int> domain(n);
  for (int x = 0; x < n; ++x)
    domain[x] = x;
  // gamma is a morphism (G, o) -> Aut(G), so each value has order dividing |G|.
  std::vector<int> cands;
  for (int alpha = 0; alpha < ctx->aut.size(); ++alpha)
    if (n % ctx->aut.order_of(alpha) == 0)
      cands.push_back(alpha);

  jobs = std::max(1, jobs);
  std::vector<std::vector<GammaFunction>> found(jobs);
  auto worker = [&](int tid) {
    GfePropagator search(*ctx, domain, cands);
    search.solve(
        {}, [&](const std::vector<int>& values) { found[tid].emplace_back(ctx, values); },
        [&](std::size_t i) { return static_cast<int>(i % jobs) == tid; });
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> threads;
    for (int t = 0; t < jobs; ++t)
      threads.emplace_back(worker, t);
  }
  std::vector<GammaFunction> all;
  for (auto& part : found)
    for (auto& g : part) {
      if (!check_gfe(g))
        throw ConsistencyFailure("search-gfe-violation", "search produced a map failing the functional equation");
      all.push_back(std::move(g));
    }
  return make_result(ctx, Method::GfeSearch, std::move(all));
}

// ---------------------------------------------------------------------------
// Holomorph closure oracle.

struct OracleOptions {
  std::int64_t max_hol_order = kDefaultMaxHolOrder;
  int jobs = 1;
  /// When set and pair search finds fewer subgroups, retry with generator triples.
  std::optional<std::size_t> reference_count;
};

inline EnumerationResult closure_oracle(const ContextPtr& ctx, const OracleOptions& opt = {}) {
  const Holomorph hol(ctx);
  auto subgroups = closure_search_regular(hol, opt.max_hol_order, opt.jobs, 2);
  if (opt.reference_count && subgroups.size() < *opt.reference_count)
    subgroups = closure_search_regular(hol, opt.max_hol_order, opt.jobs, 3);
  std::vector<GammaFunction> gammas;
  gammas.reserve(subgroups.size());
  for (const auto& s : subgroups) {
    if (!is_regular(hol, s.members))
      throw ConsistencyFailure("oracle-not-regular", "closure search returned a non-regular subgroup");
    gammas.push_back(gamma_from_regular(ctx, s.members));
  }
  return make_result(ctx, Method::ClosureOracle, std::move(gammas));
}

/// Runs the oracle and requires set equality with a reference enumeration.
inline EnumerationResult closure_oracle_checked(const EnumerationResult& reference, OracleOptions opt = {}) {
  opt.reference_count = reference.braces.size();
  EnumerationResult r = closure_oracle(reference.ctx, opt);
  if (!same_brace_set(r, reference))
    throw ConsistencyFailure("method-disagreement", "closure oracle found " + std::to_string(r.braces.size()) +
                                                        " braces, reference has " +
                                                        std::to_string(reference.braces.size()));
  return r;
}

// ---------------------------------------------------------------------------
// Order pq.

struct PqFamilyResult {
  Family family;
  EnumerationResult search;
  std::optional<EnumerationResult> oracle; // absent when the size gate skipped it
};

inline std::vector<PqFamilyResult> pq_enumerate(std::int64_t p, std::int64_t q, const OracleOptions& opt = {}) {
  std::vector<Family> fams{Family::PQCyclic};
  if (is_prime(p) && is_prime(q) && p > q && (p - 1) % q == 0)
    fams.push_back(Family::PQMetacyclic);
  std::vector<PqFamilyResult> out;
  for (Family f : fams) {
    auto ctx = make_context(f, p, q);
    PqFamilyResult r{f, gfe_search(ctx, opt.jobs), std::nullopt};
    try {
      r.oracle = closure_oracle_checked(r.search, opt);
    } catch (const ResourceLimit&) {
    }
    out.push_back(std::move(r));
  }
  return out;
}

} // namespace skewbrace
