#pragma once

// The permutational holomorph Hol(G) = Aut(G) rho(G). An element (alpha, g)
// acts on the right as x -> x^alpha * g, so that
//   (alpha, g)(beta, h) = (alpha beta, g^beta h).

#include <algorithm>
#include <cstdint>
#include <thread>
#include <utility>
#include <vector>

#include "error.hpp"
#include "groups.hpp"

namespace skewbrace {

struct HolElement {
  int alpha = 0; // index into AutGroup
  int g = 0;     // index into Group

  bool operator==(const HolElement&) const = default;
  auto operator<=>(const HolElement&) const = default;
};

struct PermSubgroupCandidate {
  std::vector<HolElement> members; // sorted; doubles as the canonical key

  const std::vector<HolElement>& canonical_key() const noexcept { return members; }
  bool operator==(const PermSubgroupCandidate&) const = default;
  auto operator<=>(const PermSubgroupCandidate&) const = default;
};

class Holomorph {
public:
  explicit Holomorph(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  const GroupContext& context() const noexcept { return *ctx_; }
  std::int64_t order() const noexcept {
    return static_cast<std::int64_t>(ctx_->aut.size()) * ctx_->group.order();
  }
  HolElement identity() const noexcept { return {ctx_->aut.identity(), 0}; }

  HolElement mul(HolElement x, HolElement y) const {
    return {ctx_->aut.compose(x.alpha, y.alpha), ctx_->group.mul(ctx_->aut.apply(y.alpha, x.g), y.g)};
  }
  HolElement inv(HolElement x) const {
    // (alpha, g)^-1 = (alpha^-1, (g^-1)^(alpha^-1))
    const int ai = ctx_->aut.inverse(x.alpha);
    return {ai, ctx_->aut.apply(ai, ctx_->group.inv(x.g))};
  }
  int apply(HolElement h, int x) const { return ctx_->group.mul(ctx_->aut.apply(h.alpha, x), h.g); }

  bool fixed_point_free(HolElement h) const {
    for (int x = 0; x < ctx_->group.order(); ++x)
      if (apply(h, x) == x)
        return false;
    return true;
  }

  std::int64_t linear_index(HolElement h) const {
    return static_cast<std::int64_t>(h.alpha) * ctx_->group.order() + h.g;
  }
  HolElement from_linear(std::int64_t i) const {
    return {static_cast<int>(i / ctx_->group.order()), static_cast<int>(i % ctx_->group.order())};
  }

private:
  ContextPtr ctx_;
};

/// x -> x g
inline HolElement rho(const GroupContext& ctx, int g) { return {ctx.aut.identity(), g}; }

/// x -> g x, written as x^(iota(g^-1)) g.
inline HolElement lambda_rep(const GroupContext& ctx, int g) {
  return {iota(ctx, ctx.group.inv(g)), g};
}

/// Conjugation by the inversion map: (alpha, g) -> (alpha iota(g), g^-1).
inline HolElement conjugate_by_inv(const GroupContext& ctx, HolElement h) {
  return {ctx.aut.compose(h.alpha, iota(ctx, h.g)), ctx.group.inv(h.g)};
}

/// |members| = |G|, closed under products, and 1^member = g is a bijection.
inline bool is_regular(const Holomorph& hol, const std::vector<HolElement>& members) {
  const int n = hol.context().group.order();
  if (static_cast<int>(members.size()) != n)
    return false;
  std::vector<char> hit(n, 0);
  for (const auto& m : members) {
    if (hit[m.g])
      return false;
    hit[m.g] = 1;
  }
  std::vector<HolElement> sorted = members;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& x : sorted)
    for (const auto& y : sorted)
      if (!std::binary_search(sorted.begin(), sorted.end(), hol.mul(x, y)))
        return false;
  return true;
}

inline constexpr std::int64_t kDefaultMaxHolOrder = 1200;

namespace detail {

// Closure of <gens> inside Hol(G), aborted as soon as two members share the
// same image of 1 (such a subgroup cannot act regularly). Returns an empty
// vector on abort or if the closure is smaller than |G|.
class RegularClosure {
public:
  explicit RegularClosure(const Holomorph& hol)
      : hol_(hol), n_(hol.context().group.order()),
        member_stamp_(static_cast<std::size_t>(hol.order()), 0), image_stamp_(n_, 0) {}

  std::vector<HolElement> run(const std::vector<HolElement>& gens) {
    ++stamp_;
    std::vector<HolElement> members;
    members.reserve(n_);
    auto add = [&](HolElement h) {
      const auto li = static_cast<std::size_t>(hol_.linear_index(h));
      if (member_stamp_[li] == stamp_)
        return true;
      if (image_stamp_[h.g] == stamp_)
        return false;
      member_stamp_[li] = stamp_;
      image_stamp_[h.g] = stamp_;
      members.push_back(h);
      return true;
    };
    add(hol_.identity());
    for (std::size_t k = 0; k < members.size(); ++k)
      for (const auto& s : gens)
        if (!add(hol_.mul(members[k], s)))
          return {};
    if (static_cast<int>(members.size()) != n_)
      return {};
    std::sort(members.begin(), members.end());
    return members;
  }

private:
  const Holomorph& hol_;
  int n_;
  std::vector<std::uint32_t> member_stamp_;
  std::vector<std::uint32_t> image_stamp_;
  std::uint32_t stamp_ = 0;
};

} // namespace detail

/// Every regular subgroup of Hol(G), found by closing up generator pairs
/// (or triples, when `generators == 3`) drawn from the fixed-point-free
/// elements. Work is split by first generator across `jobs` threads; the
/// merged result is sorted by canonical key.
inline std::vector<PermSubgroupCandidate> closure_search_regular(
    const Holomorph& hol, std::int64_t max_hol_order = kDefaultMaxHolOrder, int jobs = 1,
    int generators = 2) {
  if (hol.order() > max_hol_order)
    throw ResourceLimit("oracle-too-large", "|Hol(G)| = " + std::to_string(hol.order()) +
                                                " exceeds the limit " +
                                                std::to_string(max_hol_order));
  std::vector<HolElement> fpf;
  for (std::int64_t i = 0; i < hol.order(); ++i) {
    const HolElement h = hol.from_linear(i);
    if (hol.fixed_point_free(h))
      fpf.push_back(h);
  }
  jobs = std::max(1, jobs);

  std::vector<std::vector<PermSubgroupCandidate>> partial(jobs);
  auto worker = [&](int tid) {
    detail::RegularClosure closure(hol);
    auto& out = partial[tid];
    // Elements already known to lie in a regular subgroup together with the
    // current first generator: pairing with them adds nothing new.
    std::vector<std::uint32_t> covered(fpf.size(), 0);
    std::uint32_t cover_stamp = 0;
    std::vector<std::size_t> index_of(static_cast<std::size_t>(hol.order()), fpf.size());
    for (std::size_t k = 0; k < fpf.size(); ++k)
      index_of[static_cast<std::size_t>(hol.linear_index(fpf[k]))] = k;
    auto record = [&](std::vector<HolElement> members) {
      ++cover_stamp;
      for (const auto& m : members) {
        const std::size_t k = index_of[static_cast<std::size_t>(hol.linear_index(m))];
        if (k < fpf.size())
          covered[k] = cover_stamp;
      }
      out.push_back({std::move(members)});
    };
    for (std::size_t i = static_cast<std::size_t>(tid); i < fpf.size(); i += jobs) {
      ++cover_stamp;
      const std::uint32_t base = cover_stamp;
      if (auto cyc = closure.run({fpf[i]}); !cyc.empty())
        record(std::move(cyc));
      for (std::size_t j = i + 1; j < fpf.size(); ++j) {
        if (generators <= 2) {
          if (covered[j] > base)
            continue;
          if (auto m = closure.run({fpf[i], fpf[j]}); !m.empty())
            record(std::move(m));
          continue;
        }
        for (std::size_t k = j + 1; k < fpf.size(); ++k)
          if (auto m = closure.run({fpf[i], fpf[j], fpf[k]}); !m.empty())
            record(std::move(m));
      }
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> threads;
    for (int t = 0; t < jobs; ++t)
      threads.emplace_back(worker, t);
  }
  std::vector<PermSubgroupCandidate> all;
  for (auto& part : partial)
    for (auto& c : part)
      all.push_back(std::move(c));
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

/// The abstract group carried by a regular subgroup, transported to the
/// point set G via n -> 1^n: i * j is the image of 1 under n_i n_j.
inline CayleyTable regular_action_table(const Holomorph& hol, const std::vector<HolElement>& members) {
  const int n = hol.context().group.order();
  std::vector<HolElement> by_image(n);
  for (const auto& m : members)
    by_image[m.g] = m;
  std::vector<int> data(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      data[static_cast<std::size_t>(i) * n + j] = hol.mul(by_image[i], by_image[j]).g;
  return CayleyTable(n, std::move(data));
}

} // namespace skewbrace
