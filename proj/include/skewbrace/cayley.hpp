#pragma once

// Multiplication tables over element indices 0..n-1 and the isomorphism-type
// fingerprint used to name groups of order p^2 q and pq.

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "arith.hpp"
#include "error.hpp"

namespace skewbrace {

class CayleyTable {
public:
  CayleyTable() = default;
  CayleyTable(int n, std::vector<int> data) : n_(n), data_(std::move(data)) {
    if (n < 1 || data_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
      throw InvalidInput("malformed-table", "table data does not have n*n entries");
    for (int x : data_)
      if (x < 0 || x >= n)
        throw InvalidInput("malformed-table", "entry out of range");
  }

  int size() const noexcept { return n_; }
  int at(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }
  const std::vector<int>& data() const noexcept { return data_; }

  bool operator==(const CayleyTable&) const = default;

private:
  int n_ = 0;
  std::vector<int> data_;
};

enum class IsoType { Type1, Type2, Type3, Type4, PQCyclic, PQMetacyclic, Other };

inline std::string to_string(IsoType t) {
  switch (t) {
  case IsoType::Type1: return "Type1";
  case IsoType::Type2: return "Type2";
  case IsoType::Type3: return "Type3";
  case IsoType::Type4: return "Type4";
  case IsoType::PQCyclic: return "PQ-Cyclic";
  case IsoType::PQMetacyclic: return "PQ-Metacyclic";
  case IsoType::Other: return "Other";
  }
  return "Other";
}

struct Fingerprint {
  int order = 0;
  std::int64_t p = 0; // the squared prime for order p^2 q, the larger prime for pq
  std::int64_t q = 0;
  bool abelian = false;
  bool cyclic = false;
  bool has_element_of_order_p2 = false;
  int center_size = 0;
  bool normal_sylow_p = false;
  bool normal_sylow_q = false;

  bool operator==(const Fingerprint&) const = default;
};

struct Classification {
  IsoType type = IsoType::Other;
  Fingerprint fingerprint;
};

namespace detail {

// Splits n as p^2 q (returns true, sets p,q) or pq with p > q (returns false).
// Throws for any other shape.
inline bool split_order(int n, std::int64_t& p, std::int64_t& q) {
  std::vector<std::pair<std::int64_t, int>> factors;
  std::int64_t m = n;
  for (std::int64_t d = 2; d * d <= m; ++d) {
    int e = 0;
    while (m % d == 0) {
      m /= d;
      ++e;
    }
    if (e > 0)
      factors.emplace_back(d, e);
  }
  if (m > 1)
    factors.emplace_back(m, 1);
  if (factors.size() == 2) {
    auto [r1, e1] = factors[0];
    auto [r2, e2] = factors[1];
    if (e1 == 1 && e2 == 1) {
      p = std::max(r1, r2);
      q = std::min(r1, r2);
      return false;
    }
    if (e1 == 2 && e2 == 1) {
      p = r1;
      q = r2;
      return true;
    }
    if (e1 == 1 && e2 == 2) {
      p = r2;
      q = r1;
      return true;
    }
  }
  throw InvalidInput("unsupported-order",
                     "order " + std::to_string(n) + " is neither p^2 q nor pq");
}

} // namespace detail

/// Checks identity, Latin-square and associativity properties. Associativity
/// is tested against a generating set only: the elements g satisfying
/// (xg)y = x(gy) for all x, y form a closed subset, so it suffices to check
/// generators. Returns the identity index.
inline int validate_group_table(const CayleyTable& t) {
  const int n = t.size();
  int e = -1;
  for (int i = 0; i < n && e < 0; ++i) {
    bool ok = true;
    for (int j = 0; j < n && ok; ++j)
      ok = t.at(i, j) == j && t.at(j, i) == j;
    if (ok)
      e = i;
  }
  if (e < 0)
    throw InvalidInput("not-a-group", "no identity element");
  std::vector<int> seen_row(n), seen_col(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (seen_row[t.at(i, j)] == i + 1 || seen_col[t.at(j, i)] == i + 1)
        throw InvalidInput("not-a-group", "row or column " + std::to_string(i) +
                                              " is not a permutation");
      seen_row[t.at(i, j)] = i + 1;
      seen_col[t.at(j, i)] = i + 1;
    }
  }
  // Greedy generating set: the left-normed products of generators reached by
  // right multiplication lie in the closure, so covering everything suffices.
  std::vector<int> gens;
  std::vector<char> reached(n, 0);
  std::vector<int> queue{e};
  reached[e] = 1;
  int covered = 1;
  while (covered < n) {
    int g = 0;
    while (reached[g])
      ++g;
    gens.push_back(g);
    queue.clear();
    for (int x = 0; x < n; ++x)
      if (reached[x])
        queue.push_back(x);
    for (std::size_t k = 0; k < queue.size(); ++k) {
      for (int s : gens) {
        int y = t.at(queue[k], s);
        if (!reached[y]) {
          reached[y] = 1;
          ++covered;
          queue.push_back(y);
        }
      }
    }
  }
  for (int g : gens)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (t.at(t.at(x, g), y) != t.at(x, t.at(g, y)))
          throw InvalidInput("not-a-group", "multiplication is not associative");
  return e;
}

/// Fingerprint of a table already known to be a group table.
inline Fingerprint fingerprint_of(const CayleyTable& t) {
  const int n = t.size();
  Fingerprint fp;
  fp.order = n;
  const bool p2q = detail::split_order(n, fp.p, fp.q);

  int e = 0;
  while (t.at(e, e) != e)
    ++e;
  std::vector<int> order(n, 0);
  for (int x = 0; x < n; ++x) {
    int y = x;
    int k = 1;
    while (y != e) {
      y = t.at(y, x);
      ++k;
    }
    order[x] = k;
  }

  int center = 0;
  for (int x = 0; x < n; ++x) {
    bool central = true;
    for (int y = 0; y < n && central; ++y)
      central = t.at(x, y) == t.at(y, x);
    center += central ? 1 : 0;
  }
  fp.center_size = center;
  fp.abelian = center == n;
  for (int x = 0; x < n; ++x)
    if (order[x] == n)
      fp.cyclic = true;

  const std::int64_t p_part = p2q ? fp.p * fp.p : fp.p;
  const std::int64_t q_part = fp.q;
  int p_elements = 0;
  int q_elements = 0;
  for (int x = 0; x < n; ++x) {
    if (p_part % order[x] == 0)
      ++p_elements;
    if (q_part % order[x] == 0)
      ++q_elements;
    if (p2q && order[x] % (fp.p * fp.p) == 0)
      fp.has_element_of_order_p2 = true;
  }
  if (!p2q)
    fp.has_element_of_order_p2 = false;
  // A Sylow subgroup is normal iff it is the only one, i.e. iff the elements
  // of r-power order number exactly its size.
  fp.normal_sylow_p = p_elements == p_part;
  fp.normal_sylow_q = q_elements == q_part;
  return fp;
}

inline IsoType iso_type_from_fingerprint(const Fingerprint& fp) {
  const bool p2q = fp.order == fp.p * fp.p * fp.q;
  if (!p2q) {
    if (fp.cyclic)
      return IsoType::PQCyclic;
    if (!fp.abelian && (fp.p - 1) % fp.q == 0)
      return IsoType::PQMetacyclic;
    return IsoType::Other;
  }
  if (!fp.has_element_of_order_p2)
    return IsoType::Other;
  if (fp.abelian)
    return fp.cyclic ? IsoType::Type1 : IsoType::Other;
  if (fp.center_size == fp.p && fp.normal_sylow_q)
    return IsoType::Type2;
  if (fp.center_size == 1 && fp.normal_sylow_q)
    return IsoType::Type3;
  if (fp.center_size == 1 && fp.normal_sylow_p)
    return IsoType::Type4;
  return IsoType::Other;
}

/// Classifies a table, validating the group axioms first.
inline Classification classify_iso_type(const CayleyTable& t) {
  validate_group_table(t);
  Fingerprint fp = fingerprint_of(t);
  return {iso_type_from_fingerprint(fp), fp};
}

/// Classification for tables produced internally and already known to be groups.
inline Classification classify_trusted(const CayleyTable& t) {
  Fingerprint fp = fingerprint_of(t);
  return {iso_type_from_fingerprint(fp), fp};
}

} // namespace skewbrace
