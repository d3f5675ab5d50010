#pragma once

// Closed-form counts of regular subgroups e'(Gamma, G), Hopf-Galois
// structures e(Gamma, G), conjugacy-class profiles and per-Gamma totals, for
// groups of order p^2 q with cyclic Sylow p-subgroups and for order pq.
// Types are numbered 1..4; cells outside the applicable types are 0. Class
// lists are ordered by ascending length.

#include <array>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "arith.hpp"
#include "error.hpp"
#include "json.hpp"

namespace skewbrace {

struct ClassEntry {
  std::int64_t count = 0;
  std::int64_t length = 0;

  bool operator==(const ClassEntry&) const = default;
};

using Grid = std::array<std::array<std::int64_t, 5>, 5>;
using ClassGrid = std::array<std::array<std::vector<ClassEntry>, 5>, 5>;

struct CountTable {
  std::int64_t p = 0;
  std::int64_t q = 0;
  DivisibilityProfile profile;
  Grid e_prime{};
  Grid e{};
  ClassGrid classes;
  std::array<std::int64_t, 5> totals{};

  static bool in_range(int t) { return t >= 1 && t <= 4; }
  std::int64_t e_prime_at(int gamma, int g) const { return in_range(gamma) && in_range(g) ? e_prime[gamma][g] : 0; }
  std::int64_t e_at(int gamma, int g) const { return in_range(gamma) && in_range(g) ? e[gamma][g] : 0; }
  std::vector<ClassEntry> classes_at(int gamma, int g) const {
    return in_range(gamma) && in_range(g) ? classes[gamma][g] : std::vector<ClassEntry>{};
  }
  std::int64_t total_at(int gamma) const { return in_range(gamma) ? totals[gamma] : 0; }
};

inline Grid e_prime_table(std::int64_t p, std::int64_t q) {
  const DivisibilityProfile prof = divisibility_profile(p, q);
  Grid t{};
  const std::int64_t p2 = p * p;
  if (!prof.q_divides_p_minus_1) {
    t[1][1] = p;
    t[2][1] = p * (p - 1);
    t[3][1] = p2 * (p - 1);
    t[1][2] = 2 * p * q;
    t[2][2] = 2 * p * (p * q - 2 * q + 1);
    t[3][2] = 2 * p2 * q * (p - 1);
    t[1][3] = 2 * q;
    t[2][3] = 2 * q * (p - 1);
    t[3][3] = 2 * (p2 * q - p * q - q + 1);
  } else {
    t[1][1] = p;
    t[4][1] = q - 1;
    t[1][4] = 2 * p2 * p;
    t[4][4] = 2 * (p2 * q - 2 * p2 + 1);
  }
  for (int g = 1; g <= 4; ++g)
    for (int h = 1; h <= 4; ++h)
      if (!prof.admits(g) || !prof.admits(h))
        t[g][h] = 0;
  return t;
}

inline Grid e_table(std::int64_t p, std::int64_t q) {
  const DivisibilityProfile prof = divisibility_profile(p, q);
  Grid t{};
  const std::int64_t p2 = p * p;
  if (!prof.q_divides_p_minus_1) {
    t[1][1] = p;
    t[2][1] = p * q;
    t[3][1] = p * q;
    t[1][2] = 2 * p * (p - 1);
    t[2][2] = 2 * p * (p * q - 2 * q + 1);
    t[3][2] = 2 * p * q * (p - 1);
    t[1][3] = 2 * p * (p - 1);
    t[2][3] = 2 * p * q * (p - 1);
    t[3][3] = 2 * (p2 * q - p * q - q + 1);
  } else {
    t[1][1] = p;
    t[4][1] = p2;
    t[1][4] = 2 * p * (q - 1);
    t[4][4] = 2 * (p2 * q - 2 * p2 + 1);
  }
  for (int g = 1; g <= 4; ++g)
    for (int h = 1; h <= 4; ++h)
      if (!prof.admits(g) || !prof.admits(h))
        t[g][h] = 0;
  return t;
}

namespace detail {

inline void push_class(std::vector<ClassEntry>& v, std::int64_t count, std::int64_t length) {
  if (count > 0)
    v.push_back({count, length});
}

} // namespace detail

inline ClassGrid class_tables(std::int64_t p, std::int64_t q) {
  const DivisibilityProfile prof = divisibility_profile(p, q);
  ClassGrid c;
  const std::int64_t p2 = p * p;
  using detail::push_class;
  // G of type 1
  push_class(c[1][1], 1, 1);
  push_class(c[1][1], 1, p - 1);
  if (prof.admits(2))
    push_class(c[2][1], p, p - 1);
  if (prof.admits(3))
    push_class(c[3][1], p, p * (p - 1));
  if (prof.admits(4))
    push_class(c[4][1], 1, q - 1);
  if (prof.admits(2)) {
    push_class(c[1][2], 2 * p, q);
    push_class(c[2][2], 2 * p, 1);
    push_class(c[2][2], 2 * p * (p - 2), q);
    if (prof.admits(3))
      push_class(c[3][2], 2 * p * (p - 1), q * p);
  }
  if (prof.admits(3)) {
    push_class(c[1][3], 2, q);
    push_class(c[2][3], 2 * (p - 1), q);
    push_class(c[3][3], 2, 1);
    push_class(c[3][3], 2 * (p2 - p - 1), q);
  }
  if (prof.admits(4)) {
    push_class(c[1][4], 2, p2);
    push_class(c[1][4], 2, p2 * (p - 1));
    push_class(c[4][4], 2, 1);
    push_class(c[4][4], 2 * (q - 2), p2);
  }
  return c;
}

/// Total number of Hopf-Galois structures on a Galois extension with group of
/// type `gamma`, over all G of order p^2 q with cyclic Sylow p-subgroups.
inline std::int64_t totals(std::int64_t p, std::int64_t q, int gamma) {
  const DivisibilityProfile prof = divisibility_profile(p, q);
  if (!prof.admits(gamma))
    return 0;
  switch (gamma) {
  case 1:
    if (prof.q_divides_p_minus_1)
      return p * (2 * q - 1);
    switch (prof.p_divides_q_minus_1) {
    case PDivision::NotDividing: return p;
    case PDivision::Exactly: return p * (2 * p - 1);
    case PDivision::Squared: return p * (4 * p - 3);
    }
    return 0;
  case 2:
    if (prof.p_divides_q_minus_1 == PDivision::Exactly)
      return p * (2 * p * q - 3 * q + 2);
    return p * (4 * p * q - 5 * q + 2);
  case 3: return 4 * p * p * q - 3 * p * q - 2 * q + 2;
  case 4: return 2 * p * p * q - 3 * p * p + 2;
  default: return 0;
  }
}

inline CountTable count_table(std::int64_t p, std::int64_t q) {
  CountTable t;
  t.p = p;
  t.q = q;
  t.profile = divisibility_profile(p, q);
  t.e_prime = e_prime_table(p, q);
  t.e = e_table(p, q);
  t.classes = class_tables(p, q);
  for (int g = 1; g <= 4; ++g)
    t.totals[g] = totals(p, q, g);
  return t;
}

// ---------------------------------------------------------------------------
// Order pq, p > q. Index 0 is the cyclic group, 1 the metacyclic one.

struct PqTable {
  std::int64_t p = 0;
  std::int64_t q = 0;
  bool metacyclic_exists = false;
  std::array<std::array<std::int64_t, 2>, 2> e_prime{};
  std::array<std::array<std::int64_t, 2>, 2> e{};
  std::array<std::array<std::vector<ClassEntry>, 2>, 2> classes;
};

inline PqTable pq_tables(std::int64_t p, std::int64_t q) {
  if (!is_prime(p) || !is_prime(q))
    throw InvalidInput("not-prime", "p and q must be prime");
  if (p <= q)
    throw InvalidInput("invalid-pq", "order-pq tables need p > q");
  PqTable t;
  t.p = p;
  t.q = q;
  t.metacyclic_exists = (p - 1) % q == 0;
  t.e_prime[0][0] = 1;
  t.e[0][0] = 1;
  detail::push_class(t.classes[0][0], 1, 1);
  if (t.metacyclic_exists) {
    t.e_prime[0][1] = 2 * p;
    t.e_prime[1][0] = q - 1;
    t.e_prime[1][1] = 2 * (p * q - 2 * p + 1);
    t.e[0][1] = 2 * (q - 1);
    t.e[1][0] = p;
    t.e[1][1] = 2 * (p * q - 2 * p + 1);
    detail::push_class(t.classes[0][1], 2, p);
    detail::push_class(t.classes[1][0], 1, q - 1);
    detail::push_class(t.classes[1][1], 2, 1);
    detail::push_class(t.classes[1][1], 2 * (q - 2), p);
  }
  return t;
}

// ---------------------------------------------------------------------------
// Rendering.

inline std::string classes_string(const std::vector<ClassEntry>& cs) {
  std::string s;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i)
      s += ';';
    s += std::to_string(cs[i].count) + "×" + std::to_string(cs[i].length);
  }
  return s;
}

inline std::string render_csv(const CountTable& t) {
  std::ostringstream out;
  out << "gamma_type,g_type,e_prime,e,classes\n";
  for (int gamma : t.profile.types)
    for (int g : t.profile.types)
      out << gamma << ',' << g << ',' << t.e_prime_at(gamma, g) << ',' << t.e_at(gamma, g) << ','
          << classes_string(t.classes_at(gamma, g)) << '\n';
  out << "\ngamma_type,total\n";
  for (int gamma : t.profile.types)
    out << gamma << ',' << t.total_at(gamma) << '\n';
  return out.str();
}

inline nlohmann::ordered_json to_json(const CountTable& t) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["p"] = t.p;
  j["q"] = t.q;
  j["types"] = t.profile.types;
  ordered_json rows = ordered_json::array();
  for (int gamma : t.profile.types)
    for (int g : t.profile.types) {
      ordered_json cls = ordered_json::array();
      for (const auto& c : t.classes_at(gamma, g))
        cls.push_back(std::to_string(c.count) + "×" + std::to_string(c.length));
      rows.push_back({{"gamma_type", gamma},
                      {"g_type", g},
                      {"e_prime", t.e_prime_at(gamma, g)},
                      {"e", t.e_at(gamma, g)},
                      {"classes", cls}});
    }
  j["rows"] = rows;
  ordered_json tot = ordered_json::object();
  for (int gamma : t.profile.types)
    tot[std::to_string(gamma)] = t.total_at(gamma);
  j["totals"] = tot;
  return j;
}

} // namespace skewbrace
