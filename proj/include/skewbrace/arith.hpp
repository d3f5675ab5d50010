#pragma once

// Exact modular arithmetic over machine words, plus the geometric sums
// e_s(k) = 1 + s + ... + s^(k-1) that parameterise cyclic relative gamma
// functions.

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "error.hpp"

namespace skewbrace {

class Modulus {
public:
  explicit Modulus(std::int64_t m) : m_(m) {
    if (m < 2)
      throw InvalidInput("invalid-modulus", "modulus must be >= 2, got " + std::to_string(m));
  }
  std::int64_t value() const noexcept { return m_; }

private:
  std::int64_t m_;
};

/// Non-negative remainder.
inline std::int64_t reduce(std::int64_t x, const Modulus& m) {
  std::int64_t r = x % m.value();
  return r < 0 ? r + m.value() : r;
}

inline std::int64_t mod_pow(std::int64_t base, std::uint64_t exp, const Modulus& m) {
  std::int64_t result = 1 % m.value();
  std::int64_t b = reduce(base, m);
  while (exp > 0) {
    if (exp & 1u)
      result = result * b % m.value();
    b = b * b % m.value();
    exp >>= 1u;
  }
  return result;
}

/// Least d >= 1 with x^d == 1 (mod m).
inline std::int64_t mult_order(std::int64_t x, const Modulus& m) {
  std::int64_t r = reduce(x, m);
  if (std::gcd(r, m.value()) != 1)
    throw InvalidInput("not-coprime", std::to_string(x) + " is not a unit modulo " +
                                          std::to_string(m.value()));
  std::int64_t acc = r;
  std::int64_t d = 1;
  while (acc != 1 % m.value()) {
    acc = acc * r % m.value();
    ++d;
  }
  return d;
}

/// Smallest t in [2, m) of multiplicative order `order` modulo m; 1 for the
/// trivial action. Fixing the smallest choice makes constructions reproducible.
inline std::int64_t canonical_action_exponent(std::int64_t order, const Modulus& m) {
  if (order == 1)
    return 1;
  for (std::int64_t t = 2; t < m.value(); ++t) {
    if (std::gcd(t, m.value()) == 1 && mult_order(t, m) == order)
      return t;
  }
  throw InvalidInput("no-action-exponent", "no unit of order " + std::to_string(order) +
                                               " modulo " + std::to_string(m.value()));
}

/// e_s(k) = sum_{i<k} s^i mod m.
inline std::int64_t es(std::int64_t k, std::int64_t s, const Modulus& m) {
  std::int64_t sum = 0;
  std::int64_t power = 1 % m.value();
  const std::int64_t sr = reduce(s, m);
  for (std::int64_t i = 0; i < k; ++i) {
    sum = (sum + power) % m.value();
    power = power * sr % m.value();
  }
  return sum;
}

inline bool is_prime(std::int64_t n) {
  if (n < 2)
    return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

/// If m = r^k for a prime r, returns r; otherwise 0.
inline std::int64_t prime_power_base(std::int64_t m) {
  if (m < 2)
    return 0;
  std::int64_t r = 2;
  while (m % r != 0)
    ++r;
  while (m % r == 0)
    m /= r;
  return m == 1 ? r : 0;
}

/// The table k -> e_s(k) mod p^n for k in [0, p^n), together with its inverse
/// f_s. Only valid when the table is a complete residue system, which holds
/// for s == 1 (mod p) with p odd.
class EsTable {
public:
  EsTable(std::int64_t s, const Modulus& m) : s_(reduce(s, m)), m_(m.value()) {
    const std::int64_t p = prime_power_base(m_);
    if (p == 0)
      throw InvalidInput("not-prime-power", "e_s tables need a prime-power modulus, got " +
                                                std::to_string(m_));
    if (s_ % p != 1 % p)
      throw InvalidInput("s-not-one-mod-p", "s = " + std::to_string(s) +
                                                " is not 1 modulo " + std::to_string(p));
    values_.resize(static_cast<std::size_t>(m_));
    inverse_.assign(static_cast<std::size_t>(m_), -1);
    std::int64_t sum = 0;
    std::int64_t power = 1 % m_;
    for (std::int64_t k = 0; k < m_; ++k) {
      values_[k] = sum;
      if (inverse_[sum] != -1)
        throw InvalidInput("es-not-injective", "e_s is not injective modulo " +
                                                   std::to_string(m_));
      inverse_[sum] = k;
      sum = (sum + power) % m_;
      power = power * s_ % m_;
    }
  }

  std::int64_t s() const noexcept { return s_; }
  std::int64_t modulus() const noexcept { return m_; }
  std::int64_t es(std::int64_t k) const { return values_[static_cast<std::size_t>(k % m_)]; }
  std::int64_t fs(std::int64_t r) const {
    return inverse_[static_cast<std::size_t>(((r % m_) + m_) % m_)];
  }
  const std::vector<std::int64_t>& values() const noexcept { return values_; }

private:
  std::int64_t s_;
  std::int64_t m_;
  std::vector<std::int64_t> values_;
  std::vector<std::int64_t> inverse_;
};

/// Inverse of e_s modulo m = p^n: the unique k in [0, m) with e_s(k) == r.
inline std::int64_t fs(std::int64_t r, std::int64_t s, const Modulus& m) {
  return EsTable(s, m).fs(r);
}

enum class PDivision { NotDividing, Exactly, Squared };

struct DivisibilityProfile {
  std::int64_t p = 0;
  std::int64_t q = 0;
  PDivision p_divides_q_minus_1 = PDivision::NotDividing;
  bool q_divides_p_minus_1 = false;
  std::vector<int> types; // applicable group types of order p^2 q, ascending

  bool admits(int type) const {
    for (int t : types)
      if (t == type)
        return true;
    return false;
  }
};

inline DivisibilityProfile divisibility_profile(std::int64_t p, std::int64_t q) {
  if (!is_prime(p))
    throw InvalidInput("not-prime", "p = " + std::to_string(p) + " is not prime");
  if (!is_prime(q))
    throw InvalidInput("not-prime", "q = " + std::to_string(q) + " is not prime");
  if (p == q)
    throw InvalidInput("equal-primes", "p and q must be distinct");
  if (p == 2)
    throw InvalidInput("p-equals-2",
                       "p = 2 is excluded: groups of order 4q admit regular subgroups with "
                       "elementary abelian Sylow 2-subgroups in their holomorph");
  DivisibilityProfile prof;
  prof.p = p;
  prof.q = q;
  if ((q - 1) % (p * p) == 0)
    prof.p_divides_q_minus_1 = PDivision::Squared;
  else if ((q - 1) % p == 0)
    prof.p_divides_q_minus_1 = PDivision::Exactly;
  prof.q_divides_p_minus_1 = (p - 1) % q == 0;
  prof.types.push_back(1);
  if (prof.p_divides_q_minus_1 != PDivision::NotDividing)
    prof.types.push_back(2);
  if (prof.p_divides_q_minus_1 == PDivision::Squared)
    prof.types.push_back(3);
  if (prof.q_divides_p_minus_1)
    prof.types.push_back(4);
  return prof;
}

} // namespace skewbrace
