#pragma once

// Cross-validation of the enumeration routes against each other, against the
// closed-form tables, and against the structural identities.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "counts.hpp"
#include "enumerate.hpp"
#include "json.hpp"
#include "properties.hpp"

namespace skewbrace {

enum class CheckStatus { Pass, Fail, Skipped };

inline std::string to_string(CheckStatus s) {
  switch (s) {
  case CheckStatus::Pass: return "pass";
  case CheckStatus::Fail: return "fail";
  case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

struct Report {
  std::vector<Check> checks;

  void add(std::string name, bool ok, std::string detail = {}) {
    checks.push_back({std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)});
  }
  void skip(std::string name, std::string detail) {
    checks.push_back({std::move(name), CheckStatus::Skipped, std::move(detail)});
  }
  bool ok() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::Fail)
        return false;
    return true;
  }
  void append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : checks)
      arr.push_back({{"check", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
    return nlohmann::ordered_json{{"ok", ok()}, {"checks", arr}};
  }
};

struct VerifyOptions {
  std::int64_t oracle_limit = kDefaultMaxHolOrder;
  int jobs = 1;
  bool pq = false;
};

namespace detail {

inline std::string counts_string(const std::map<IsoType, std::int64_t>& m) {
  std::string s;
  for (auto [t, n] : m) {
    if (!s.empty())
      s += ", ";
    s += to_string(t) + "=" + std::to_string(n);
  }
  return s.empty() ? "none" : s;
}

inline std::string profile_string(const std::vector<std::pair<std::int64_t, std::int64_t>>& v) {
  std::string s;
  for (auto [c, l] : v)
    s += "(" + std::to_string(c) + "," + std::to_string(l) + ")";
  return s.empty() ? "none" : s;
}

inline std::string profile_string(const std::vector<ClassEntry>& v) {
  std::vector<std::pair<std::int64_t, std::int64_t>> w;
  for (const auto& c : v)
    w.emplace_back(c.count, c.length);
  return profile_string(w);
}

inline IsoType iso_of_type_number(int t) { return iso_type_of(p2q_family(t)); }

} // namespace detail

/// Every structural identity on every brace of the result. One check per
/// identity; the detail names the first offending brace.
inline Report property_report(const EnumerationResult& r, const std::string& prefix) {
  Report rep;
  struct Prop {
    std::string name;
    std::function<bool(const SkewBraceRecord&)> holds;
  };
  const std::vector<Prop> props = {
      {"gfe", [](const SkewBraceRecord& b) { return static_cast<bool>(check_gfe(b.gamma)); }},
      {"brace-axiom", [](const SkewBraceRecord& b) { return brace_axiom_holds(b.gamma, b.circle_table); }},
      {"dual-involution", [](const SkewBraceRecord& b) { return dual_is_involution(b.gamma); }},
      {"kernel-dichotomy", [](const SkewBraceRecord& b) { return kernel_dichotomy_holds(b.gamma); }},
      {"sylow-type", [](const SkewBraceRecord& b) { return sylow_type_preserved(b); }},
      {"inverse-formula", [](const SkewBraceRecord& b) { return inverse_formula_holds(b.gamma, b.circle_table); }},
      {"nu-b-dichotomy", [](const SkewBraceRecord& b) { return nu_b_dichotomy_holds(b.gamma); }},
      {"morphism-commutator", [](const SkewBraceRecord& b) { return morphism_commutator_holds(b.gamma); }},
      {"invariance-closure", [](const SkewBraceRecord& b) { return invariance_closure_equivalence_holds(b.gamma, b.circle_table); }},
      {"same-generator-order", [](const SkewBraceRecord& b) { return same_generator_order_holds(b.gamma, b.circle_table); }},
      {"regular-round-trip", [](const SkewBraceRecord& b) { return regular_round_trip_holds(b.gamma); }},
      {"nu-regular", [](const SkewBraceRecord& b) { return is_regular(Holomorph(b.gamma.context_ptr()), nu_subgroup(b.gamma)); }},
  };
  for (const auto& prop : props) {
    std::int64_t bad = 0;
    std::string first;
    for (std::size_t i = 0; i < r.braces.size(); ++i)
      if (!prop.holds(r.braces[i])) {
        if (bad++ == 0)
          first = "first failure at brace " + std::to_string(i);
      }
    rep.add(prefix + " property " + prop.name, bad == 0,
            std::to_string(r.braces.size() - bad) + "/" + std::to_string(r.braces.size()) + " hold" +
                (first.empty() ? "" : "; " + first));
  }

  // Set-level identities: duality permutes the set preserving circle types,
  // and every orbit length divides |Aut(G)|.
  std::map<std::vector<int>, IsoType> type_of;
  for (const auto& b : r.braces)
    type_of.emplace(b.gamma.table(), b.circle_type);
  bool dual_ok = true;
  for (const auto& b : r.braces) {
    auto it = type_of.find(dual_gamma(b.gamma).table());
    dual_ok = dual_ok && it != type_of.end() && it->second == b.circle_type;
  }
  rep.add(prefix + " dual permutes brace set", dual_ok);
  bool div_ok = true;
  for (const auto& o : r.orbits)
    div_ok = div_ok && r.ctx->aut.size() % o.length == 0;
  rep.add(prefix + " orbit lengths divide |Aut(G)|", div_ok);
  return rep;
}

/// Every RGF on <a> with gamma(a) = eta is the one built from e_s tables:
/// the brute-force search finds exactly one for every admissible eta.
inline Report rgf_uniqueness_report(const ContextPtr& ctx, const std::string& prefix) {
  Report rep;
  const Group& G = ctx->group;
  const int a = G.gen_a();
  const int m = G.order_of(a);
  const auto A = generated_subgroup(G, {a});
  std::vector<char> in_a(G.order(), 0);
  for (int x : A)
    in_a[x] = 1;
  std::int64_t admissible = 0, unique = 0;
  for (int eta = 0; eta < ctx->aut.size(); ++eta) {
    if (m % ctx->aut.order_of(eta) != 0 || !in_a[ctx->aut.apply(eta, a)])
      continue;
    ++admissible;
    const RGF built = rgf_from_generator(ctx, a, eta);
    if (count_rgfs_with_generator_image(ctx, a, eta) == 1 && built(a) == eta)
      ++unique;
  }
  rep.add(prefix + " rgf uniqueness", admissible == unique,
          std::to_string(unique) + "/" + std::to_string(admissible) + " admissible images give a unique RGF");
  return rep;
}

/// Counts and orbit profile of a result against column G of the tables.
inline Report table_report(const EnumerationResult& r, const CountTable& t, int g_type, const std::string& prefix) {
  Report rep;
  const auto counts = r.counts_by_type();
  std::map<IsoType, std::int64_t> expected;
  for (int gamma : t.profile.types)
    if (t.e_prime_at(gamma, g_type) > 0)
      expected[detail::iso_of_type_number(gamma)] = t.e_prime_at(gamma, g_type);
  rep.add(prefix + " counts match e'", counts == expected,
          "got " + detail::counts_string(counts) + ", expected " + detail::counts_string(expected));
  for (int gamma : t.profile.types) {
    const IsoType it = detail::iso_of_type_number(gamma);
    const auto got = r.class_profile(it);
    const auto want = t.classes_at(gamma, g_type);
    bool same = got.size() == want.size();
    for (std::size_t i = 0; same && i < got.size(); ++i)
      same = got[i].first == want[i].count && got[i].second == want[i].length;
    rep.add(prefix + " classes of circle type " + to_string(it), same,
            "got " + detail::profile_string(got) + ", expected " + detail::profile_string(want));
  }
  return rep;
}

/// Scaling identity e = |Aut Gamma| / |Aut G| e' with |Aut| from the computed groups.
inline Report scaling_report(std::int64_t p, std::int64_t q, const CountTable& t) {
  Report rep;
  std::map<int, std::int64_t> aut;
  for (int type : t.profile.types)
    aut[type] = make_context(p2q_family(type), p, q)->aut.size();
  for (int gamma : t.profile.types)
    for (int g : t.profile.types) {
      const std::int64_t lhs = t.e_at(gamma, g) * aut[g];
      const std::int64_t rhs = aut[gamma] * t.e_prime_at(gamma, g);
      rep.add("scaling e(" + std::to_string(gamma) + "," + std::to_string(g) + ")", lhs == rhs,
              std::to_string(t.e_at(gamma, g)) + " * " + std::to_string(aut[g]) + " vs " +
                  std::to_string(aut[gamma]) + " * " + std::to_string(t.e_prime_at(gamma, g)));
    }
  for (int gamma : t.profile.types) {
    std::int64_t sum = 0;
    for (int g : t.profile.types)
      sum += t.e_at(gamma, g);
    rep.add("total for circle type " + std::to_string(gamma), sum == t.total_at(gamma),
            "sum of e = " + std::to_string(sum) + ", closed form = " + std::to_string(t.total_at(gamma)));
  }
  for (int gamma : t.profile.types)
    for (int g : t.profile.types) {
      std::int64_t sum = 0;
      for (const auto& c : t.classes_at(gamma, g))
        sum += c.count * c.length;
      rep.add("class sum (" + std::to_string(gamma) + "," + std::to_string(g) + ")",
              sum == t.e_prime_at(gamma, g));
    }
  return rep;
}

/// Full pipeline for one family: structured vs search vs oracle, tables,
/// orbits and identities.
inline Report verify_family(const ContextPtr& ctx, const CountTable& t, const VerifyOptions& opt) {
  Report rep;
  const int g_type = p2q_type_number(iso_type_of(ctx->spec.family));
  const std::string name = to_string(ctx->spec.family);
  const EnumerationResult structured = structured_enumerate(ctx);
  rep.append(table_report(structured, t, g_type, name + " structured"));
  rep.append(property_report(structured, name));

  try {
    const EnumerationResult search = gfe_search(ctx, opt.jobs);
    rep.add(name + " structured == gfe-search", same_brace_set(structured, search),
            std::to_string(structured.braces.size()) + " vs " + std::to_string(search.braces.size()));
  } catch (const ResourceLimit& e) {
    rep.skip(name + " structured == gfe-search", e.what());
  }

  try {
    OracleOptions oo;
    oo.max_hol_order = opt.oracle_limit;
    oo.jobs = opt.jobs;
    oo.reference_count = structured.braces.size();
    const EnumerationResult oracle = closure_oracle(ctx, oo);
    rep.add(name + " structured == closure-oracle", same_brace_set(structured, oracle),
            std::to_string(structured.braces.size()) + " vs " + std::to_string(oracle.braces.size()));
  } catch (const ResourceLimit& e) {
    rep.skip(name + " structured == closure-oracle", e.what());
  }
  if (ctx->spec.family == Family::P2QType1)
    rep.append(rgf_uniqueness_report(ctx, name));
  return rep;
}

inline Report verify_pq(std::int64_t p, std::int64_t q, const VerifyOptions& opt) {
  Report rep;
  const PqTable t = pq_tables(p, q);
  OracleOptions oo;
  oo.max_hol_order = opt.oracle_limit;
  oo.jobs = opt.jobs;
  for (const auto& fr : pq_enumerate(p, q, oo)) {
    const int g = fr.family == Family::PQCyclic ? 0 : 1;
    const std::string name = to_string(fr.family);
    for (int gamma = 0; gamma < 2; ++gamma) {
      const IsoType it = gamma == 0 ? IsoType::PQCyclic : IsoType::PQMetacyclic;
      rep.add(name + " e'(" + to_string(it) + ")", fr.search.count(it) == t.e_prime[gamma][g],
              std::to_string(fr.search.count(it)) + " vs " + std::to_string(t.e_prime[gamma][g]));
      const auto got = fr.search.class_profile(it);
      bool same = got.size() == t.classes[gamma][g].size();
      for (std::size_t i = 0; same && i < got.size(); ++i)
        same = got[i].first == t.classes[gamma][g][i].count && got[i].second == t.classes[gamma][g][i].length;
      rep.add(name + " classes of " + to_string(it), same,
              "got " + detail::profile_string(got) + ", expected " + detail::profile_string(t.classes[gamma][g]));
    }
    if (fr.oracle)
      rep.add(name + " gfe-search == closure-oracle", same_brace_set(fr.search, *fr.oracle));
    else
      rep.skip(name + " gfe-search == closure-oracle", "holomorph above the oracle limit");
    rep.append(property_report(fr.search, name));
  }
  return rep;
}

inline Report verify(std::int64_t p, std::int64_t q, const VerifyOptions& opt = {}) {
  Report rep;
  if (opt.pq)
    return verify_pq(p, q, opt);
  const CountTable t = count_table(p, q);
  rep.append(scaling_report(p, q, t));
  for (int type : t.profile.types)
    rep.append(verify_family(make_context(p2q_family(type), p, q), t, opt));
  return rep;
}

} // namespace skewbrace
