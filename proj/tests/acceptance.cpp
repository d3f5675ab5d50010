// Acceptance suite: one PASS/FAIL line per criterion. Pass --slow to run the
// large closure-oracle case as well.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>

#include "skewbrace/counts.hpp"
#include "skewbrace/enumerate.hpp"
#include "skewbrace/verify.hpp"

using namespace skewbrace;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::ostringstream notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << " [" << what << "]";
    }
  }
  void require(const Report& rep) {
    for (const auto& c : rep.checks)
      if (c.status == CheckStatus::Fail)
        require(false, c.name + ": " + c.detail);
  }
};

std::vector<EnumerationResult> g_enumerated;
std::vector<std::pair<std::int64_t, std::int64_t>> g_tested_p2q;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool no_skips(const Report& rep, const std::string& needle) {
  for (const auto& c : rep.checks)
    if (c.name.find(needle) != std::string::npos && c.status == CheckStatus::Skipped)
      return false;
  return true;
}

EnumerationResult oracle_against(const EnumerationResult& ref, std::int64_t limit) {
  OracleOptions oo;
  oo.max_hol_order = limit;
  return closure_oracle_checked(ref, oo);
}

// Structured and search enumerations of one family, compared with each other
// and with the closed-form column.
EnumerationResult structured_and_search(Outcome& out, Family f, std::int64_t p, std::int64_t q) {
  const auto ctx = make_context(f, p, q);
  EnumerationResult s = structured_enumerate(ctx);
  const EnumerationResult g = gfe_search(ctx);
  out.require(same_brace_set(s, g), to_string(f) + " structured != gfe-search");
  const CountTable t = count_table(p, q);
  out.require(table_report(s, t, p2q_type_number(iso_type_of(f)), to_string(f)));
  g_enumerated.push_back(s);
  return s;
}

void criterion1(Outcome& out) {
  const auto t0 = Clock::now();
  for (auto [p, q] : std::vector<std::pair<int, int>>{{3, 2}, {5, 2}, {7, 3}}) {
    VerifyOptions opt;
    const Report rep = verify_pq(p, q, opt);
    out.require(rep);
    out.require(no_skips(rep, "closure-oracle"), "oracle skipped at (" + std::to_string(p) + "," + std::to_string(q) + ")");
    for (const auto& fr : pq_enumerate(p, q))
      g_enumerated.push_back(fr.search);
  }
  out.require(pq_tables(3, 2).e_prime[0][1] == 6, "e'(C6, S3) != 6");
  const double s = seconds_since(t0);
  out.require(s < 10, "runtime " + std::to_string(s) + " s");
  out.notes << " (" << s << " s)";
}

void criterion2(Outcome& out) {
  const auto t0 = Clock::now();
  // |Hol| = 3000 for (5,3) Type 1, above the default gate.
  const std::int64_t limit = 3000;
  auto check = [&](Family f, std::int64_t p, std::int64_t q, std::map<IsoType, std::int64_t> want) {
    const auto s = structured_and_search(out, f, p, q);
    out.require(s.counts_by_type() == want, to_string(f) + " counts");
    try {
      oracle_against(s, limit);
    } catch (const Error& e) {
      out.require(false, to_string(f) + " oracle: " + e.what());
    }
  };
  check(Family::P2QType1, 3, 2, {{IsoType::Type1, 3}, {IsoType::Type4, 1}});
  check(Family::P2QType4, 3, 2, {{IsoType::Type1, 54}, {IsoType::Type4, 2}});
  check(Family::P2QType1, 5, 3, {{IsoType::Type1, 5}});
  g_tested_p2q.push_back({3, 2});
  g_tested_p2q.push_back({5, 3});
  const double s = seconds_since(t0);
  out.require(s < 60, "runtime " + std::to_string(s) + " s");
  out.notes << " (" << s << " s)";
}

void criterion3(Outcome& out, bool slow) {
  const auto t0 = Clock::now();
  const auto s1 = structured_and_search(out, Family::P2QType1, 3, 7);
  const auto s2 = structured_and_search(out, Family::P2QType2, 3, 7);
  out.require(s1.count(IsoType::Type1) == 3 && s1.count(IsoType::Type2) == 6, "Type1 column != {3, 6}");
  out.require(s2.count(IsoType::Type1) == 42 && s2.count(IsoType::Type2) == 48, "Type2 column != {42, 48}");
  try {
    oracle_against(s1, 2268);
    if (slow)
      oracle_against(s2, 7938);
  } catch (const Error& e) {
    out.require(false, std::string("oracle: ") + e.what());
  }
  g_tested_p2q.push_back({3, 7});
  const double s = seconds_since(t0);
  out.require(s < (slow ? 900 : 60), "runtime " + std::to_string(s) + " s");
  out.notes << (slow ? " (with Type2 oracle, " : " (Type2 oracle behind --slow, ") << s << " s)";
}

void criterion4(Outcome& out) {
  const auto t0 = Clock::now();
  for (Family f : {Family::P2QType1, Family::P2QType2, Family::P2QType3})
    structured_and_search(out, f, 3, 19);
  const auto t = count_table(3, 19);
  out.require(t.e_prime_at(3, 3) == 192 && t.e_prime_at(3, 1) == 18, "closed-form spot values");
  const auto& s3 = g_enumerated.back();
  out.require(s3.class_profile(IsoType::Type3) == std::vector<std::pair<std::int64_t, std::int64_t>>{{2, 1}, {10, 19}},
              "Type3 orbit profile");
  bool gated = false;
  try {
    closure_oracle(make_context(Family::P2QType3, 3, 19));
  } catch (const ResourceLimit&) {
    gated = true;
  }
  out.require(gated, "oracle not gated");
  g_tested_p2q.push_back({3, 19});
  const double s = seconds_since(t0);
  out.require(s < 300, "runtime " + std::to_string(s) + " s");
  out.notes << " (" << s << " s)";
}

void criterion5(Outcome& out) {
  for (auto [p, q] : g_tested_p2q)
    out.require(scaling_report(p, q, count_table(p, q)));
  out.notes << " (" << g_tested_p2q.size() << " (p,q) pairs)";
}

void criterion6(Outcome& out) {
  std::size_t n = 0;
  for (const auto& r : g_enumerated) {
    out.require(property_report(r, to_string(r.spec().family) + " " + std::to_string(r.spec().p) + "," +
                                       std::to_string(r.spec().q)));
    n += r.braces.size();
  }
  out.require(rgf_uniqueness_report(make_context(Family::P2QType1, 3, 2), "Type1 3,2"));
  out.notes << " (" << n << " braces)";
}

void criterion7(Outcome& out) {
  for (auto [p, q] : g_tested_p2q) {
    const auto t = count_table(p, q);
    for (int gamma : t.profile.types) {
      std::int64_t sum = 0;
      for (int g : t.profile.types)
        sum += t.e_at(gamma, g);
      out.require(sum == totals(p, q, gamma), "total (" + std::to_string(p) + "," + std::to_string(q) + ") " +
                                                  std::to_string(gamma));
    }
  }
  out.require(totals(3, 7, 1) == 15, "(3,7) type 1 total != 15");
  out.require(totals(5, 3, 1) == 5, "(5,3) type 1 total != 5");
  out.require(totals(3, 2, 4) == 11, "(3,2) type 4 total != 11");
}

} // namespace

int main(int argc, char** argv) {
  bool slow = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--slow") == 0)
      slow = true;

  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"pq suite", criterion1},
      {"p^2 q full-oracle suite", criterion2},
      {"p^2 q medium suite", [&](Outcome& o) { criterion3(o, slow); }},
      {"p^2 | q-1 suite", criterion4},
      {"scaling identity", criterion5},
      {"property suites", criterion6},
      {"totals", criterion7},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    try {
      criteria[i].second(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    failed += out.ok ? 0 : 1;
    std::cout << (out.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << out.notes.str()
              << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
