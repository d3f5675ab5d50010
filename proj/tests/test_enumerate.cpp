#include <gtest/gtest.h>

#include "skewbrace/counts.hpp"
#include "skewbrace/enumerate.hpp"

using namespace skewbrace;

namespace {

using Profile = std::vector<std::pair<std::int64_t, std::int64_t>>;

} // namespace

TEST(Structured, Type1At3And2) {
  const auto r = structured_enumerate(make_context(Family::P2QType1, 3, 2));
  EXPECT_EQ(r.braces.size(), 4u);
  EXPECT_EQ(r.count(IsoType::Type1), 3);
  EXPECT_EQ(r.count(IsoType::Type4), 1);
  EXPECT_EQ(r.method, Method::Structured);
}

TEST(Structured, Type4At3And2) {
  const auto r = structured_enumerate(make_context(Family::P2QType4, 3, 2));
  EXPECT_EQ(r.count(IsoType::Type1), 54);
  EXPECT_EQ(r.count(IsoType::Type4), 2);
  EXPECT_EQ(r.class_profile(IsoType::Type1), (Profile{{2, 9}, {2, 18}}));
  EXPECT_EQ(r.class_profile(IsoType::Type4), (Profile{{2, 1}}));
}

TEST(Structured, Type2At3And7) {
  const auto r = structured_enumerate(make_context(Family::P2QType2, 3, 7));
  EXPECT_EQ(r.count(IsoType::Type1), 42);
  EXPECT_EQ(r.count(IsoType::Type2), 48);
  EXPECT_EQ(r.class_profile(IsoType::Type1), (Profile{{6, 7}}));
  EXPECT_EQ(r.class_profile(IsoType::Type2), (Profile{{6, 1}, {6, 7}}));
}

TEST(Structured, Type3At3And19) {
  const auto r = structured_enumerate(make_context(Family::P2QType3, 3, 19));
  EXPECT_EQ(r.count(IsoType::Type1), 38);
  EXPECT_EQ(r.count(IsoType::Type2), 76);
  EXPECT_EQ(r.count(IsoType::Type3), 192);
  EXPECT_EQ(r.class_profile(IsoType::Type3), (Profile{{2, 1}, {10, 19}}));
}

TEST(Structured, Type1At5And3) {
  const auto r = structured_enumerate(make_context(Family::P2QType1, 5, 3));
  EXPECT_EQ(r.braces.size(), 5u);
  EXPECT_EQ(r.count(IsoType::Type1), 5);
}

TEST(Structured, RejectsOrderPq) {
  EXPECT_THROW(structured_enumerate(make_context(Family::PQCyclic, 3, 2)), InvalidInput);
}

TEST(GfeSearch, AgreesWithStructured) {
  for (auto [f, p, q] : std::vector<std::tuple<Family, int, int>>{{Family::P2QType1, 3, 2},
                                                                  {Family::P2QType4, 3, 2},
                                                                  {Family::P2QType1, 3, 7},
                                                                  {Family::P2QType2, 3, 7},
                                                                  {Family::P2QType1, 5, 3},
                                                                  {Family::P2QType1, 5, 2},
                                                                  {Family::P2QType4, 5, 2}}) {
    const auto ctx = make_context(f, p, q);
    EXPECT_TRUE(same_brace_set(structured_enumerate(ctx), gfe_search(ctx))) << to_string(f) << " " << p << " " << q;
  }
}

TEST(GfeSearch, JobsAgree) {
  const auto ctx = make_context(Family::P2QType4, 3, 2);
  EXPECT_TRUE(same_brace_set(gfe_search(ctx, 1), gfe_search(ctx, 3)));
}

TEST(GfeSearch, SizeGate) {
  try {
    gfe_search(make_context(Family::P2QType1, 7, 5));
    FAIL();
  } catch (const ResourceLimit& e) {
    EXPECT_EQ(e.code(), "search-too-large");
  }
}

TEST(ClosureOracle, AgreesOnSmallGroups) {
  for (auto [f, p, q] : std::vector<std::tuple<Family, int, int>>{
           {Family::P2QType1, 3, 2}, {Family::P2QType4, 3, 2}, {Family::P2QType1, 3, 7}}) {
    const auto ctx = make_context(f, p, q);
    OracleOptions opt;
    opt.max_hol_order = 3000;
    EXPECT_NO_THROW(closure_oracle_checked(structured_enumerate(ctx), opt)) << to_string(f);
  }
}

TEST(ClosureOracle, GateAndDisagreement) {
  EXPECT_THROW(closure_oracle(make_context(Family::P2QType2, 3, 7)), ResourceLimit);
  auto ref = structured_enumerate(make_context(Family::P2QType4, 3, 2));
  ref.braces.pop_back();
  try {
    closure_oracle_checked(ref);
    FAIL();
  } catch (const ConsistencyFailure& e) {
    EXPECT_EQ(e.code(), "method-disagreement");
  }
}

TEST(Orbits, PartitionAndCoverage) {
  const auto r = structured_enumerate(make_context(Family::P2QType2, 3, 7));
  std::vector<int> seen(r.braces.size(), 0);
  for (const auto& o : r.orbits) {
    EXPECT_EQ(static_cast<int>(o.members.size()), o.length);
    for (int m : o.members) {
      ++seen[m];
      EXPECT_EQ(r.braces[m].orbit_id, o.id);
      EXPECT_EQ(r.braces[m].circle_type, o.circle_type);
      EXPECT_EQ(static_cast<int>(r.braces[m].kernel.size()), o.kernel_size);
    }
  }
  for (int s : seen)
    EXPECT_EQ(s, 1);
}

TEST(PqEnumerate, MatchesTables) {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{3, 2}, {5, 2}, {7, 3}}) {
    const PqTable t = pq_tables(p, q);
    for (const auto& fr : pq_enumerate(p, q)) {
      const int g = fr.family == Family::PQCyclic ? 0 : 1;
      EXPECT_EQ(fr.search.count(IsoType::PQCyclic), t.e_prime[0][g]);
      EXPECT_EQ(fr.search.count(IsoType::PQMetacyclic), t.e_prime[1][g]);
      ASSERT_TRUE(fr.oracle.has_value());
      EXPECT_TRUE(same_brace_set(fr.search, *fr.oracle));
    }
  }
}

TEST(PqEnumerate, CyclicOnlyWhenQDoesNotDivide) {
  const auto r = pq_enumerate(5, 3);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].search.braces.size(), 1u);
}

// With G of Type 1 the counts of braces by circle type follow the scaling from the e table.
TEST(Scaling, Type1ColumnConsistency) {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{3, 2}, {3, 7}, {5, 3}}) {
    const auto t = count_table(p, q);
    const auto r = structured_enumerate(make_context(Family::P2QType1, p, q));
    const std::int64_t aut1 = make_context(Family::P2QType1, p, q)->aut.size();
    for (int gamma : t.profile.types) {
      const std::int64_t autg = make_context(p2q_family(gamma), p, q)->aut.size();
      EXPECT_EQ(t.e_at(gamma, 1) * aut1, autg * r.count(iso_type_of(p2q_family(gamma))));
    }
  }
}
