#include <gtest/gtest.h>

#include <set>

#include "skewbrace/brace.hpp"
#include "skewbrace/enumerate.hpp"
#include "skewbrace/properties.hpp"

using namespace skewbrace;

namespace {

GammaFunction lifted(const ContextPtr& ctx, int a, int eta) {
  return lift_rgf(rgf_from_generator(ctx, a, eta), generated_subgroup(ctx->group, {ctx->group.gen_b()}));
}

} // namespace

TEST(CheckGfe, IdentityAndOpposite) {
  const auto ctx = make_context(Family::P2QType2, 3, 7);
  EXPECT_TRUE(check_gfe(GammaFunction::identity(ctx)));
  const GammaFunction op = opposite_gamma(ctx);
  EXPECT_TRUE(check_gfe(op));
  const Group& G = ctx->group;
  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < G.order(); ++h)
      ASSERT_EQ(circle(op, g, h), G.mul(h, g));
}

TEST(CheckGfe, PerturbationGivesWitness) {
  const auto ctx = make_context(Family::P2QType2, 3, 7);
  auto t = opposite_gamma(ctx).table();
  t[5] = ctx->aut.compose(t[5], iota(*ctx, ctx->group.gen_b()));
  const GfeCheck chk = check_gfe(GammaFunction(ctx, t));
  EXPECT_FALSE(chk);
  EXPECT_GE(chk.g, 0);
  EXPECT_GE(chk.h, 0);
  try {
    brace_from_gamma(GammaFunction(ctx, t));
    FAIL();
  } catch (const InvalidInput& e) {
    EXPECT_EQ(e.code(), "gfe-violation");
  }
}

TEST(Circle, TrivialCases) {
  const auto ctx = make_context(Family::P2QType4, 3, 2);
  const auto id = GammaFunction::identity(ctx);
  for (int g = 0; g < 18; ++g)
    for (int h = 0; h < 18; ++h)
      EXPECT_EQ(circle(id, g, h), ctx->group.mul(g, h));
  EXPECT_EQ(circle_inverse(id, 0), 0);
}

TEST(Circle, InverseFormulaOnAllType4Braces) {
  const auto r = gfe_search(make_context(Family::P2QType4, 3, 2));
  for (const auto& b : r.braces)
    EXPECT_TRUE(inverse_formula_holds(b.gamma, b.circle_table));
}

TEST(BraceFromGamma, Identity) {
  const auto ctx = make_context(Family::P2QType3, 3, 19);
  const auto r = brace_from_gamma(GammaFunction::identity(ctx));
  EXPECT_EQ(r.circle_type, IsoType::Type3);
  EXPECT_EQ(static_cast<int>(r.kernel.size()), ctx->group.order());
}

TEST(BraceFromGamma, Type4InverseInnerGivesType1) {
  const auto ctx = make_context(Family::P2QType4, 3, 2);
  const int a = ctx->group.gen_a();
  const auto g = lifted(ctx, a, ctx->aut.inverse(iota(*ctx, a)));
  const auto r = brace_from_gamma(g);
  EXPECT_EQ(r.circle_type, IsoType::Type1);
  EXPECT_EQ(r.kernel.size(), 9u);
}

TEST(BraceFromGamma, Type3InnerPowerOneGivesType1) {
  const auto ctx = make_context(Family::P2QType3, 3, 19);
  const int a = ctx->group.gen_a();
  EXPECT_EQ(brace_from_gamma(lifted(ctx, a, iota(*ctx, ctx->group.pow(a, -1)))).circle_type, IsoType::Type1);
  EXPECT_EQ(brace_from_gamma(lifted(ctx, a, iota(*ctx, ctx->group.pow(a, -4)))).circle_type, IsoType::Type2);
  EXPECT_EQ(brace_from_gamma(lifted(ctx, a, iota(*ctx, ctx->group.pow(a, -2)))).circle_type, IsoType::Type3);
}

TEST(NuSubgroup, RhoAndLambda) {
  const auto ctx = make_context(Family::P2QType2, 3, 7);
  const Holomorph hol(ctx);
  std::vector<HolElement> rho_g, lambda_g;
  for (int g = 0; g < ctx->group.order(); ++g) {
    rho_g.push_back(rho(*ctx, g));
    lambda_g.push_back(lambda_rep(*ctx, g));
  }
  std::sort(rho_g.begin(), rho_g.end());
  std::sort(lambda_g.begin(), lambda_g.end());
  EXPECT_EQ(nu_subgroup(GammaFunction::identity(ctx)), rho_g);
  EXPECT_EQ(nu_subgroup(opposite_gamma(ctx)), lambda_g);
  EXPECT_TRUE(is_regular(hol, nu_subgroup(opposite_gamma(ctx))));
}

TEST(NuSubgroup, InjectiveAndTypePreserving) {
  const auto ctx = make_context(Family::P2QType1, 3, 2);
  const Holomorph hol(ctx);
  const auto r = gfe_search(ctx);
  std::set<std::vector<HolElement>> keys;
  for (const auto& b : r.braces) {
    const auto nu = nu_subgroup(b.gamma);
    EXPECT_TRUE(is_regular(hol, nu));
    EXPECT_EQ(classify_iso_type(regular_action_table(hol, nu)).type, b.circle_type);
    keys.insert(nu);
    EXPECT_TRUE(regular_round_trip_holds(b.gamma));
  }
  EXPECT_EQ(keys.size(), r.braces.size());
}

TEST(DualGamma, Examples) {
  const auto ctx = make_context(Family::P2QType4, 3, 2);
  EXPECT_EQ(dual_gamma(GammaFunction::identity(ctx)), opposite_gamma(ctx));
  const auto r = gfe_search(ctx);
  const Holomorph hol(ctx);
  for (const auto& b : r.braces) {
    const auto d = dual_gamma(b.gamma);
    EXPECT_TRUE(check_gfe(d));
    EXPECT_EQ(dual_gamma(d), b.gamma);
    EXPECT_EQ(brace_from_gamma(d).circle_type, b.circle_type);
    std::vector<HolElement> conj;
    for (const auto& h : nu_subgroup(b.gamma))
      conj.push_back(conjugate_by_inv(*ctx, h));
    std::sort(conj.begin(), conj.end());
    EXPECT_EQ(nu_subgroup(d), conj);
  }
}

TEST(DualGamma, AbelianIsPrecomposedInversion) {
  const auto ctx = make_context(Family::P2QType1, 3, 7);
  for (const auto& b : gfe_search(ctx).braces) {
    const auto d = dual_gamma(b.gamma);
    for (int x = 0; x < ctx->group.order(); ++x)
      EXPECT_EQ(d(x), b.gamma(ctx->group.inv(x)));
  }
}

TEST(ConjugateGamma, Examples) {
  const auto ctx = make_context(Family::P2QType4, 3, 2);
  const auto id = GammaFunction::identity(ctx);
  const int a = ctx->group.gen_a();
  const auto g = lifted(ctx, a, ctx->aut.inverse(iota(*ctx, a)));
  EXPECT_EQ(conjugate_gamma(g, ctx->aut.identity()), g);
  std::set<std::vector<int>> orbit;
  for (int beta = 0; beta < ctx->aut.size(); ++beta) {
    EXPECT_EQ(conjugate_gamma(id, beta), id);
    const auto c = conjugate_gamma(g, beta);
    EXPECT_TRUE(check_gfe(c));
    orbit.insert(c.table());
  }
  EXPECT_EQ(orbit.size(), 9u);
}

TEST(Rgf, IdentityAndType1Example) {
  const auto ctx = make_context(Family::P2QType1, 3, 7);
  const Group& G = ctx->group;
  const int a = G.gen_a();
  const RGF triv = rgf_from_generator(ctx, a, ctx->aut.identity());
  for (int x : triv.domain)
    EXPECT_EQ(triv(x), ctx->aut.identity());

  const int eta = *ctx->aut.find_by_images(G.pow(a, 4), G.gen_b());
  const RGF r = rgf_from_generator(ctx, a, eta);
  const EsTable es4(4, Modulus(9));
  for (int k = 0; k < 9; ++k)
    EXPECT_EQ(r(G.pow(a, es4.es(k))), ctx->aut.pow(eta, k));
  EXPECT_TRUE(is_morphism(r) == (ctx->aut.order_of(eta) == 3));

  const auto g = lift_rgf(r, generated_subgroup(G, {G.gen_b()}));
  EXPECT_TRUE(check_gfe(g));
  const auto ker = kernel(g);
  for (int u = 0; u < 7; ++u)
    EXPECT_TRUE(std::binary_search(ker.begin(), ker.end(), G.index({0, u})));
}

TEST(Rgf, Errors) {
  const auto ctx = make_context(Family::P2QType2, 3, 7);
  const Group& G = ctx->group;
  const int a = G.gen_a();
  // iota(b) moves <a>
  try {
    rgf_from_generator(ctx, a, iota(*ctx, G.gen_b()));
    FAIL();
  } catch (const InvalidInput& e) {
    EXPECT_EQ(e.code(), "not-invariant");
  }
  const auto c1 = make_context(Family::P2QType1, 3, 7);
  int big = -1;
  for (int i = 0; i < c1->aut.size(); ++i)
    if (c1->aut.order_of(i) == 2)
      big = i;
  try {
    rgf_from_generator(c1, c1->group.gen_a(), big);
    FAIL();
  } catch (const InvalidInput& e) {
    EXPECT_EQ(e.code(), "order-too-big");
  }
}

TEST(Rgf, UniquenessType1Exhaustive) {
  const auto ctx = make_context(Family::P2QType1, 3, 2);
  const int a = ctx->group.gen_a();
  int admissible = 0;
  for (int eta = 0; eta < ctx->aut.size(); ++eta) {
    if (9 % ctx->aut.order_of(eta) != 0)
      continue;
    ++admissible;
    EXPECT_EQ(count_rgfs_with_generator_image(ctx, a, eta), 1);
  }
  EXPECT_EQ(admissible, 3);
}

TEST(Lift, IdentityLiftsToIdentity) {
  const auto ctx = make_context(Family::P2QType2, 3, 7);
  EXPECT_EQ(lifted(ctx, ctx->group.gen_a(), ctx->aut.identity()), GammaFunction::identity(ctx));
}

TEST(Lift, PreconditionFailures) {
  const auto c4 = make_context(Family::P2QType4, 3, 2);
  const Group& G4 = c4->group;
  // RGF on the normal <b> lifted over <a>: iota(b) moves <a>, so condition (2) fails.
  try {
    lift_rgf(rgf_from_generator(c4, G4.gen_b(), c4->aut.identity()), generated_subgroup(G4, {G4.gen_a()}));
    FAIL();
  } catch (const InvalidInput& e) {
    EXPECT_EQ(e.code(), "lift-precondition-failed");
    EXPECT_NE(std::string(e.what()).find("(2)"), std::string::npos);
  }
  const auto c1 = make_context(Family::P2QType1, 3, 7);
  const Group& G1 = c1->group;
  const int psi = *c1->aut.find_by_images(G1.pow(G1.gen_a(), 4), G1.gen_b());
  std::vector<int> all(G1.order());
  for (int x = 0; x < G1.order(); ++x)
    all[x] = x;
  try {
    lift_rgf(rgf_from_generator(c1, G1.gen_a(), psi), all);
    FAIL();
  } catch (const InvalidInput& e) {
    EXPECT_EQ(e.code(), "lift-precondition-failed");
    EXPECT_NE(std::string(e.what()).find("(1)"), std::string::npos);
  }
}

// A gamma function with B in its kernel is a lifting from exactly the Sylow
// p-subgroups invariant under gamma(G).
TEST(Lift, Type2SylowChoices) {
  const auto ctx = make_context(Family::P2QType2, 3, 7);
  const Group& G = ctx->group;
  const auto B = generated_subgroup(G, {G.gen_b()});
  const auto sylows = cyclic_subgroups(G, 9);
  ASSERT_EQ(sylows.size(), 7u);
  const int a0 = sylows[0].generator;
  const auto g_inner = lifted(ctx, a0, iota(*ctx, G.pow(a0, -2)));
  const auto g_psi = lifted(ctx, a0, psi_for_A(*ctx, a0));
  for (const auto& [g, expected_n1] : {std::pair{g_inner, 1}, std::pair{g_psi, 7}}) {
    int n1 = 0;
    for (const auto& S : sylows) {
      try {
        const auto l = lift_rgf(rgf_from_generator(ctx, S.generator, g(S.generator)), B);
        EXPECT_EQ(l, g);
        ++n1;
      } catch (const InvalidInput& e) {
        EXPECT_EQ(e.code(), "not-invariant");
      }
    }
    EXPECT_EQ(n1, expected_n1);
  }
}

TEST(IsMorphism, Examples) {
  const auto ctx = make_context(Family::P2QType4, 3, 2);
  EXPECT_TRUE(is_morphism(GammaFunction::identity(ctx)));
  for (const auto& b : gfe_search(ctx).braces)
    EXPECT_TRUE(morphism_commutator_holds(b.gamma));
  // gamma(a) of order p on a cyclic A gives a morphism.
  const auto c1 = make_context(Family::P2QType1, 3, 7);
  for (int eta = 0; eta < c1->aut.size(); ++eta)
    if (c1->aut.order_of(eta) == 3)
      EXPECT_TRUE(is_morphism(rgf_from_generator(c1, c1->group.gen_a(), eta)));
}

TEST(Properties, KernelAndNuDichotomies) {
  for (auto [f, p, q] : std::vector<std::tuple<Family, int, int>>{
           {Family::P2QType2, 3, 7}, {Family::P2QType4, 3, 2}, {Family::P2QType3, 3, 19}}) {
    const auto r = structured_enumerate(make_context(f, p, q));
    for (const auto& b : r.braces) {
      EXPECT_TRUE(kernel_dichotomy_holds(b.gamma));
      EXPECT_TRUE(nu_b_dichotomy_holds(b.gamma));
      EXPECT_TRUE(invariance_closure_equivalence_holds(b.gamma, b.circle_table));
      EXPECT_TRUE(same_generator_order_holds(b.gamma, b.circle_table));
      EXPECT_TRUE(sylow_type_preserved(b));
    }
  }
}

TEST(Properties, BraceAxiomDetectsViolations) {
  const auto ctx = make_context(Family::P2QType4, 3, 2);
  const auto g = opposite_gamma(ctx);
  auto circ = circle_table(g);
  EXPECT_TRUE(brace_axiom_holds(g, circ));
  // The group law transported along a relabelling is a group but no brace.
  const Group& G = ctx->group;
  const int n = G.order();
  std::vector<int> sigma(n), inv(n);
  for (int x = 0; x < n; ++x)
    sigma[x] = x;
  std::swap(sigma[1], sigma[5]);
  std::swap(sigma[2], sigma[11]);
  for (int x = 0; x < n; ++x)
    inv[sigma[x]] = x;
  std::vector<int> data(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      data[x * n + y] = inv[G.mul(sigma[x], sigma[y])];
  EXPECT_FALSE(brace_axiom_holds(g, CayleyTable(n, data)));
}
