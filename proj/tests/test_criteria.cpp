#include <gtest/gtest.h>

#include "support/generators.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"
#include "support/rings.hpp"

using namespace paramkit;
using th::I;
using th::P;

namespace {

const std::vector<std::string> kHighpowerJ = {"a*c", "a*d", "b*c", "b*d"};
const std::vector<std::string> kHeitmannJ = {"((x+u)*u)^3", "x*(x+u)^2*u^2"};

PresentationPtr<Rationals> highpower() { return th::qq({"a", "b", "c", "d"}, kHighpowerJ); }
PresentationPtr<PrimeField> heitmann() { return th::fp(2, {"x", "u"}, kHeitmannJ); }
PresentationPtr<Rationals> xz() { return th::qq({"x", "z"}, {"x^2*z", "z^2"}); }

template <class Fn>
void for_each_ring(const std::vector<rings::Source>& sources, Fn&& fn) {
  for (const auto& src : sources) {
    auto session = load_session(src.text);
    std::visit([&](const auto& s) { fn(src.name, s.presentation()); }, session);
  }
}

}  // namespace

TEST(Sop, Examples) {
  auto hp = highpower();
  EXPECT_TRUE(is_sop(th::seq(hp, {"a+c", "b+d"})));
  const auto rep = sop_report(th::seq(hp, {"a^2", "b^2"}));
  EXPECT_FALSE(rep.sop);
  EXPECT_EQ(rep.ring_dim, 2u);
  EXPECT_EQ(rep.quotient_dim, std::optional<std::size_t>(2));
  EXPECT_FALSE(rep.diagnostic.empty());
  auto r = xz();
  EXPECT_TRUE(is_sop(th::seq(r, {"x"})));
  EXPECT_FALSE(is_sop(th::seq(r, {"z"})));
  EXPECT_FALSE(is_sop(th::seq(r, {"x", "z"})));
  const auto unit = sop_report(th::seq(r, {"1"}));
  EXPECT_FALSE(unit.sop);
  EXPECT_FALSE(unit.quotient_dim.has_value());
  EXPECT_TRUE(is_sop(th::seq(heitmann(), {"x^2"})));
}

// Over the monomial quotients a sequence of variables is a sop exactly when
// the subset-search dimension of J plus those variables is zero.
TEST(Sop, VariableSubsetsMatchMonomialOracle) {
  const std::vector<std::vector<oracle::Exps>> quotients = {
      {{1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}}, {{1, 1, 0, 0}, {0, 0, 2, 0}}, {{2, 1, 0, 0}}};
  for (const auto& q : quotients) {
    std::vector<std::string> qs;
    for (const auto& e : q) {
      std::string m = "1";
      for (std::size_t v = 0; v < 4; ++v) {
        if (e[v]) m += "*" + gen::variable_names(4)[v] + "^" + std::to_string(e[v]);
      }
      qs.push_back(m);
    }
    auto r = th::qq(gen::variable_names(4), qs);
    const std::size_t dim = oracle::monomial_dimension(4, q);
    EXPECT_EQ(ring_dimension(r), dim);
    for (std::uint32_t mask = 1; mask < 16; ++mask) {
      std::vector<std::string> vars;
      auto gens = q;
      for (std::size_t v = 0; v < 4; ++v) {
        if (!(mask & (1u << v))) continue;
        vars.push_back(gen::variable_names(4)[v]);
        oracle::Exps e(4, 0);
        e[v] = 1;
        gens.push_back(e);
      }
      const bool expected = vars.size() == dim && oracle::monomial_dimension(4, gens) == 0;
      EXPECT_EQ(is_sop(th::seq(r, vars)), expected) << mask;
    }
  }
}

TEST(Lift, Examples) {
  auto hp = highpower();
  const auto x = th::seq(hp, {"a+c", "b+d"});
  const auto y = th::seq(hp, {"a^2", "b^2"});
  const auto a = lift_matrix(y, x);
  require_lift(x, y, a);
  EXPECT_TRUE(ideal_member(determinant(a) - P(hp, "a*b"), lim_stage(y, 3)).member);
  const auto self = lift_matrix(x, x);
  EXPECT_TRUE(equal_in_ring(self.apply(x), x));
  auto q = th::qq({"x"});
  const auto principal = lift_matrix(th::seq(q, {"x^2"}), th::seq(q, {"x"}));
  EXPECT_EQ(principal(0, 0), P(q, "x"));
  EXPECT_EQ(th::code_of([&] { (void)lift_matrix(th::seq(hp, {"a", "a+c"}), x); }), ErrorCode::NotContained);
}

TEST(Lift, ReconstructsRandomContainments) {
  gen::Rng rng(61);
  for_each_ring(rings::sop_rings(), [&](const std::string& name, const auto& pres) {
    using F = std::decay_t<decltype(pres->field())>;
    SopSampler<F> sampler(pres, 61);
    auto x = sampler.sop();
    ASSERT_TRUE(x.has_value()) << name;
    CoeffMatrix<F> m(pres, x->size(), x->size());
    for (std::size_t i = 0; i < x->size(); ++i) {
      for (std::size_t j = 0; j < x->size(); ++j) m(i, j) = rng.poly(pres->ambient(), 0, 1, 2);
    }
    const auto y = m.apply(*x);
    for (const auto& o : {MonomialOrder::grevlex(), MonomialOrder::lex()}) {
      const auto a = lift_matrix(y, *x, o);
      EXPECT_NO_THROW(require_lift(*x, y, a)) << name;
      // Cramer: det A (x) inside (y).
      for (const auto& g : x->entries()) EXPECT_TRUE(ideal_member(determinant(a) * g, y.ideal()).member) << name;
    }
  });
}

TEST(Map5, Examples) {
  auto r = xz();
  EXPECT_TRUE(map5_test(th::seq(r, {"x"}), th::seq(r, {"x^2"}), th::mat(r, {{"x"}})));
  auto h = heitmann();
  const auto rep = map5_report(th::seq(h, {"x"}), th::seq(h, {"x^2"}), th::mat(h, {{"x"}}));
  EXPECT_FALSE(rep.injective);
  EXPECT_TRUE(ideal_equal(rep.colon, I(h, {"x", "u^4"})));
  auto hp = highpower();
  const auto x = th::seq(hp, {"a+c", "b+d"});
  EXPECT_TRUE(map5_test(x, x, CoeffMatrix<Rationals>::identity(hp, 2)));
  EXPECT_EQ(th::code_of([&] { (void)map5_test(x, x, th::mat(hp, {{"1", "1"}, {"0", "1"}})); }), ErrorCode::NotALift);
}

TEST(Map1, Examples) {
  auto hp = highpower();
  const auto x = th::seq(hp, {"a+c", "b+d"});
  const auto y = th::seq(hp, {"a^2", "b^2"});
  const auto rep = map1_report(x, y, th::mat(hp, {{"a", "0"}, {"0", "b"}}));
  EXPECT_TRUE(rep.injective);
  EXPECT_EQ(rep.det, P(hp, "a*b"));
  EXPECT_TRUE(ideal_equal(rep.x_lim.closure, Ideal<Rationals>::maximal(hp)));
  auto ab = th::qq({"a", "b"}, {"a*b"});
  EXPECT_FALSE(map1_lim_test(th::seq(ab, {"a+b"}), th::seq(ab, {"a^2"}), th::mat(ab, {{"a"}})));
  const auto unimodular = th::mat(hp, {{"1", "2"}, {"0", "1"}});
  EXPECT_TRUE(map1_lim_test(x, unimodular.apply(x), unimodular));
}

TEST(Map1, SopTargetsAreInjectiveAndLiftIndependent) {
  gen::Rng rng(62);
  for_each_ring(rings::sop_rings(), [&](const std::string& name, const auto& pres) {
    using F = std::decay_t<decltype(pres->field())>;
    SopSampler<F> sampler(pres, 62);
    for (int k = 0; k < 2; ++k) {
      auto x = sampler.sop();
      ASSERT_TRUE(x.has_value());
      const std::size_t d = x->size();
      CoeffMatrix<F> m(pres, d, d);
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) m(i, j) = i == j ? rng.poly(pres->ambient(), 0, 1, 1) : pres->constant(rng.between(-1, 1));
      }
      const auto y = m.apply(*x);
      if (!is_sop(y)) continue;
      EXPECT_TRUE(map1_lim_test(*x, y, m)) << name;
      const auto a = lift_matrix(y, *x, MonomialOrder::grevlex());
      const auto b = lift_matrix(y, *x, MonomialOrder::lex());
      EXPECT_EQ(map1_lim_test(*x, y, a), map1_lim_test(*x, y, b)) << name;
    }
  });
}

TEST(StageLift, MinimalExponent) {
  auto hp = highpower();
  const auto x = th::seq(hp, {"a+c", "b+d"});
  const auto y = th::seq(hp, {"a^2", "b^2"});
  const auto s1 = stage_lift(x, y, 1);
  EXPECT_EQ(s1.s, 1u);
  for (std::uint64_t n = 1; n <= 3; ++n) {
    const auto sl = stage_lift(x, y, n);
    require_lift(x.power(n), y.power(sl.s), sl.b);
    if (sl.s > 1) {
      bool all = true;
      const auto below = y.power(sl.s - 1);
      for (const auto& e : below.entries()) all = all && ideal_member(e, x.power(n).ideal()).member;
      EXPECT_FALSE(all);
    }
  }
  EXPECT_EQ(th::code_of([&] { (void)stage_lift(x, th::seq(hp, {"1", "a"}), 1); }), ErrorCode::NotContained);
}

TEST(Map2, StageOneAgreesWithMap1) {
  auto hp = highpower();
  const auto x = th::seq(hp, {"a+c", "b+d"});
  const auto y = th::seq(hp, {"a^2", "b^2"});
  const auto stages = map2_stage_test(x, y, 3);
  ASSERT_EQ(stages.size(), 3u);
  EXPECT_TRUE(stages[0].injective);
  EXPECT_EQ(stages[0].injective, map1_lim_test(x, y, stages[0].lift.b));
  EXPECT_FALSE(stages[1].injective);
  EXPECT_FALSE(stages[2].injective);
  EXPECT_EQ(th::code_of([&] { (void)map2_stage_test(y, y, 1); }), ErrorCode::NotSOP);
}

TEST(Map2, SopTargetIsInjectiveAtEveryStage) {
  auto hp = highpower();
  const auto x = th::seq(hp, {"a+c", "b+d"});
  for (const auto& s : map2_stage_test(x, x.power(2), 3)) EXPECT_TRUE(s.injective) << s.lift.n;
}

TEST(OneDim, Examples) {
  auto h = heitmann();
  const auto rep = one_dim_theorems(h, P(h, "x"), P(h, "x"));
  EXPECT_FALSE(rep.map5_x_to_y);
  EXPECT_TRUE(rep.y_is_parameter);
  for (const auto& c : rep.checks) EXPECT_TRUE(c.passed) << c.name;

  auto ab = th::qq({"a", "b"}, {"a*b"});
  const auto r2 = one_dim_theorems(ab, P(ab, "a+b"), P(ab, "a"));
  EXPECT_FALSE(r2.map1);
  EXPECT_FALSE(r2.y_is_parameter);
  EXPECT_EQ(r2.y, P(ab, "a^2 + a*b"));
  // x is a nonzerodivisor, so multiplication by x is injective on R/(u), while
  // 0:u = (b) is not inside (x): the two maps differ when u is not a parameter.
  EXPECT_FALSE(r2.map5_x_to_y);
  EXPECT_TRUE(r2.map5_u_to_y);
  for (const auto& c : r2.checks) EXPECT_TRUE(c.passed) << c.name;

  const auto r3 = one_dim_theorems(ab, P(ab, "a+b"), P(ab, "1"));
  EXPECT_TRUE(r3.map5_x_to_y && r3.map5_u_to_y && r3.map1 && r3.y_is_parameter);

  EXPECT_EQ(th::code_of([&] { (void)one_dim_theorems(ab, P(ab, "a"), P(ab, "1")); }), ErrorCode::NotParameter);
  auto poly = th::qq({"a", "b"});
  EXPECT_EQ(th::code_of([&] { (void)one_dim_theorems(poly, P(poly, "a"), P(poly, "1")); }), ErrorCode::WrongDimension);
}

TEST(OneDim, TheoremsHoldOnCorpusSample) {
  gen::Rng rng(63);
  for_each_ring(rings::one_dimensional(), [&](const std::string& name, const auto& pres) {
    using F = std::decay_t<decltype(pres->field())>;
    SopSampler<F> sampler(pres, 63);
    for (int k = 0; k < 8; ++k) {
      auto x = sampler.sop();
      ASSERT_TRUE(x.has_value());
      // Homogeneous u: the global colons then agree with the local ones.
      const auto u = rng.homogeneous(pres->ambient(), static_cast<std::uint32_t>(1 + rng.below(2)), 2);
      if (u.is_zero()) continue;
      const auto rep = one_dim_theorems(pres, (*x)[0], u);
      for (const auto& c : rep.checks) EXPECT_TRUE(c.passed) << name << ": " << c.name;
    }
  });
}

TEST(CMProbe, Examples) {
  auto poly = th::qq({"x", "z"});
  const auto ok = cm_probe(poly, 5, 1);
  EXPECT_EQ(ok.verdict, CMVerdict::CMConsistent);
  EXPECT_EQ(ok.tested, 5u);
  auto r = xz();
  const auto bad = cm_probe(r, 5, 1);
  ASSERT_EQ(bad.verdict, CMVerdict::NotCM);
  ASSERT_TRUE(bad.witness && bad.sop);
  EXPECT_FALSE(ideal_member(*bad.witness, bad.sop->ideal()).member);
  EXPECT_TRUE(ideal_member(*bad.witness, limit_closure(*bad.sop).closure).member);
  EXPECT_EQ(cm_probe(highpower(), 5, 2).verdict, CMVerdict::NotCM);
  EXPECT_EQ(th::code_of([&] { (void)cm_probe(r, 0, 1); }), ErrorCode::InvalidArgument);
}

TEST(CMProbe, Reproducible) {
  const auto a = cm_probe(highpower(), 3, 17);
  const auto b = cm_probe(highpower(), 3, 17);
  ASSERT_TRUE(a.sop && b.sop);
  EXPECT_EQ(a.sop->entries(), b.sop->entries());
  EXPECT_EQ(*a.witness, *b.witness);
}

TEST(DepthProbe, Examples) {
  EXPECT_EQ(depth_probe(th::qq({"a", "b", "c"}), 3, 1).depth_lower_bound, 3u);
  EXPECT_EQ(depth_probe(xz(), 5, 1).depth_lower_bound, 0u);
  EXPECT_EQ(depth_probe(highpower(), 5, 1).depth_lower_bound, 1u);
  EXPECT_EQ(th::code_of([&] { (void)depth_probe(xz(), 0, 1); }), ErrorCode::InvalidArgument);
}

TEST(Sampler, ElementsLieInPowerOfMaximalIdeal) {
  auto r = th::qq({"a", "b", "c"});
  SopSampler<Rationals> s(r, 5, 2);
  for (int k = 0; k < 10; ++k) {
    const auto e = s.element();
    for (const auto& t : e.terms()) EXPECT_EQ(t.monomial.degree(), 2u);
  }
  SopSampler<Rationals> s1(r, 9), s2(r, 9);
  EXPECT_EQ(s1.sequence(3).entries(), s2.sequence(3).entries());
}

TEST(Frobenius, Examples) {
  auto h = heitmann();
  const auto x = th::seq(h, {"x"});
  const auto y = th::seq(h, {"x^2"});
  const auto a = th::mat(h, {{"x"}});
  const auto rows = frobenius_certificate_check(P(h, "1"), P(h, "x*u"), x, y, a, {2, 4, 8});
  ASSERT_EQ(rows.size(), 3u);
  for (const auto& row : rows) {
    EXPECT_TRUE(row.det_identity);
    EXPECT_TRUE(row.hypothesis);
    EXPECT_EQ(row.conclusion, std::optional<bool>(true));
  }
  // Modulo x^2 the relations give u^6 = 0, so u^8 lies in (x^2) but u^2 does not.
  const auto u4 = frobenius_certificate_check(P(h, "1"), P(h, "u^4"), x, y, a, {2});
  EXPECT_TRUE(u4[0].hypothesis);
  const auto u1 = frobenius_certificate_check(P(h, "1"), P(h, "u"), x, y, a, {2});
  EXPECT_FALSE(u1[0].hypothesis);
  EXPECT_FALSE(u1[0].conclusion.has_value());
  EXPECT_EQ(th::code_of([&] { (void)frobenius_certificate_check(P(h, "1"), P(h, "x"), x, y, a, {6}); }),
            ErrorCode::NotPrimePower);
  EXPECT_EQ(th::code_of([&] { (void)frobenius_certificate_check(P(h, "1"), P(h, "x"), x, y, a, {1}); }),
            ErrorCode::NotPrimePower);
  auto q = th::qq({"x"});
  EXPECT_EQ(th::code_of([&] {
              (void)frobenius_certificate_check(P(q, "1"), P(q, "x"), th::seq(q, {"x"}), th::seq(q, {"x"}),
                                                CoeffMatrix<Rationals>::identity(q, 1), {2});
            }),
            ErrorCode::WrongCharacteristic);
}

TEST(Frobenius, DeterminantCommutesWithBracketPower) {
  gen::Rng rng(64);
  for (std::uint32_t p : {2u, 3u}) {
    auto r = th::fp(p, {"a", "b", "c"});
    for (int k = 0; k < 10; ++k) {
      const std::size_t d = 2 + rng.below(2);
      CoeffMatrix<PrimeField> a(r, d, d);
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) a(i, j) = rng.poly(r->ambient(), 0, 1, 2);
      }
      for (std::uint64_t q = p; q <= 8; q *= p) EXPECT_EQ(determinant(a.bracket(q)), determinant(a).pow(q));
    }
  }
}

TEST(ZeroColon, Examples) {
  auto ab = th::qq({"a", "b"}, {"a*b"});
  const auto res = zero_colon_probe(ab, P(ab, "a"), 10, 3);
  EXPECT_TRUE(ideal_equal(res.annihilator, I(ab, {"b"})));
  EXPECT_FALSE(res.found.has_value());
  EXPECT_EQ(res.tested, 10u);
  auto hp = highpower();
  const auto r2 = zero_colon_probe(hp, P(hp, "a"), 10, 3);
  EXPECT_TRUE(ideal_equal(r2.annihilator, I(hp, {"c", "d"})));
  EXPECT_FALSE(r2.found.has_value());
  auto poly = th::qq({"a", "b"});
  EXPECT_EQ(th::code_of([&] { (void)zero_colon_probe(poly, P(poly, "a"), 3, 1); }), ErrorCode::ZeroAnnihilator);
}

TEST(DrTest, HighpowerReport) {
  auto hp = highpower();
  const auto rep = dr_test(th::seq(hp, {"a+c", "b+d"}), th::seq(hp, {"a^2", "b^2"}),
                           std::optional(th::mat(hp, {{"a", "0"}, {"0", "b"}})));
  EXPECT_TRUE(rep.x_is_sop);
  EXPECT_FALSE(rep.y_is_sop);
  EXPECT_EQ(rep.det_a, P(hp, "a*b"));
  EXPECT_TRUE(rep.map1_injective);
  ASSERT_EQ(rep.map2_stages.size(), 3u);
  EXPECT_TRUE(rep.consistent());
}

TEST(DrTest, SopTargetsAreConsistent) {
  gen::Rng rng(65);
  for_each_ring(rings::sop_rings(), [&](const std::string& name, const auto& pres) {
    using F = std::decay_t<decltype(pres->field())>;
    SopSampler<F> sampler(pres, 65);
    auto x = sampler.sop();
    ASSERT_TRUE(x.has_value());
    const std::size_t d = x->size();
    CoeffMatrix<F> m(pres, d, d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) m(i, j) = i == j ? rng.monomial_poly(pres->ambient(), 1) : pres->constant(0);
    }
    const auto y = m.apply(*x);
    DROptions opts;
    opts.stages = 2;
    const auto rep = dr_test(*x, y, std::optional<CoeffMatrix<F>>(), opts);
    EXPECT_TRUE(rep.consistent()) << name;
    if (rep.y_is_sop) {
      EXPECT_TRUE(rep.map1_injective) << name;
    }
  });
}
