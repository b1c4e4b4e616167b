#include <gtest/gtest.h>

#include <random>

#include "../support/random_series.hpp"
#include "../support/series_properties.hpp"
#include "eslab/error.hpp"
#include "eslab/series/bounded_sum.hpp"
#include "eslab/series/qseries.hpp"
#include "eslab/series/reciprocal.hpp"
#include "eslab/series/truncated_series.hpp"

namespace eslab {
namespace {

using testing::agree_within_precision;
using testing::random_series;
using testing::random_unit;

BigRational q(long n, long d = 1) { return make_rational(n, d); }

ContextPtr line(const std::string& name, int cap) { return SeriesContext::create({{name, cap}}); }

TruncatedSeries poly(const ContextPtr& ctx, std::vector<BigRational> c) {
  return TruncatedSeries::polynomial(ctx, ctx->name(0), c);
}

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(to_string(make_rational(4, -6)), "-2/3");
  EXPECT_EQ(to_string(make_rational(0, 5)), "0");
  EXPECT_EQ(make_rational(0, 5).get_den(), 1);
  EXPECT_EQ(parse_rational("3/7"), q(3, 7));
  EXPECT_EQ(parse_rational("-2"), q(-2));
  EXPECT_EQ(parse_rational("10/4"), q(5, 2));
  EXPECT_THROW(make_rational(1, 0), DomainError);
  EXPECT_THROW(parse_rational("1/0"), DomainError);
  EXPECT_THROW(parse_rational("1/-2"), DomainError);
  EXPECT_THROW(parse_rational("abc"), DomainError);
  EXPECT_THROW(parse_rational(""), DomainError);
}

TEST(Context, RejectsBadDeclarations) {
  EXPECT_THROW(SeriesContext::create({{"t", 2}, {"t", 3}}), ContextError);
  EXPECT_THROW(SeriesContext::create({{"t", -1}}), ContextError);
  EXPECT_THROW(SeriesContext::create({{"t", 2}}, "u"), ContextError);
  EXPECT_THROW(SeriesContext::create({{"t", 2}}, "t", 1), ContextError);
  auto ctx = SeriesContext::create({{"t", 3}}, "t");
  EXPECT_EQ(ctx->min_valuation(), -3);
  EXPECT_EQ(ctx->size(), 7u);
}

TEST(Arith, OnePlusTTimesOneMinusT) {
  auto ctx = line("t", 2);
  auto f = poly(ctx, {1, 1}) * poly(ctx, {1, -1});
  EXPECT_EQ(f, poly(ctx, {1, 0, -1}));
}

TEST(Arith, AddZeroIsIdentity) {
  auto ctx = line("t", 3);
  auto f = poly(ctx, {q(1, 2), 3, 0, -1});
  EXPECT_EQ(f + TruncatedSeries::zero(ctx), f);
}

TEST(Arith, TruncatedProduct) {
  auto ctx = line("t", 2);
  auto f = poly(ctx, {1, 1, 1}) * poly(ctx, {1, 1});
  EXPECT_EQ(f, poly(ctx, {1, 2, 2}));
  EXPECT_EQ(f.precision("t"), 2);
}

TEST(Arith, ContextMismatchThrows) {
  auto a = TruncatedSeries::constant(line("t", 2), 1);
  auto b = TruncatedSeries::constant(line("t", 3), 1);
  EXPECT_THROW(a + b, ContextError);
  EXPECT_THROW(a * b, ContextError);
}

TEST(Invert, GeometricSeries) {
  auto ctx = line("t", 3);
  EXPECT_EQ(poly(ctx, {1, -1}).inverse(), poly(ctx, {1, 1, 1, 1}));
}

TEST(Invert, MonomialInLaurentContext) {
  auto ctx = SeriesContext::create({{"t", 3}}, "t");
  auto r = TruncatedSeries::constant(ctx, 1) - TruncatedSeries::variable(ctx, "t");
  auto inv = (r - BigRational(1)).inverse();
  EXPECT_EQ(inv, TruncatedSeries::monomial(ctx, {{"t", -1}}, -1));
  EXPECT_TRUE(inv.is_exact("t"));
}

TEST(Invert, LongDivisionOracle) {
  // Oracle: schoolbook long division of 1 by (2 - t).
  auto ctx = line("t", 2);
  std::vector<BigRational> quotient;
  std::vector<BigRational> rem = {1, 0, 0};
  const std::vector<BigRational> d = {2, -1};
  for (int k = 0; k <= 2; ++k) {
    BigRational c = rem[k] / d[0];
    quotient.push_back(c);
    for (std::size_t i = 0; i < d.size() && k + i < rem.size(); ++i) rem[k + i] -= c * d[i];
  }
  EXPECT_EQ(quotient, (std::vector<BigRational>{q(1, 2), q(1, 4), q(1, 8)}));
  EXPECT_EQ(poly(ctx, {2, -1}).inverse(), poly(ctx, quotient));
}

TEST(Invert, ErrorsOnZeroAndNonUnits) {
  auto ctx = line("t", 3);
  EXPECT_THROW(TruncatedSeries::zero(ctx).inverse(), ValuationError);
  EXPECT_THROW(TruncatedSeries::variable(ctx, "t").inverse(), ValuationError);
  auto laurent = SeriesContext::create({{"t", 4}}, "t", -1);
  EXPECT_THROW(TruncatedSeries::monomial(laurent, {{"t", 2}}).inverse(), ValuationError);
}

TEST(Invert, ExactInputKeepsFullPrecision) {
  auto ctx = SeriesContext::create({{"t", 5}}, "t");
  auto t = TruncatedSeries::variable(ctx, "t");
  auto r = BigRational(1) - t;
  auto f = r.pow(3) - BigRational(1);  // -3t + 3t^2 - t^3
  auto inv = f.inverse();
  EXPECT_EQ(inv.precision("t"), 5);
  auto one = f * inv;
  EXPECT_GE(one.precision("t"), 5);
  EXPECT_EQ(one, TruncatedSeries::constant(ctx, 1));
}

TEST(Invert, InexactInputLosesTwiceTheValuation) {
  auto ctx = SeriesContext::create({{"t", 6}}, "t");
  auto t = TruncatedSeries::variable(ctx, "t");
  auto g = (BigRational(1) - t).inverse() * t;  // t + t^2 + ..., precision 6
  EXPECT_EQ(g.precision("t"), 6);
  EXPECT_EQ(g.inverse().precision("t"), 4);
}

TEST(Specialize, LinearForm) {
  auto ctx = SeriesContext::create({{"u", 1}, {"x", 1}});
  auto f = BigRational(1) + TruncatedSeries::monomial(ctx, {{"u", 1}, {"x", 1}});
  auto g = f.specialize("u", q(1, 2));
  auto xs = SeriesContext::create({{"x", 1}});
  EXPECT_EQ(g, BigRational(1) + TruncatedSeries::monomial(xs, {{"x", 1}}, q(1, 2)));
}

TEST(Specialize, ConstantUnchanged) {
  auto ctx = SeriesContext::create({{"t", 2}, {"x", 2}});
  auto g = TruncatedSeries::constant(ctx, q(5, 3)).specialize("x", q(-2, 7));
  EXPECT_EQ(g, TruncatedSeries::constant(ctx->without("x"), q(5, 3)));
}

TEST(Specialize, ShiftedLinear) {
  auto ctx = SeriesContext::create({{"t", 1}, {"x", 1}});
  auto t = TruncatedSeries::variable(ctx, "t");
  auto x = TruncatedSeries::variable(ctx, "x");
  auto g = (x - (BigRational(1) - t)).specialize("x", q(1, 3));
  EXPECT_EQ(g, poly(line("t", 1), {q(-2, 3), 1}));
}

TEST(Specialize, RequiresExactVariable) {
  auto ctx = line("t", 2);
  auto g = poly(ctx, {1, -1}).inverse();
  EXPECT_THROW(g.specialize("t", q(1, 2)), PrecisionError);
}

TEST(Shift, DownRequiresVanishingSlices) {
  auto ctx = line("u", 3);
  auto f = poly(ctx, {0, 1, 2, 3});
  EXPECT_EQ(f.shift("u", -1), poly(ctx, {1, 2, 3}));
  EXPECT_THROW(poly(ctx, {1, 1}).shift("u", -1), ValuationError);
  auto g = poly(ctx, {1, -1}).inverse().shift("u", 1).shift("u", -1);
  EXPECT_EQ(g.precision("u"), 2);
}

TEST(RestrictTo, ChecksPrecision) {
  auto wide = line("t", 5);
  auto narrow = line("t", 3);
  auto f = poly(wide, {1, -1}).inverse();
  EXPECT_EQ(f.restrict_to(narrow), poly(narrow, {1, 1, 1, 1}));
  auto g = poly(narrow, {1, -1}).inverse();
  EXPECT_THROW(g.restrict_to(wide), PrecisionError);
  EXPECT_NO_THROW(poly(narrow, {1, 2}).restrict_to(wide));
}

TEST(Coefficient, BeyondPrecisionThrows) {
  auto ctx = line("t", 3);
  auto f = poly(ctx, {1, -1}).inverse();
  EXPECT_EQ(f.coefficient(std::vector<int>{3}), 1);
  EXPECT_THROW(f.coefficient(std::vector<int>{4}), PrecisionError);
  EXPECT_EQ(poly(ctx, {1}).coefficient(std::vector<int>{9}), 0);
}

TEST(Reciprocal, InverseOfU) {
  auto ctx = line("ubar", 3);
  EXPECT_EQ(expand_rational_at_infinity(ctx, "ubar", {1}, {0, 1}),
            TruncatedSeries::variable(ctx, "ubar"));
}

TEST(Reciprocal, UOverUMinusOne) {
  auto ctx = line("ubar", 2);
  EXPECT_EQ(expand_rational_at_infinity(ctx, "ubar", {0, 1}, {-1, 1}), poly(ctx, {1, 1, 1}));
}

TEST(Reciprocal, OneOverOneMinusU) {
  auto ctx = line("ubar", 2);
  EXPECT_EQ(expand_rational_at_infinity(ctx, "ubar", {1}, {1, -1}), poly(ctx, {0, -1, -1}));
}

TEST(Reciprocal, PoleAtInfinityRejected) {
  EXPECT_THROW(expand_rational_at_infinity(line("ubar", 2), "ubar", {0, 0, 1}, {1, 1}),
               DomainError);
}

TEST(Reciprocal, SliceReexpansion) {
  // f = sum_m t^m u / (1-u)^{m+1}: each t-slice has numerator u.
  auto ctx = SeriesContext::create({{"t", 2}, {"u", 5}});
  auto u = TruncatedSeries::variable(ctx, "u");
  auto t = TruncatedSeries::variable(ctx, "t");
  auto w = (BigRational(1) - u).inverse();
  auto f = u * w * (BigRational(1) - t * w).inverse();
  SliceShape shape{"t", [](int m) { return m + 1; }, [](int) { return 1; }};
  auto g = reexpand_at_infinity(f, "u", "ubar", 3, shape);
  // u/(1-u) = -1/(1-ubar); u/(1-u)^2 = ubar/(1-ubar)^2; u/(1-u)^3 = -ubar^2/(1-ubar)^3.
  auto target = SeriesContext::create({{"t", 2}, {"ubar", 3}});
  TruncatedSeries expect(target);
  const BigRational row0[] = {-1, -1, -1, -1}, row1[] = {0, 1, 2, 3}, row2[] = {0, 0, -1, -3};
  for (int k = 0; k <= 3; ++k) {
    expect.add_term({0, k}, row0[k]);
    expect.add_term({1, k}, row1[k]);
    expect.add_term({2, k}, row2[k]);
  }
  EXPECT_EQ(g, expect);
  auto at = evaluate_slices(f, "u", q(1, 3), shape);
  auto tl = line("t", 2);
  EXPECT_EQ(at, poly(tl, {q(1, 2), q(3, 4), q(9, 8)}));
}

TEST(Reciprocal, SliceShapeViolationDetected) {
  auto ctx = SeriesContext::create({{"t", 1}, {"u", 4}});
  auto u = TruncatedSeries::variable(ctx, "u");
  auto f = (BigRational(1) - u * u * u).inverse();  // not N/(1-u)^1 with deg N <= 1
  SliceShape shape{"t", [](int) { return 1; }, [](int) { return 1; }};
  EXPECT_THROW(reexpand_at_infinity(f, "u", "ubar", 2, shape), DomainError);
  SliceShape too_big{"t", [](int) { return 1; }, [](int) { return 4; }};
  EXPECT_THROW(reexpand_at_infinity(f, "u", "ubar", 2, too_big), PrecisionError);
}

TEST(QPochhammer, SmallLengths) {
  auto ctx = SeriesContext::create({{"a", 3}, {"q", 3}});
  auto a = TruncatedSeries::variable(ctx, "a");
  auto qq = TruncatedSeries::variable(ctx, "q");
  EXPECT_EQ(qpochhammer(a, qq, 0), TruncatedSeries::constant(ctx, 1));
  EXPECT_EQ(qpochhammer(a, qq, 1), BigRational(1) - a);
  EXPECT_EQ(qpochhammer(a, qq, 2), (BigRational(1) - a) * (BigRational(1) - a * qq));
  EXPECT_EQ(qpochhammer({a, qq}, qq, 2), qpochhammer(a, qq, 2) * qpochhammer(qq, qq, 2));
}

TEST(BasicHypergeometric, TrivialCases) {
  auto ctx = line("z", 4);
  auto z = TruncatedSeries::variable(ctx, "z");
  auto base = TruncatedSeries::constant(ctx, q(1, 3));
  auto a = TruncatedSeries::constant(ctx, q(1, 2));
  auto b = TruncatedSeries::constant(ctx, q(3, 7));
  auto one = TruncatedSeries::constant(ctx, 1);
  EXPECT_EQ(basic_hypergeometric({a}, {b}, base, z, 0), one);
  EXPECT_EQ(basic_hypergeometric({one, a}, {b}, base, z, 4), one);
}

TEST(BasicHypergeometric, MatchesDirectSummation) {
  // 2phi1 with rational parameters: the sum is evaluated with plain rationals.
  const BigRational a1 = q(1, 2), a2 = q(2, 5), b1 = q(3, 7), base = q(1, 3), z = q(-4, 9);
  BigRational expect = 0;
  for (int k = 0; k <= 2; ++k) {
    BigRational num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
      const BigRational qi = pow(base, static_cast<unsigned>(i));
      num *= (1 - a1 * qi) * (1 - a2 * qi);
      den *= (1 - base * qi) * (1 - b1 * qi);
    }
    expect += num / den * pow(z, static_cast<unsigned>(k));
  }
  auto ctx = line("t", 0);
  auto c = [&](const BigRational& v) { return TruncatedSeries::constant(ctx, v); };
  auto got = basic_hypergeometric({c(a1), c(a2)}, {c(b1)}, c(base), c(z), 2);
  EXPECT_EQ(got, c(expect));
}

TEST(BasicHypergeometric, BalanceFactorApplied) {
  // 0phi1: each term carries ((-1)^k q^{C(k,2)})^2 = q^{k(k-1)}.
  const BigRational b = q(1, 5), base = q(1, 2), z = q(3, 4);
  BigRational expect = 0;
  for (int k = 0; k <= 3; ++k) {
    BigRational den = 1;
    for (int i = 0; i < k; ++i) {
      den *= (1 - pow(base, static_cast<unsigned>(i + 1))) * (1 - b * pow(base, static_cast<unsigned>(i)));
    }
    expect += pow(base, static_cast<unsigned>(k * (k - 1))) * pow(z, static_cast<unsigned>(k)) / den;
  }
  auto ctx = line("t", 0);
  auto c = [&](const BigRational& v) { return TruncatedSeries::constant(ctx, v); };
  EXPECT_EQ(basic_hypergeometric({}, {c(b)}, c(base), c(z), 3), c(expect));
}

TEST(BasicHypergeometric, VanishingLowerFactorIsPole) {
  auto ctx = line("t", 0);
  auto c = [&](const BigRational& v) { return TruncatedSeries::constant(ctx, v); };
  EXPECT_THROW(basic_hypergeometric({c(q(1, 2))}, {c(4)}, c(q(1, 2)), c(1), 3), PoleError);
}

TEST(BoundedSum, PowersOfT) {
  auto ctx = line("t", 3);
  int calls = 0, summed_max = 0;
  auto s = bounded_sum(
      ctx, {"t"}, 1,
      [&](int n) {
        ++calls;
        summed_max = n;
        return TruncatedSeries::monomial(ctx, {{"t", n}});
      },
      [](int n) { return n; });
  EXPECT_EQ(s, poly(ctx, {0, 1, 1, 1}));
  EXPECT_EQ(calls, 4);  // n = 1..3 summed, n = 4 probed
  EXPECT_EQ(summed_max, 4);
  EXPECT_EQ(s.precision("t"), 3);
}

TEST(BoundedSum, DoubleSumOverTwoGradings) {
  auto ctx = SeriesContext::create({{"x", 2}, {"u", 2}});
  std::vector<std::pair<int, int>> summed;
  auto s = bounded_sum(
      ctx, {"x"}, 1,
      [&](int n) {
        return bounded_sum(
            ctx, {"u"}, 1,
            [&, n](int k) {
              if (n - 1 <= 2 && k - 1 <= 2) summed.emplace_back(n, k);
              return TruncatedSeries::monomial(ctx, {{"x", n - 1}, {"u", k - 1}});
            },
            [](int k) { return k - 1; });
      },
      [](int n) { return n - 1; });
  EXPECT_EQ(summed.size(), 9u);
  EXPECT_EQ(summed.back(), std::make_pair(3, 3));
  EXPECT_EQ(s.term_count(), 9u);
}

TEST(BoundedSum, LinearGradingStopsAfterCapPlusOne) {
  auto ctx = line("u", 5);
  int last = 0;
  bounded_sum(
      ctx, {"u"}, 1,
      [&](int n) {
        last = n;
        return TruncatedSeries::monomial(ctx, {{"u", n - 1}});
      },
      [](int n) { return n - 1; });
  EXPECT_EQ(last, 7);  // n <= 6 summed, n = 7 probed
}

TEST(BoundedSum, ValuationAssertionCarriesIndex) {
  auto ctx = line("t", 4);
  try {
    bounded_sum(
        ctx, {"t"}, 1,
        [&](int n) { return TruncatedSeries::monomial(ctx, {{"t", n == 3 ? 1 : n}}); },
        [](int n) { return n; });
    FAIL() << "expected a valuation assertion";
  } catch (const ValuationAssertion& e) {
    EXPECT_EQ(e.index(), 3);
    EXPECT_EQ(e.actual(), 1);
    EXPECT_EQ(e.bound(), 3);
  }
}

TEST(BoundedSum, ProbedTermMustVanish) {
  auto ctx = line("t", 2);
  EXPECT_THROW(bounded_sum(
                   ctx, {"t"}, 1,
                   [&](int n) { return TruncatedSeries::monomial(ctx, {{"t", std::min(n, 2)}}); },
                   [](int n) { return std::min(n, 2) + (n > 2 ? 1 : 0); }),
               ValuationAssertion);
}

TEST(BoundedSum, DecreasingOrStuckBoundsRejected) {
  auto ctx = line("t", 2);
  auto zero = [&](int) { return TruncatedSeries::zero(ctx); };
  EXPECT_THROW(bounded_sum(ctx, {"t"}, 1, zero, [](int n) { return n == 1 ? 1 : 0; }), DomainError);
  EXPECT_THROW(bounded_sum(ctx, {"t"}, 1, zero, [](int) { return 0; }, 50), BoundError);
}

// Seeded property batteries, a few seeds each.

class SeriesProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(SeriesProperties, RingLaws) { EXPECT_EQ(testing::ring_laws(GetParam()), ""); }
TEST_P(SeriesProperties, InverseRoundtrip) { EXPECT_EQ(testing::inverse_roundtrip(GetParam()), ""); }
TEST_P(SeriesProperties, LaurentInverseRoundtrip) {
  EXPECT_EQ(testing::laurent_inverse_roundtrip(GetParam()), "");
}
TEST_P(SeriesProperties, PochhammerRecurrence) {
  EXPECT_EQ(testing::pochhammer_recurrence(GetParam()), "");
}
TEST_P(SeriesProperties, BoundedSumNeverHidesLowTerms) {
  EXPECT_EQ(testing::bounded_sum_assertions(GetParam()), "");
}

INSTANTIATE_TEST_SUITE_P(Seeds, SeriesProperties,
                         ::testing::Values(testing::kPropertySeed, 1, 77));

}  // namespace
}  // namespace eslab
