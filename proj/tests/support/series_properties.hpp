#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "eslab/error.hpp"
#include "eslab/series/bounded_sum.hpp"
#include "eslab/series/qseries.hpp"
#include "random_series.hpp"

// Seeded property batteries over the series engine, shared by the unit tests
// and the acceptance run. Each returns an empty string on success, otherwise
// a description of the first failing trial.
namespace eslab::testing {

inline constexpr std::uint64_t kPropertySeed = 20240611;

inline ContextPtr property_context() { return SeriesContext::create({{"t", 4}, {"u", 3}}); }

inline std::string ring_laws(std::uint64_t seed, int trials = 100) {
  std::mt19937_64 rng{seed};
  auto ctx = property_context();
  for (int trial = 0; trial < trials; ++trial) {
    auto a = random_series(rng, ctx), b = random_series(rng, ctx), c = random_series(rng, ctx);
    const auto at = " at trial " + std::to_string(trial) + ": a=" + a.to_string() +
                    " b=" + b.to_string() + " c=" + c.to_string();
    if ((a * b) * c != a * (b * c)) return "product not associative" + at;
    if (a * b != b * a) return "product not commutative" + at;
    if (a + b != b + a) return "sum not commutative" + at;
    if ((a + b) + c != a + (b + c)) return "sum not associative" + at;
    if (a * (b + c) != a * b + a * c) return "not distributive" + at;
    if (a - a != TruncatedSeries::zero(ctx)) return "a - a nonzero" + at;
  }
  return {};
}

inline std::string inverse_roundtrip(std::uint64_t seed, int trials = 100) {
  std::mt19937_64 rng{seed};
  auto ctx = property_context();
  const auto one = TruncatedSeries::constant(ctx, 1);
  for (int trial = 0; trial < trials; ++trial) {
    auto f = random_unit(rng, ctx);
    if (f * f.inverse() != one) return "f * f^-1 != 1 for f=" + f.to_string();
    if (f.inverse().inverse() != f) return "(f^-1)^-1 != f for f=" + f.to_string();
  }
  return {};
}

inline std::string laurent_inverse_roundtrip(std::uint64_t seed, int trials = 100) {
  std::mt19937_64 rng{seed};
  auto ctx = SeriesContext::create({{"t", 5}, {"u", 2}}, "t");
  const auto one = TruncatedSeries::constant(ctx, 1);
  std::uniform_int_distribution<int> val(-2, 2);
  for (int trial = 0; trial < trials; ++trial) {
    const int v = val(rng);
    auto unit = random_unit(rng, ctx->with_cap("t", 3), 0.4).convert_to(ctx);
    auto f = unit.shift("t", v);
    auto prod = f * f.inverse();
    if (!agree_within_precision(prod, one)) return "f * f^-1 != 1 for f=" + f.to_string();
    if (prod.precision("t") < 5 + std::min(v, 0)) return "precision lost for f=" + f.to_string();
  }
  return {};
}

inline std::string pochhammer_recurrence(std::uint64_t seed, int trials = 10) {
  std::mt19937_64 rng{seed};
  auto ctx = SeriesContext::create({{"a", 4}, {"q", 6}});
  for (int trial = 0; trial < trials; ++trial) {
    auto a = random_series(rng, ctx, 0.3);
    auto base = random_series(rng, ctx, 0.3);
    for (int k = 0; k <= 8; ++k) {
      auto lhs = qpochhammer(a, base, k + 1);
      auto rhs = qpochhammer(a, base, k) * (BigRational(1) - a * base.pow(static_cast<unsigned>(k)));
      if (lhs != rhs) {
        return "(a;q)_{k+1} != (a;q)_k (1 - a q^k) at k=" + std::to_string(k) +
               " a=" + a.to_string() + " q=" + base.to_string();
      }
    }
  }
  return {};
}

// A term planted below its declared valuation bound must be reported with
// its index, never summed silently.
inline std::string bounded_sum_assertions(std::uint64_t seed, int trials = 100) {
  std::mt19937_64 rng{seed};
  auto ctx = property_context();
  std::uniform_int_distribution<int> pick(1, 6);
  for (int trial = 0; trial < trials; ++trial) {
    const int bad = pick(rng);
    try {
      bounded_sum(
          ctx, {"t", "u"}, 1,
          [&](int n) {
            const int e = n == bad ? n - 1 : n;
            return TruncatedSeries::monomial(ctx, {{"t", std::min(e, 4)}, {"u", std::max(0, e - 4)}});
          },
          [](int n) { return n; });
      return "term " + std::to_string(bad) + " was summed silently";
    } catch (const ValuationAssertion& e) {
      if (e.index() != bad) {
        return "assertion names term " + std::to_string(e.index()) + ", planted at " +
               std::to_string(bad);
      }
    }
  }
  return {};
}

struct PropertyBattery {
  std::string name;
  std::function<std::string(std::uint64_t)> run;
};

inline std::vector<PropertyBattery> series_property_batteries() {
  return {{"ring_laws", [](std::uint64_t s) { return ring_laws(s); }},
          {"inverse_roundtrip", [](std::uint64_t s) { return inverse_roundtrip(s); }},
          {"laurent_inverse_roundtrip", [](std::uint64_t s) { return laurent_inverse_roundtrip(s); }},
          {"pochhammer_recurrence", [](std::uint64_t s) { return pochhammer_recurrence(s); }},
          {"bounded_sum_assertions", [](std::uint64_t s) { return bounded_sum_assertions(s); }}};
}

}  // namespace eslab::testing
