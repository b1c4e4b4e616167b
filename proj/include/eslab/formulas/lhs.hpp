#pragma once

#include <string>

#include "eslab/combinatorics/enumerate.hpp"
#include "eslab/equidist/distribution.hpp"
#include "eslab/series/truncated_series.hpp"

namespace eslab {

// How one marking variable of the generating function enters a series.
struct LhsArg {
  enum class Kind {
    kUnused,      // statistic not tracked (and no divisor)
    kValue,       // specialized to a rational
    kVariable,    // a formal variable, expanded at 0
    kReciprocal,  // expanded at infinity in the named variable (its reciprocal)
  };
  Kind kind = Kind::kUnused;
  BigRational value;
  std::string name;

  static LhsArg unused() { return {}; }
  static LhsArg at(const BigRational& v) { return {Kind::kValue, v, {}}; }
  static LhsArg graded(std::string n) { return {Kind::kVariable, 0, std::move(n)}; }
  static LhsArg reciprocal(std::string n) { return {Kind::kReciprocal, 0, std::move(n)}; }
};

// Which enumeration backs the left side. Inversion sequences are read
// through (asc, dist, rmin, max, zero) in place of (des, ides, rmax, lmin, lmax).
enum class LhsSource { kPermutations, kInversionSequences };

// sum_{n >= first_n} t^n sum_pi u^des x^ides v^rmax q^lmin z^lmax
//                  / ((1-u)^{n+extra} (1-x)^{n+extra}),
// where an unused u or x also drops its divisor. first_n = 0 contributes the
// empty permutation.
struct LhsSpec {
  LhsArg u, x, v, q, z;
  int first_n = 1;
  int extra_divisor = 0;
  LhsSource source = LhsSource::kPermutations;
};

// The left side built by full enumeration through n = cap of t in ctx.
// Requires cap(t) <= n_max <= bound (BoundError otherwise).
TruncatedSeries lhs_series(const ContextPtr& ctx, const LhsSpec& spec, int n_max,
                           int bound = kDefaultEnumerationBound);

// The joint distribution behind lhs_series, computed once per (n, source) and
// shared between threads.
const Distribution& lhs_distribution(int n, LhsSource source);

// arg^d / (1 - arg)^e in ctx. For a reciprocal argument requires d <= e.
TruncatedSeries marked_fraction(const ContextPtr& ctx, const LhsArg& arg, int d, int e);

}  // namespace eslab
