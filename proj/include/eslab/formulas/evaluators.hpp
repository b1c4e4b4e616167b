#pragma once

#include <optional>
#include <utility>

#include "eslab/series/truncated_series.hpp"

namespace eslab {

// Closed-form right sides. Every context contains t; r stands for 1 - t.
// Arguments passed as series may be constants or formal variables of ctx.
// Infinite sums go through bounded_sum, so a term that is larger than its
// declared valuation raises ValuationAssertion instead of being dropped.

// sum_{n,k >= 1} x^{n-1} u^{k-1} / (1-t)^{kn}. ctx: t, x, u (graded in x, u).
TruncatedSeries rhs_gg1(const ContextPtr& ctx);

// sum_n t r^{n-1} (u-1)^{-1} / (u^n (1 - x r^{n-1})(1 - x r^n)) + 1/((u-1)(x-1))
// with u = 1/ubar. ctx: t, ubar (graded) and optionally x. Term n carries
// ubar^{n+1}: one power from u^{-n}, one from (u-1)^{-1} = ubar/(1-ubar).
TruncatedSeries rhs_cor1_mid(const ContextPtr& ctx, const TruncatedSeries& x);

// G(t; x, u, v, q, 1) by the outer n-sum and the correction denominator.
// ctx: t, u, graded in u (term n carries u^{n-1}). The common factor t of
// (1-qt) r^{i-1} - 1 and r^i - 1 is cancelled exactly before expansion.
TruncatedSeries rhs_thm1(const ContextPtr& ctx, const BigRational& x, const BigRational& v,
                         const BigRational& q);

// G(t; x, u, v, 1, 1) as sum_n v t u^{n-1} / (r^n - x) prod_{i<n} (x - r^i - xvt)/(x - r^i).
// ctx: t, u (graded) and optionally x.
TruncatedSeries rhs_adr1(const ContextPtr& ctx, const TruncatedSeries& x, const BigRational& v);

// G(t; x, u, v, 1, 1) as sum_n v t r^{n-1} ubar^n / (x r^{n-1} - 1)
//   prod_{i=1..n} (1 - x r^{i-1}) / (x r^{i-1}(vt - 1) + 1).
// ctx: t, ubar (graded). x may be any series whose constant term is not 1.
TruncatedSeries rhs_adr2(const ContextPtr& ctx, const TruncatedSeries& x, const BigRational& v);

// G(t; x, u, v, 1, z) with T_n = r^{n-1} G(t; x r^{n-1}, u, v, 1, 1) taken from
// rhs_adr2 with a series argument. ctx: t, ubar (graded).
TruncatedSeries rhs_thm4(const ContextPtr& ctx, const BigRational& x, const BigRational& v,
                         const BigRational& z);

// sum_{n>=0} q z t u^n / (1 - (n-q+1)t) prod_{i=0..n} (1-(i-q+1)t)/(1-(i+z)t).
// ctx: t, u (graded).
TruncatedSeries rhs_asczeromax(const ContextPtr& ctx, const BigRational& q, const BigRational& z);

// H~1(t; x, u, v, q, a), graded in t. ctx: t.
TruncatedSeries h1tilde_series(const ContextPtr& ctx, const BigRational& x, const BigRational& u,
                               const BigRational& v, const BigRational& q, const BigRational& a);

// H1(t; x, u, v, q). Not a power series in t, so x and u must be formal
// variables of ctx; the k-th term carries u^k and the sum is graded by the
// variable of the u argument (`grading`).
TruncatedSeries h1_series(const ContextPtr& ctx, const TruncatedSeries& x,
                          const TruncatedSeries& u, const std::string& grading,
                          const BigRational& v, const BigRational& q);

// H2*(t; x, u, q, v, a), graded in t. ctx: t.
TruncatedSeries h2star_series(const ContextPtr& ctx, const BigRational& x, const BigRational& u,
                              const BigRational& q, const BigRational& v, const BigRational& a);

// H2(t; x, u, 1, v) written in xbar = 1/x and ubar = 1/u; term k carries
// ubar^k and the sum is graded by `grading`, the variable of the ubar argument.
TruncatedSeries h2_series(const ContextPtr& ctx, const TruncatedSeries& xbar,
                          const TruncatedSeries& ubar, const std::string& grading,
                          const BigRational& v);

// Both sides of the 4phi3 transformation with base 1 - r and a = alpha * r,
// in ctx (variable r). kmax truncates both sums by hand; otherwise they are
// summed through the r-cap. Throws PoleError when a lower parameter has
// constant term 1.
struct Tf43Params {
  BigRational alpha, b, c, d, e;
};
std::pair<TruncatedSeries, TruncatedSeries> tf43_sides(const ContextPtr& ctx, int j,
                                                       const Tf43Params& p,
                                                       std::optional<int> kmax = std::nullopt);

}  // namespace eslab
