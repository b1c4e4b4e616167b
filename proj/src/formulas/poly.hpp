#pragma once

// Exact univariate polynomials in t, used where a factor of t cancels between
// numerator and denominator before anything is truncated.

#include <vector>

#include "eslab/error.hpp"
#include "eslab/series/truncated_series.hpp"

namespace eslab::poly {

using Poly = std::vector<BigRational>;

inline Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

inline Poly add(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

inline Poly scale(Poly a, const BigRational& s) {
  for (auto& c : a) c *= s;
  return a;
}

// (1 - t)^n
inline Poly r_pow(int n) {
  Poly out{1};
  for (int i = 0; i < n; ++i) out = mul(out, {1, -1});
  return out;
}

// p / t; the constant term must vanish.
inline Poly div_t(const Poly& p) {
  if (!p.empty() && p[0] != 0) throw DomainError("polynomial is not divisible by t");
  return p.size() <= 1 ? Poly{} : Poly(p.begin() + 1, p.end());
}

inline TruncatedSeries lift(const ContextPtr& ctx, const char* name, const Poly& p) {
  return TruncatedSeries::polynomial(ctx, name, p);
}

}  // namespace eslab::poly
