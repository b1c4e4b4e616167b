#include "eslab/series/reciprocal.hpp"

#include <algorithm>
#include <map>

#include "eslab/error.hpp"

namespace eslab {

namespace {

using Poly = std::vector<BigRational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Coefficients of (1-u)^e.
Poly one_minus_u_power(int e) {
  Poly p(static_cast<std::size_t>(e) + 1);
  BigInt binom = 1;
  for (int i = 0; i <= e; ++i) {
    p[static_cast<std::size_t>(i)] = (i % 2 == 0) ? BigRational(binom) : BigRational(-binom);
    binom = binom * (e - i) / (i + 1);
  }
  return p;
}

// Power-series quotient a/b through degree n, with b[0] != 0.
Poly series_divide(const Poly& a, const Poly& b, int n) {
  Poly q(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    BigRational acc = static_cast<std::size_t>(k) < a.size() ? a[static_cast<std::size_t>(k)] : 0;
    for (int i = 1; i <= k && static_cast<std::size_t>(i) < b.size(); ++i) {
      acc -= b[static_cast<std::size_t>(i)] * q[static_cast<std::size_t>(k - i)];
    }
    q[static_cast<std::size_t>(k)] = acc / b[0];
  }
  return q;
}

struct Slice {
  std::vector<int> others;  // exponents of f with u removed
  int key_exponent = 0;
  Poly numerator;
  int power = 0;
};

std::vector<Slice> reconstruct(const TruncatedSeries& f, const std::string& u,
                               const SliceShape& shape) {
  const auto& ctx = *f.context();
  const std::size_t uvar = ctx.index_of(u);
  const std::size_t key = ctx.index_of(shape.key);
  if (key == uvar) throw DomainError("slice key must differ from the expansion variable");
  if (ctx.laurent_index() && *ctx.laurent_index() == uvar) {
    throw DomainError("slice variable must not be a Laurent variable");
  }
  const int ucap = ctx.cap(uvar);
  if (f.precision(uvar) < ucap) {
    throw PrecisionError("series is not known through the cap of " + u);
  }

  std::map<std::vector<int>, Poly> slices;
  for (const auto& [e, c] : f.terms()) {
    auto others = e;
    others.erase(others.begin() + static_cast<std::ptrdiff_t>(uvar));
    auto& poly = slices[others];
    poly.resize(static_cast<std::size_t>(ucap) + 1);
    poly[static_cast<std::size_t>(e[uvar])] = c;
  }

  std::vector<Slice> out;
  const std::size_t key_pos = key < uvar ? key : key - 1;
  for (auto& [others, coeffs] : slices) {
    Slice s;
    s.others = others;
    s.key_exponent = others[key_pos];
    s.power = shape.denominator_power(s.key_exponent);
    const int degree = shape.numerator_degree(s.key_exponent);
    if (degree >= ucap) {
      throw PrecisionError("cap " + std::to_string(ucap) + " of " + u +
                           " cannot certify a numerator of degree " + std::to_string(degree));
    }
    const Poly den = one_minus_u_power(s.power);
    Poly num(static_cast<std::size_t>(ucap) + 1);
    for (int j = 0; j <= ucap; ++j) {
      for (int i = 0; i <= j && i <= s.power; ++i) {
        num[static_cast<std::size_t>(j)] +=
            den[static_cast<std::size_t>(i)] * coeffs[static_cast<std::size_t>(j - i)];
      }
    }
    for (int j = degree + 1; j <= ucap; ++j) {
      if (num[static_cast<std::size_t>(j)] != 0) {
        throw DomainError("slice at " + TruncatedSeries::monomial_string(ctx, [&] {
                            auto e = others;
                            e.insert(e.begin() + static_cast<std::ptrdiff_t>(uvar), 0);
                            return e;
                          }()) + " is not a rational function of the declared shape");
      }
    }
    num.resize(static_cast<std::size_t>(degree) + 1);
    trim(num);
    s.numerator = std::move(num);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

TruncatedSeries expand_rational_at_infinity(const ContextPtr& ctx, const std::string& ubar,
                                            const std::vector<BigRational>& numerator,
                                            const std::vector<BigRational>& denominator) {
  Poly num = numerator, den = denominator;
  trim(num);
  trim(den);
  if (den.empty()) throw DomainError("zero denominator");
  TruncatedSeries out(ctx);
  if (num.empty()) return out;
  const int dn = static_cast<int>(num.size()) - 1;
  const int dd = static_cast<int>(den.size()) - 1;
  if (dn > dd) throw DomainError("rational function has a pole at infinity");
  // N(1/w)/D(1/w) = w^{dd-dn} * rev(N)(w) / rev(D)(w).
  std::reverse(num.begin(), num.end());
  std::reverse(den.begin(), den.end());
  const std::size_t var = ctx->index_of(ubar);
  const int cap = ctx->cap(var);
  const int shift = dd - dn;
  std::vector<int> e(ctx->num_variables(), 0);
  if (shift <= cap) {
    const Poly q = series_divide(num, den, cap - shift);
    for (int k = 0; k + shift <= cap; ++k) {
      e[var] = k + shift;
      out.add_term(e, q[static_cast<std::size_t>(k)]);
    }
  }
  out.limit_precision(ubar, cap);
  return out;
}

TruncatedSeries reexpand_at_infinity(const TruncatedSeries& f, const std::string& u,
                                     const std::string& ubar, int ubar_cap,
                                     const SliceShape& shape) {
  const auto& ctx = f.context();
  const std::size_t uvar = ctx->index_of(u);
  auto target = ctx->renamed(u, ubar)->with_cap(ubar, ubar_cap);
  auto line = SeriesContext::create({{ubar, ubar_cap}});

  TruncatedSeries out(target);
  for (const auto& slice : reconstruct(f, u, shape)) {
    const auto expansion =
        expand_rational_at_infinity(line, ubar, slice.numerator, one_minus_u_power(slice.power));
    for (const auto& [w, c] : expansion.terms()) {
      auto e = slice.others;
      e.insert(e.begin() + static_cast<std::ptrdiff_t>(uvar), w[0]);
      out.add_term(e, c);
    }
  }
  for (std::size_t v = 0; v < ctx->num_variables(); ++v) {
    if (v != uvar) out.limit_precision(target->name(v), f.precision(v));
  }
  out.limit_precision(ubar, ubar_cap);
  return out;
}

TruncatedSeries evaluate_slices(const TruncatedSeries& f, const std::string& u,
                                const BigRational& value, const SliceShape& shape) {
  if (value == 1) throw PoleError("slices have a pole at " + u + "=1");
  const auto& ctx = f.context();
  const std::size_t uvar = ctx->index_of(u);
  auto target = ctx->without(u);
  TruncatedSeries out(target);
  for (const auto& slice : reconstruct(f, u, shape)) {
    BigRational num = 0;
    for (std::size_t i = slice.numerator.size(); i-- > 0;) num = num * value + slice.numerator[i];
    out.add_term(slice.others, num / pow(BigRational(1 - value), static_cast<unsigned>(slice.power)));
  }
  for (std::size_t v = 0; v < ctx->num_variables(); ++v) {
    if (v != uvar) out.limit_precision(ctx->name(v), f.precision(v));
  }
  return out;
}

}  // namespace eslab
