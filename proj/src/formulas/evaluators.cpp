#include "eslab/formulas/evaluators.hpp"

#include <functional>

#include "eslab/error.hpp"
#include "eslab/formulas/formula_id.hpp"
#include "eslab/series/bounded_sum.hpp"
#include "eslab/series/qseries.hpp"
#include "poly.hpp"

namespace eslab {

namespace {

using S = TruncatedSeries;

S constant(const ContextPtr& ctx, const BigRational& c) { return S::constant(ctx, c); }
S tvar(const ContextPtr& ctx) { return S::variable(ctx, var::kT); }
S rpow(const ContextPtr& ctx, int i) { return poly::lift(ctx, var::kT, poly::r_pow(i)); }

// (r^i - 1)/t as an exact polynomial; its constant term is -i.
poly::Poly r_minus_one_over_t(int i) { return poly::div_t(poly::add(poly::r_pow(i), {-1})); }

// Running product f(1) f(2) ... f(n-1), extended on demand.
class ProductCache {
 public:
  ProductCache(S one, std::function<S(int)> factor)
      : factor_(std::move(factor)), products_{std::move(one)} {}
  const S& operator()(int n) {
    while (static_cast<int>(products_.size()) < n) {
      const int i = static_cast<int>(products_.size());
      products_.push_back(products_.back() * factor_(i));
    }
    return products_[static_cast<std::size_t>(n - 1)];
  }

 private:
  std::function<S(int)> factor_;
  std::vector<S> products_;  // products_[n-1] = prod_{i<n}
};

void require_var(const ContextPtr& ctx, const char* name) {
  if (!ctx->has(name)) throw ContextError(std::string("context lacks variable ") + name);
}

}  // namespace

TruncatedSeries rhs_gg1(const ContextPtr& ctx) {
  require_var(ctx, var::kX);
  require_var(ctx, var::kU);
  // Group the terms by N = n + k; each group is a finite sum of degree N - 2.
  auto term = [&](int total) {
    S group(ctx);
    for (int n = 1; n < total; ++n) {
      const int k = total - n;
      group += S::monomial(ctx, {{var::kX, n - 1}, {var::kU, k - 1}}) *
               rpow(ctx, k * n).inverse();
    }
    return group;
  };
  return bounded_sum(ctx, {var::kX, var::kU}, 2, term, [](int total) { return total - 2; });
}

TruncatedSeries rhs_cor1_mid(const ContextPtr& ctx, const TruncatedSeries& x) {
  require_var(ctx, var::kUbar);
  const S t = tvar(ctx);
  const S one_minus_w_inv = poly::lift(ctx, var::kUbar, {1, -1}).inverse();
  auto term = [&](int n) {
    const S denom = (BigRational(1) - x * rpow(ctx, n - 1)) * (BigRational(1) - x * rpow(ctx, n));
    return S::monomial(ctx, {{var::kUbar, n + 1}}) * one_minus_w_inv * t * rpow(ctx, n - 1) *
           denom.inverse();
  };
  S sum = bounded_sum(ctx, {var::kUbar}, 1, term, [](int n) { return n + 1; });
  // 1/((u-1)(x-1)) = ubar / ((1-ubar)(x-1))
  return sum + S::variable(ctx, var::kUbar) * one_minus_w_inv * (x - BigRational(1)).inverse();
}

TruncatedSeries rhs_thm1(const ContextPtr& ctx, const BigRational& x, const BigRational& v,
                         const BigRational& q) {
  require_var(ctx, var::kU);
  if (x == 1) throw PoleError("thm1 needs x != 1");
  const S t = tvar(ctx);
  const S u = S::variable(ctx, var::kU);
  auto factor = [&](int i) {
    // ((1-qt) r^{i-1} - 1) / (r^i - 1), both divided by t first.
    const auto num = poly::div_t(poly::add(poly::mul({1, -q}, poly::r_pow(i - 1)), {-1}));
    const S ri = rpow(ctx, i);
    return u * (x - ri - x * v * t) * (x - ri).inverse() * poly::lift(ctx, var::kT, num) *
           poly::lift(ctx, var::kT, r_minus_one_over_t(i)).inverse();
  };
  ProductCache p(constant(ctx, 1), factor);

  auto outer = [&](int n) {
    const S head = (q * x - 1) + (1 - q) * rpow(ctx, n - 1);
    return head * (x - rpow(ctx, n)).inverse() * p(n);
  };
  auto inner = [&](int n) {
    const S head = (x - 1 - x * v) * rpow(ctx, n - 1) + x * v;
    return head * poly::lift(ctx, var::kT, r_minus_one_over_t(n)).inverse() * p(n);
  };
  auto bound = [](int n) { return n - 1; };
  const S s1 = bounded_sum(ctx, {var::kU}, 1, outer, bound);
  const S s2 = bounded_sum(ctx, {var::kU}, 1, inner, bound);
  const S correction = BigRational(1) - u * s2 * BigRational((q - 1) / (x - 1));
  return BigRational(v / (1 - x)) * t * s1 * correction.inverse();
}

TruncatedSeries rhs_adr1(const ContextPtr& ctx, const TruncatedSeries& x, const BigRational& v) {
  require_var(ctx, var::kU);
  const S t = tvar(ctx);
  auto factor = [&](int i) {
    const S ri = rpow(ctx, i);
    return (x - ri - v * x * t) * (x - ri).inverse();
  };
  ProductCache p(constant(ctx, 1), factor);
  auto term = [&](int n) {
    return v * t * S::monomial(ctx, {{var::kU, n - 1}}) * (rpow(ctx, n) - x).inverse() * p(n);
  };
  return bounded_sum(ctx, {var::kU}, 1, term, [](int n) { return n - 1; });
}

TruncatedSeries rhs_adr2(const ContextPtr& ctx, const TruncatedSeries& x, const BigRational& v) {
  require_var(ctx, var::kUbar);
  const S t = tvar(ctx);
  const S vt_minus_one = v * t - BigRational(1);
  // factor(i) covers index i of prod_{i=1..n}, so p(n+1) is the full product.
  auto factor = [&](int i) {
    const S xr = x * rpow(ctx, i - 1);
    return (BigRational(1) - xr) * (xr * vt_minus_one + BigRational(1)).inverse();
  };
  ProductCache p(constant(ctx, 1), factor);
  auto term = [&](int n) {
    const S xr = x * rpow(ctx, n - 1);
    return v * t * rpow(ctx, n - 1) * S::monomial(ctx, {{var::kUbar, n}}) *
           (xr - BigRational(1)).inverse() * p(n + 1);
  };
  return bounded_sum(ctx, {var::kUbar}, 1, term, [](int n) { return n; });
}

TruncatedSeries rhs_thm4(const ContextPtr& ctx, const BigRational& x, const BigRational& v,
                         const BigRational& z) {
  require_var(ctx, var::kUbar);
  if (x == 1) throw PoleError("thm4 needs x != 1");
  const S t = tvar(ctx);
  const S w = S::variable(ctx, var::kUbar);
  const int wcap = ctx->cap(ctx->index_of(var::kUbar));
  const ContextPtr wide = ctx->with_cap(var::kUbar, wcap + 1);

  // u T_n = u r^{n-1} G(t; x r^{n-1}, u, v, 1, 1); G has ubar-valuation >= 1,
  // so it is evaluated one ubar-degree deeper and divided by ubar.
  auto u_times_T = [&](int n) {
    const S rn = rpow(wide, n - 1);
    const S g = rhs_adr2(wide, x * rn, v);
    return (rn * g).shift(var::kUbar, -1).restrict_to(ctx);
  };
  auto factor = [&](int i) {
    const auto b = r_minus_one_over_t(i);
    const auto c = poly::add(poly::scale(poly::r_pow(i - 1), 1 - z), b);
    return w * poly::lift(ctx, var::kT, c) * poly::lift(ctx, var::kT, b).inverse();
  };
  ProductCache p(constant(ctx, 1), factor);

  auto num_term = [&](int n) {
    const S rn = rpow(ctx, n - 1);
    const S one_plus = BigRational(1) + x * u_times_T(n);
    return z * v * t * rn * w * one_plus * (x * rn - BigRational(1)).inverse() * p(n);
  };
  auto den_term = [&](int n) {
    return (z - 1) * w * rpow(ctx, n - 1) *
           poly::lift(ctx, var::kT, r_minus_one_over_t(n)).inverse() * p(n);
  };
  auto bound = [](int n) { return n; };
  const S num = bounded_sum(ctx, {var::kUbar}, 1, num_term, bound);
  const S den = bounded_sum(ctx, {var::kUbar}, 1, den_term, bound);
  return num * (BigRational(1) - den).inverse();
}

TruncatedSeries rhs_asczeromax(const ContextPtr& ctx, const BigRational& q,
                               const BigRational& z) {
  require_var(ctx, var::kU);
  const S t = tvar(ctx);
  auto linear = [&](const BigRational& c) { return BigRational(1) - c * t; };  // 1 - c t
  std::vector<S> products;  // products[n] = prod_{i=0..n}
  auto product = [&](int n) -> const S& {
    while (static_cast<int>(products.size()) <= n) {
      const int i = static_cast<int>(products.size());
      S f = linear(i - q + 1) * linear(i + z).inverse();
      products.push_back(products.empty() ? f : products.back() * f);
    }
    return products[static_cast<std::size_t>(n)];
  };
  auto term = [&](int n) {
    return q * z * t * S::monomial(ctx, {{var::kU, n}}) * linear(n - q + 1).inverse() *
           product(n);
  };
  return bounded_sum(ctx, {var::kU}, 0, term, [](int n) { return n; });
}

namespace {

// Shared body of H~1 (with a) and H1 (without). The quotients of shifted
// factorials are rewritten so that every denominator is a unit, also when x
// and u are formal variables:
//   (1 - b r^i)/(1 - r^{i+2}/x)  = (x - xb r^i)/(x - r^{i+2})
//   (1 - c r^i)/(1 - d r^i)      = u (x - xc r^i)/(ux - uxd r^i)
S h1_family(const ContextPtr& ctx, const S& x, const S& u, const std::string& grading,
            const BigRational& v, const BigRational& q, const std::optional<BigRational>& a) {
  if (v == 1 || q == 1) throw PoleError("H1 needs v != 1 and q != 1");
  const S t = tvar(ctx);
  const S one_minus_qt = BigRational(1) - q * t;
  const S one_minus_vt = BigRational(1) - v * t;
  const S xb = one_minus_qt * one_minus_vt.inverse() * BigRational((1 - q * v) / (1 - v));
  const S xc = one_minus_vt * one_minus_qt.inverse() * BigRational((1 - q * v) / (1 - q));
  const BigRational uxd = (1 - q * v) * (1 - q * v) / ((1 - v) * (1 - q));
  const S r = rpow(ctx, 1);
  const S one_minus_at = a ? BigRational(1) - *a * t : constant(ctx, 1);

  auto factor = [&](int i1) {
    const int i = i1 - 1;
    const S ri = rpow(ctx, i);
    S f = (x - xb * ri) * (x - rpow(ctx, i + 2)).inverse() * u * (x - xc * ri) *
          (u * x - uxd * ri).inverse();
    if (a) {
      f = f * (BigRational(1) - one_minus_at * ri) *
          (BigRational(1) - one_minus_at * u * ri).inverse();
    }
    return f;
  };
  ProductCache p(constant(ctx, 1), factor);
  auto term = [&](int k) { return r.pow(static_cast<unsigned>(k)) * p(k + 1); };
  const S sum = bounded_sum(ctx, {grading}, 0, term, [](int k) { return k; });

  const S one_minus_t_minus_x = BigRational(1) - t - x;
  if (!a) return q * v * t * one_minus_t_minus_x.inverse() * sum;
  const S num = q * v * t * (one_minus_t_minus_x + x * t * *a);
  return num * (r * one_minus_t_minus_x).inverse() * sum;
}

}  // namespace

TruncatedSeries h1tilde_series(const ContextPtr& ctx, const BigRational& x, const BigRational& u,
                               const BigRational& v, const BigRational& q, const BigRational& a) {
  if (x == 0 || u == 0) throw PoleError("H~1 needs x, u nonzero");
  return h1_family(ctx, constant(ctx, x), constant(ctx, u), var::kT, v, q, a);
}

TruncatedSeries h1_series(const ContextPtr& ctx, const TruncatedSeries& x,
                          const TruncatedSeries& u, const std::string& grading,
                          const BigRational& v, const BigRational& q) {
  return h1_family(ctx, x, u, grading, v, q, std::nullopt);
}

TruncatedSeries h2star_series(const ContextPtr& ctx, const BigRational& x, const BigRational& u,
                              const BigRational& q, const BigRational& v, const BigRational& a) {
  if (v == 1 || q == 1 || u == 0) throw PoleError("H2* needs v, q != 1 and u != 0");
  const S t = tvar(ctx);
  const S r = rpow(ctx, 1);
  const S r_inv = r.inverse();
  const S one_minus_qt = BigRational(1) - q * t;
  const S one_minus_vt = BigRational(1) - v * t;
  const S one_minus_at = BigRational(1) - a * t;
  const BigRational qv = 1 - q * v;

  const std::vector<S> uppers = {
      x * qv / (1 - v) * one_minus_qt * r_inv,
      x * qv / (1 - q) * one_minus_vt * r_inv,
      one_minus_at,
  };
  const std::vector<S> lowers = {
      u * x * qv * qv / ((1 - v) * (1 - q)) * one_minus_qt * one_minus_vt * r_inv * r_inv,
      x * one_minus_vt * r,
      one_minus_at * r * (u * one_minus_vt).inverse(),
  };
  auto factor = [&](int i1) {
    const S ri = rpow(ctx, i1 - 1);
    S f = constant(ctx, 1);
    for (const auto& b : uppers) f = f * (BigRational(1) - b * ri);
    for (const auto& d : lowers) f = f * (BigRational(1) - d * ri).inverse();
    return f;
  };
  ProductCache p(constant(ctx, 1), factor);
  auto term = [&](int k) { return r.pow(static_cast<unsigned>(k)) * p(k + 1); };
  const S sum = bounded_sum(ctx, {var::kT}, 0, term, [](int k) { return k; });

  const S base = x - x * v * t - BigRational(1);
  return (base + a * t) * base.inverse() * sum;
}

TruncatedSeries h2_series(const ContextPtr& ctx, const TruncatedSeries& xbar,
                          const TruncatedSeries& ubar, const std::string& grading,
                          const BigRational& v) {
  const S t = tvar(ctx);
  const S one_minus_vt = BigRational(1) - v * t;
  auto factor = [&](int i1) {
    const int i = i1 - 1;
    return (xbar - rpow(ctx, i)) * (xbar - one_minus_vt * rpow(ctx, i + 1)).inverse();
  };
  ProductCache p(constant(ctx, 1), factor);
  const S r = rpow(ctx, 1);
  auto term = [&](int k) {
    return (ubar * r).pow(static_cast<unsigned>(k)) * p(k + 1);
  };
  const S sum = bounded_sum(ctx, {grading}, 0, term, [](int k) { return k; });
  return one_minus_vt * (one_minus_vt - xbar).inverse() * sum;
}

namespace {

constexpr int kTf43Margin = 4;

void require_lower(const S& param, const char* what) {
  const BigRational c0 = param.coefficient(std::vector<int>(param.context()->num_variables(), 0));
  if (c0 == 1) {
    throw PoleError(std::string("denominator factor ") + what + " has vanishing constant term in r");
  }
}

}  // namespace

std::pair<TruncatedSeries, TruncatedSeries> tf43_sides(const ContextPtr& ctx, int j,
                                                       const Tf43Params& p,
                                                       std::optional<int> kmax) {
  if (j < 0) throw DomainError("tf43 needs j >= 0");
  require_var(ctx, var::kR);
  if (p.b == 0 || p.c == 0 || p.d == 0 || p.e == 0) throw PoleError("tf43 needs b, c, d, e nonzero");
  const int cap = ctx->cap(ctx->index_of(var::kR));
  // Work with r Laurent: each factor 1 - (1-r)^{k+1} of (q;q)_k is inverted on
  // its own. The margin absorbs the precision those inverses cost.
  const ContextPtr w = SeriesContext::create({{var::kR, cap + kTf43Margin}}, std::string(var::kR));
  const S one = S::constant(w, 1);
  const S q = S::polynomial(w, var::kR, {1, -1});
  const S qj = q.pow(static_cast<unsigned>(j));
  const S one_minus_a = S::polynomial(w, var::kR, {1, -p.alpha});
  const BigRational bc_de = p.b * p.c / (p.d * p.e);

  const std::vector<S> lhs_up = {qj, one_minus_a, one * p.b, one * p.c};
  const std::vector<S> lhs_low = {one * p.d, one * p.e, qj * q * one_minus_a * bc_de};
  const std::vector<S> rhs_up = {qj, one_minus_a, one * BigRational(p.d / p.b),
                                 one * BigRational(p.d / p.c)};
  const std::vector<S> rhs_low = {one * p.d, one * BigRational(1 / bc_de),
                                  qj * q * one_minus_a * BigRational(1 / p.e)};
  const char* low_names[] = {"d", "e", "(1-r)^{j+1}(1-a)bc/de", "d", "de/bc", "(1-r)^{j+1}(1-a)/e"};
  for (int i = 0; i < 3; ++i) {
    require_lower(lhs_low[static_cast<std::size_t>(i)], low_names[i]);
    require_lower(rhs_low[static_cast<std::size_t>(i)], low_names[i + 3]);
  }
  const S pre_den_a = q * one_minus_a * BigRational(1 / p.e);
  const S pre_den_b = q * bc_de;
  require_lower(pre_den_a, "(1-r)(1-a)/e");
  require_lower(pre_den_b, "(1-r)bc/de");

  const S prefactor = qpochhammer({q * BigRational(1 / p.e), q * one_minus_a * bc_de}, q, j) *
                      qpochhammer({pre_den_a, pre_den_b}, q, j).inverse();

  auto side = [&](const std::vector<S>& up, const std::vector<S>& low) {
    if (kmax) return basic_hypergeometric(up, low, q, q, *kmax);
    const auto terms = basic_hypergeometric_terms(up, low, q, q, cap + kTf43Margin + 1);
    return bounded_sum(w, {var::kR}, 0, [&](int k) { return terms[static_cast<std::size_t>(k)]; },
                       [](int k) { return k; });
  };
  S lhs = side(lhs_up, lhs_low);
  S rhs = prefactor * side(rhs_up, rhs_low);
  if (kmax) {
    // Partial sums are polynomials in r only up to the precision lost to the
    // Laurent inverses; report them in the caller's box.
    return {lhs.convert_to(ctx), rhs.convert_to(ctx)};
  }
  return {lhs.restrict_to(ctx), rhs.restrict_to(ctx)};
}

}  // namespace eslab
