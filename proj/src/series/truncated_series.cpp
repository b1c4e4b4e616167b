#include "eslab/series/truncated_series.hpp"

#include <algorithm>

#include "eslab/error.hpp"

namespace eslab {

namespace {

int sat_add(int a, int b) {
  if (a == TruncatedSeries::kExact || b == TruncatedSeries::kExact) {
    return TruncatedSeries::kExact;
  }
  return a + b;
}

}  // namespace

TruncatedSeries::TruncatedSeries(ContextPtr ctx)
    : ctx_(std::move(ctx)),
      coeffs_(ctx_->size()),
      precision_(ctx_->num_variables(), kExact) {}

TruncatedSeries TruncatedSeries::constant(ContextPtr ctx, const BigRational& value) {
  TruncatedSeries s(std::move(ctx));
  s.add_term(Exponents(s.ctx_->num_variables(), 0), value);
  return s;
}

TruncatedSeries TruncatedSeries::variable(ContextPtr ctx, const std::string& name) {
  return monomial(std::move(ctx), {{name, 1}});
}

TruncatedSeries TruncatedSeries::monomial(ContextPtr ctx,
                                          const std::map<std::string, int>& exponents,
                                          const BigRational& coeff) {
  TruncatedSeries s(std::move(ctx));
  Exponents e(s.ctx_->num_variables(), 0);
  for (const auto& [name, k] : exponents) e[s.ctx_->index_of(name)] = k;
  s.add_term(e, coeff);
  return s;
}

TruncatedSeries TruncatedSeries::polynomial(ContextPtr ctx, const std::string& name,
                                            const std::vector<BigRational>& coeffs) {
  TruncatedSeries s(std::move(ctx));
  const std::size_t var = s.ctx_->index_of(name);
  Exponents e(s.ctx_->num_variables(), 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    e[var] = static_cast<int>(i);
    s.add_term(e, coeffs[i]);
  }
  return s;
}

BigRational TruncatedSeries::coefficient(const Exponents& exponents) const {
  if (exponents.size() != ctx_->num_variables()) {
    throw ContextError("exponent arity does not match context");
  }
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] > precision_[i]) {
      throw PrecisionError("coefficient of " + monomial_string(*ctx_, exponents) +
                           " is beyond the known precision " +
                           std::to_string(precision_[i]) + " in " + ctx_->name(i));
    }
  }
  if (!ctx_->in_box(exponents)) return 0;
  return coeffs_[ctx_->offset(exponents)];
}

BigRational TruncatedSeries::coefficient(const std::map<std::string, int>& exponents) const {
  Exponents e(ctx_->num_variables(), 0);
  for (const auto& [name, k] : exponents) e[ctx_->index_of(name)] = k;
  return coefficient(e);
}

void TruncatedSeries::add_term(const Exponents& exponents, const BigRational& coeff) {
  if (exponents.size() != ctx_->num_variables()) {
    throw ContextError("exponent arity does not match context");
  }
  if (coeff == 0) return;
  bool dropped = false;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < ctx_->low(i)) {
      throw ValuationError("term " + monomial_string(*ctx_, exponents) +
                           " lies below the valuation bound of " + ctx_->describe());
    }
    if (exponents[i] > ctx_->cap(i)) {
      drop_precision(i, ctx_->cap(i));
      dropped = true;
    }
  }
  if (dropped) return;
  coeffs_[ctx_->offset(exponents)] += coeff;
}

void TruncatedSeries::limit_precision(const std::string& name, int p) {
  drop_precision(ctx_->index_of(name), p);
}

void TruncatedSeries::drop_precision(std::size_t var, int p) {
  precision_[var] = std::min(precision_[var], p);
}

std::vector<std::size_t> TruncatedSeries::nonzero_offsets() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) out.push_back(i);
  }
  return out;
}

std::vector<TruncatedSeries::Term> TruncatedSeries::terms() const {
  std::vector<Term> out;
  for (std::size_t off : nonzero_offsets()) {
    out.emplace_back(ctx_->exponents(off), coeffs_[off]);
  }
  return out;
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const BigRational& c) { return c == 0; });
}

std::size_t TruncatedSeries::term_count() const {
  return static_cast<std::size_t>(std::count_if(
      coeffs_.begin(), coeffs_.end(), [](const BigRational& c) { return c != 0; }));
}

int TruncatedSeries::precision(const std::string& name) const {
  return precision_[ctx_->index_of(name)];
}

int TruncatedSeries::valuation(const std::string& name) const {
  return valuation(ctx_->index_of(name));
}

int TruncatedSeries::valuation(std::size_t var) const {
  int v = kExact;
  for (std::size_t off = 0; off < coeffs_.size(); ++off) {
    if (coeffs_[off] == 0) continue;
    const int e = static_cast<int>(off / ctx_->stride(var) % ctx_->extent(var)) + ctx_->low(var);
    v = std::min(v, e);
  }
  return v;
}

int TruncatedSeries::total_valuation(const std::vector<std::string>& names) const {
  std::vector<std::size_t> vars;
  for (const auto& n : names) vars.push_back(ctx_->index_of(n));
  int v = kExact;
  for (std::size_t off = 0; off < coeffs_.size(); ++off) {
    if (coeffs_[off] == 0) continue;
    const auto e = ctx_->exponents(off);
    int d = 0;
    for (auto var : vars) d += e[var];
    v = std::min(v, d);
  }
  return v;
}

void TruncatedSeries::require_same_context(const TruncatedSeries& other) const {
  if (ctx_ != other.ctx_ && *ctx_ != *other.ctx_) {
    throw ContextError("series contexts differ: " + ctx_->describe() + " vs " +
                       other.ctx_->describe());
  }
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  require_same_context(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (other.coeffs_[i] != 0) coeffs_[i] += other.coeffs_[i];
  }
  for (std::size_t i = 0; i < precision_.size(); ++i) {
    precision_[i] = std::min(precision_[i], other.precision_[i]);
  }
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  require_same_context(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (other.coeffs_[i] != 0) coeffs_[i] -= other.coeffs_[i];
  }
  for (std::size_t i = 0; i < precision_.size(); ++i) {
    precision_[i] = std::min(precision_[i], other.precision_[i]);
  }
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const BigRational& scalar) {
  if (scalar == 0) {
    for (auto& c : coeffs_) c = 0;
    return *this;
  }
  for (auto& c : coeffs_) {
    if (c != 0) c *= scalar;
  }
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& other) {
  *this = *this * other;
  return *this;
}

TruncatedSeries operator+(TruncatedSeries a, const BigRational& s) {
  a.add_term(TruncatedSeries::Exponents(a.ctx_->num_variables(), 0), s);
  return a;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.require_same_context(b);
  const SeriesContext& ctx = *a.ctx_;
  const std::size_t k = ctx.num_variables();
  TruncatedSeries out(a.ctx_);

  const auto nz_a = a.nonzero_offsets();
  const auto nz_b = b.nonzero_offsets();
  std::vector<TruncatedSeries::Exponents> ea, eb;
  ea.reserve(nz_a.size());
  eb.reserve(nz_b.size());
  for (auto off : nz_a) ea.push_back(ctx.exponents(off));
  for (auto off : nz_b) eb.push_back(ctx.exponents(off));

  std::vector<bool> dropped(k, false);
  TruncatedSeries::Exponents e(k);
  BigRational prod;
  for (std::size_t i = 0; i < nz_a.size(); ++i) {
    for (std::size_t j = 0; j < nz_b.size(); ++j) {
      bool inside = true;
      for (std::size_t v = 0; v < k; ++v) {
        e[v] = ea[i][v] + eb[j][v];
        if (e[v] > ctx.cap(v)) {
          dropped[v] = true;
          inside = false;
        } else if (e[v] < ctx.low(v)) {
          throw ValuationError("product term " + TruncatedSeries::monomial_string(ctx, e) +
                               " lies below the valuation bound of " + ctx.describe());
        }
      }
      if (!inside) continue;
      prod = a.coeffs_[nz_a[i]] * b.coeffs_[nz_b[j]];
      out.coeffs_[ctx.offset(e)] += prod;
    }
  }

  const auto laurent = ctx.laurent_index();
  for (std::size_t v = 0; v < k; ++v) {
    int p;
    if (laurent && *laurent == v) {
      // Discarded parts of each factor start one above its precision.
      const int va = std::min(a.valuation(v), sat_add(a.precision_[v], 1));
      const int vb = std::min(b.valuation(v), sat_add(b.precision_[v], 1));
      p = std::min(sat_add(a.precision_[v], vb), sat_add(b.precision_[v], va));
    } else {
      p = std::min(a.precision_[v], b.precision_[v]);
    }
    if (p != TruncatedSeries::kExact || dropped[v]) p = std::min(p, ctx.cap(v));
    out.precision_[v] = p;
  }
  return out;
}

TruncatedSeries TruncatedSeries::invert_unit() const {
  const SeriesContext& ctx = *ctx_;
  const std::size_t k = ctx.num_variables();
  const Exponents zero_e(k, 0);
  const BigRational c0 = coeffs_[ctx.offset(zero_e)];
  if (c0 == 0) throw ValuationError("series has no invertible constant term");

  const auto nz = nonzero_offsets();
  std::vector<Exponents> ez;
  std::vector<bool> depends(k, false);
  for (auto off : nz) {
    ez.push_back(ctx.exponents(off));
    for (std::size_t v = 0; v < k; ++v) {
      if (ez.back()[v] < 0) {
        throw ValuationError("series is not a unit: negative exponent in " + ctx.name(v));
      }
      if (ez.back()[v] > 0) depends[v] = true;
    }
  }

  TruncatedSeries out(ctx_);
  const BigRational inv_c0 = 1 / c0;
  Exponents e(k), d(k);
  BigRational acc;
  for (std::size_t off = 0; off < ctx.size(); ++off) {
    e = ctx.exponents(off);
    if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0; })) continue;
    if (e == zero_e) {
      out.coeffs_[off] = inv_c0;
      continue;
    }
    acc = 0;
    for (std::size_t t = 0; t < nz.size(); ++t) {
      if (ez[t] == zero_e) continue;
      bool ok = true;
      for (std::size_t v = 0; v < k; ++v) {
        d[v] = e[v] - ez[t][v];
        if (d[v] < 0) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      const auto& b = out.coeffs_[ctx.offset(d)];
      if (b != 0) acc += coeffs_[nz[t]] * b;
    }
    if (acc != 0) out.coeffs_[off] = -acc * inv_c0;
  }
  for (std::size_t v = 0; v < k; ++v) {
    out.precision_[v] = (precision_[v] == kExact && !depends[v])
                            ? kExact
                            : std::min(precision_[v], ctx.cap(v));
  }
  return out;
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (is_zero()) throw ValuationError("cannot invert the zero series");
  const auto laurent = ctx_->laurent_index();
  if (!laurent) return invert_unit();

  const std::size_t t = *laurent;
  const std::string& name = ctx_->name(t);
  const int v = valuation(t);
  if (v > precision_[t]) {
    throw ValuationError("valuation in " + name + " is not determined at this precision");
  }
  Exponents lead(ctx_->num_variables(), 0);
  lead[t] = v;
  if (coeffs_[ctx_->offset(lead)] == 0) {
    throw ValuationError("series has no invertible leading term " +
                         monomial_string(*ctx_, lead));
  }
  if (v == 0) return invert_unit();
  if (-v < ctx_->min_valuation()) {
    throw ValuationError("inverse has valuation " + std::to_string(-v) + " in " + name +
                         ", below the bound " + std::to_string(ctx_->min_valuation()));
  }

  if (precision_[t] == kExact) {
    // Work in a box enlarged by |v| so the result keeps full precision.
    const int extra = v > 0 ? v : -v;
    auto wide = ctx_->with_cap(name, ctx_->cap(t) + extra);
    auto unit = convert_to(wide).shift(name, -v);
    return unit.invert_unit().shift(name, -v).convert_to(ctx_);
  }
  return shift(name, -v).invert_unit().shift(name, -v);
}

TruncatedSeries TruncatedSeries::pow(unsigned exponent) const {
  TruncatedSeries result = constant(ctx_, 1);
  TruncatedSeries base(*this);
  while (exponent != 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent != 0) base = base * base;
  }
  return result;
}

TruncatedSeries TruncatedSeries::shift(const std::string& name, int k) const {
  const std::size_t var = ctx_->index_of(name);
  TruncatedSeries out(ctx_);
  out.precision_ = precision_;
  if (k == 0) return *this;
  bool dropped = false;
  for (std::size_t off = 0; off < coeffs_.size(); ++off) {
    if (coeffs_[off] == 0) continue;
    auto e = ctx_->exponents(off);
    e[var] += k;
    if (e[var] < ctx_->low(var)) {
      throw ValuationError("shift by " + std::to_string(k) + " in " + name +
                           " moves a nonzero term below the valuation bound");
    }
    if (e[var] > ctx_->cap(var)) {
      dropped = true;
      continue;
    }
    out.coeffs_[ctx_->offset(e)] = coeffs_[off];
  }
  int& p = out.precision_[var];
  if (p != kExact) {
    p = std::min(p, ctx_->cap(var)) + k;
    p = std::min(p, ctx_->cap(var));
  } else if (dropped) {
    p = ctx_->cap(var);
  }
  return out;
}

TruncatedSeries TruncatedSeries::specialize(const std::string& name,
                                            const BigRational& value) const {
  const std::size_t var = ctx_->index_of(name);
  if (precision_[var] != kExact) {
    throw PrecisionError("cannot specialize " + name + ": series is truncated in it");
  }
  auto target = ctx_->without(name);
  TruncatedSeries out(target);
  for (std::size_t v = 0, w = 0; v < precision_.size(); ++v) {
    if (v != var) out.precision_[w++] = precision_[v];
  }
  for (std::size_t off = 0; off < coeffs_.size(); ++off) {
    if (coeffs_[off] == 0) continue;
    auto e = ctx_->exponents(off);
    const int k = e[var];
    if (k < 0 && value == 0) throw PoleError("substituting 0 for " + name + " at a pole");
    BigRational factor = k >= 0 ? eslab::pow(value, static_cast<unsigned>(k))
                                : 1 / eslab::pow(value, static_cast<unsigned>(-k));
    e.erase(e.begin() + static_cast<std::ptrdiff_t>(var));
    out.coeffs_[target->offset(e)] += coeffs_[off] * factor;
  }
  return out;
}

TruncatedSeries TruncatedSeries::specialize(
    const std::map<std::string, BigRational>& point) const {
  TruncatedSeries out(*this);
  for (const auto& [name, value] : point) {
    if (out.ctx_->has(name)) out = out.specialize(name, value);
  }
  return out;
}

TruncatedSeries TruncatedSeries::convert_to(const ContextPtr& target) const {
  const std::size_t k = ctx_->num_variables();
  std::vector<long> map(k, -1);
  for (std::size_t v = 0; v < k; ++v) {
    if (target->has(ctx_->name(v))) {
      map[v] = static_cast<long>(target->index_of(ctx_->name(v)));
    }
  }
  TruncatedSeries out(target);
  for (std::size_t v = 0; v < k; ++v) {
    if (map[v] >= 0) {
      out.precision_[static_cast<std::size_t>(map[v])] = precision_[v];
    } else if (precision_[v] != kExact) {
      throw ContextError("variable " + ctx_->name(v) + " is truncated and absent from " +
                         target->describe());
    }
  }
  Exponents e(target->num_variables());
  for (std::size_t off = 0; off < coeffs_.size(); ++off) {
    if (coeffs_[off] == 0) continue;
    const auto src = ctx_->exponents(off);
    std::fill(e.begin(), e.end(), 0);
    for (std::size_t v = 0; v < k; ++v) {
      if (map[v] >= 0) {
        e[static_cast<std::size_t>(map[v])] = src[v];
      } else if (src[v] != 0) {
        throw ContextError("variable " + ctx_->name(v) + " occurs but is absent from " +
                           target->describe());
      }
    }
    out.add_term(e, coeffs_[off]);
  }
  for (std::size_t v = 0; v < target->num_variables(); ++v) {
    if (out.precision_[v] != kExact) {
      out.precision_[v] = std::min(out.precision_[v], target->cap(v));
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::restrict_to(const ContextPtr& target) const {
  TruncatedSeries out = convert_to(target);
  for (std::size_t v = 0; v < target->num_variables(); ++v) {
    if (out.precision_[v] < target->cap(v)) {
      throw PrecisionError("precision " + std::to_string(out.precision_[v]) + " in " +
                           target->name(v) + " does not reach the cap " +
                           std::to_string(target->cap(v)));
    }
  }
  return out;
}

bool TruncatedSeries::operator==(const TruncatedSeries& other) const {
  if (*ctx_ != *other.ctx_) return false;
  return coeffs_ == other.coeffs_;
}

std::string TruncatedSeries::monomial_string(const SeriesContext& ctx, const Exponents& e) {
  std::string out;
  for (std::size_t v = 0; v < e.size(); ++v) {
    if (e[v] == 0) continue;
    if (!out.empty()) out += "*";
    out += ctx.name(v);
    if (e[v] != 1) out += "^" + std::to_string(e[v]);
  }
  return out.empty() ? "1" : out;
}

std::string TruncatedSeries::to_string() const {
  std::string out;
  for (const auto& [e, c] : terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + eslab::to_string(c) + ")";
    const auto m = monomial_string(*ctx_, e);
    if (m != "1") out += "*" + m;
  }
  return out.empty() ? "0" : out;
}

}  // namespace eslab
