#include "eslab/series/qseries.hpp"

#include "eslab/error.hpp"

namespace eslab {

namespace {

TruncatedSeries inverse_of_factor(const TruncatedSeries& factor, int k) {
  if (factor.is_zero()) {
    throw PoleError("lower shifted-factorial factor vanishes at k=" + std::to_string(k));
  }
  return factor.inverse();
}

}  // namespace

TruncatedSeries qpochhammer(const TruncatedSeries& a, const TruncatedSeries& q, int k) {
  if (k < 0) throw DomainError("shifted factorial with negative length");
  const auto& ctx = a.context();
  TruncatedSeries result = TruncatedSeries::constant(ctx, 1);
  TruncatedSeries aq = a;
  for (int i = 0; i < k; ++i) {
    result = result * (BigRational(1) - aq);
    if (i + 1 < k) aq = aq * q;
  }
  return result;
}

TruncatedSeries qpochhammer(const std::vector<TruncatedSeries>& as,
                            const TruncatedSeries& q, int k) {
  TruncatedSeries result = TruncatedSeries::constant(q.context(), 1);
  for (const auto& a : as) result = result * qpochhammer(a, q, k);
  return result;
}

std::vector<TruncatedSeries> basic_hypergeometric_terms(
    const std::vector<TruncatedSeries>& uppers, const std::vector<TruncatedSeries>& lowers,
    const TruncatedSeries& q, const TruncatedSeries& z, int kmax) {
  if (kmax < 0) throw DomainError("negative summation bound");
  const auto& ctx = q.context();
  const int balance = 1 + static_cast<int>(lowers.size()) - static_cast<int>(uppers.size());

  std::vector<TruncatedSeries> terms;
  terms.push_back(TruncatedSeries::constant(ctx, 1));
  TruncatedSeries qk = TruncatedSeries::constant(ctx, 1);  // q^k
  for (int k = 0; k < kmax; ++k) {
    const TruncatedSeries qk1 = qk * q;
    TruncatedSeries ratio = z;
    for (const auto& a : uppers) ratio = ratio * (BigRational(1) - a * qk);
    // ((-1)^k q^{C(k,2)}) grows by the factor -q^k from k to k+1.
    if (balance != 0) {
      TruncatedSeries step = -qk;
      if (balance < 0) step = step.inverse();
      ratio = ratio * step.pow(static_cast<unsigned>(balance < 0 ? -balance : balance));
    }
    ratio = ratio * inverse_of_factor(BigRational(1) - qk1, k);
    for (const auto& b : lowers) ratio = ratio * inverse_of_factor(BigRational(1) - b * qk, k);
    terms.push_back(terms.back() * ratio);
    qk = qk1;
  }
  return terms;
}

TruncatedSeries basic_hypergeometric(const std::vector<TruncatedSeries>& uppers,
                                     const std::vector<TruncatedSeries>& lowers,
                                     const TruncatedSeries& q, const TruncatedSeries& z,
                                     int kmax) {
  TruncatedSeries sum(q.context());
  for (const auto& term : basic_hypergeometric_terms(uppers, lowers, q, z, kmax)) sum += term;
  return sum;
}

}  // namespace eslab
