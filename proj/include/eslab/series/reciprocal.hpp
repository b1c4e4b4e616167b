#pragma once

#include <functional>
#include <string>
#include <vector>

#include "eslab/series/truncated_series.hpp"

namespace eslab {

// Expansion of N(u)/D(u) at u = infinity as a power series in ubar = 1/u,
// placed in `ctx` (which must contain ubar). Requires deg N <= deg D, since
// otherwise the expansion has a pole at infinity (DomainError).
TruncatedSeries expand_rational_at_infinity(const ContextPtr& ctx, const std::string& ubar,
                                            const std::vector<BigRational>& numerator,
                                            const std::vector<BigRational>& denominator);

// Describes the rational shape of the u-slices of a series: for every fixed
// choice of the other exponents, the slice is N(u)/(1-u)^e with deg N <= d,
// where e and d depend on the exponent of `key`.
struct SliceShape {
  std::string key;
  std::function<int(int)> denominator_power;
  std::function<int(int)> numerator_degree;
};

// Reconstructs each u-slice of f as N(u)/(1-u)^e and re-expands it in
// ubar = 1/u up to ubar_cap. The coefficients of (1-u)^e * slice above the
// degree bound must vanish, which needs the u-cap of f to exceed every degree
// bound; PrecisionError or DomainError otherwise.
TruncatedSeries reexpand_at_infinity(const TruncatedSeries& f, const std::string& u,
                                     const std::string& ubar, int ubar_cap,
                                     const SliceShape& shape);

// Reconstructs each u-slice as above and evaluates it at u = value.
TruncatedSeries evaluate_slices(const TruncatedSeries& f, const std::string& u,
                                const BigRational& value, const SliceShape& shape);

}  // namespace eslab
