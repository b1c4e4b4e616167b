#pragma once

#include <vector>

#include "eslab/series/truncated_series.hpp"

namespace eslab {

// (a;q)_k = (1-a)(1-aq)...(1-aq^{k-1}).
TruncatedSeries qpochhammer(const TruncatedSeries& a, const TruncatedSeries& q, int k);

// (a_1,...,a_m;q)_k, the product of the single shifted factorials.
TruncatedSeries qpochhammer(const std::vector<TruncatedSeries>& as,
                            const TruncatedSeries& q, int k);

// Terms k = 0..kmax of the basic hypergeometric series
//   sum_k (a_1..a_A;q)_k / (q,b_1..b_B;q)_k * ((-1)^k q^{k(k-1)/2})^{1+B-A} z^k.
// Each term is built from the previous one, and each lower factor is inverted
// on its own so that factors vanishing at the origin only cost precision once.
// Throws PoleError if a lower factor vanishes identically.
std::vector<TruncatedSeries> basic_hypergeometric_terms(
    const std::vector<TruncatedSeries>& uppers, const std::vector<TruncatedSeries>& lowers,
    const TruncatedSeries& q, const TruncatedSeries& z, int kmax);

// Partial sum of the series above through k = kmax.
TruncatedSeries basic_hypergeometric(const std::vector<TruncatedSeries>& uppers,
                                     const std::vector<TruncatedSeries>& lowers,
                                     const TruncatedSeries& q, const TruncatedSeries& z,
                                     int kmax);

}  // namespace eslab
