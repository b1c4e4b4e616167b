#pragma once

#include <functional>
#include <string>
#include <vector>

#include "eslab/series/truncated_series.hpp"

namespace eslab {

using TermFn = std::function<TruncatedSeries(int)>;
using BoundFn = std::function<int(int)>;

// Sums term(n) for n = first, first+1, ... while valuation_bound(n) does not
// exceed the sum of the caps of the grading variables. Valuation is the total
// degree in the grading variables. Terms are requested in increasing n.
//
// Every summed term must have valuation >= valuation_bound(n); the first
// omitted term is also evaluated and must vanish in the box. A violation
// throws ValuationAssertion carrying n. The bound must be non-decreasing and
// must pass the caps within max_terms terms (BoundError otherwise).
TruncatedSeries bounded_sum(const ContextPtr& ctx, const std::vector<std::string>& grading,
                            int first, const TermFn& term, const BoundFn& valuation_bound,
                            int max_terms = 4096);

}  // namespace eslab
