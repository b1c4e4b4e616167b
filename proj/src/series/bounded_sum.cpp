#include "eslab/series/bounded_sum.hpp"

#include <climits>

#include "eslab/error.hpp"

namespace eslab {

TruncatedSeries bounded_sum(const ContextPtr& ctx, const std::vector<std::string>& grading,
                            int first, const TermFn& term, const BoundFn& valuation_bound,
                            int max_terms) {
  if (grading.empty()) throw DomainError("bounded_sum needs at least one grading variable");
  int cap_sum = 0;
  for (const auto& g : grading) cap_sum += ctx->cap(ctx->index_of(g));

  TruncatedSeries sum(ctx);
  int previous = INT_MIN;
  for (int n = first;; ++n) {
    if (n - first >= max_terms) {
      throw BoundError("valuation bound did not pass the caps within " +
                       std::to_string(max_terms) + " terms");
    }
    const int bound = valuation_bound(n);
    if (bound < previous) {
      throw DomainError("valuation bound decreases at n=" + std::to_string(n));
    }
    previous = bound;
    const TruncatedSeries t = term(n);
    if (*t.context() != *ctx) throw ContextError("term context differs from sum context");
    const int actual = t.total_valuation(grading);
    if (actual < bound) throw ValuationAssertion(n, actual, bound);
    if (bound > cap_sum) break;
    sum += t;
  }
  // The omitted tail lies beyond the box in some grading variable.
  for (const auto& g : grading) sum.limit_precision(g, ctx->cap(ctx->index_of(g)));
  return sum;
}

}  // namespace eslab
