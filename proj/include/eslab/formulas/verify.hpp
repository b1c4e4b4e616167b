#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eslab/equidist/check.hpp"
#include "eslab/formulas/lhs.hpp"
#include "eslab/formulas/plan.hpp"
#include "eslab/series/truncated_series.hpp"

namespace eslab {

// First monomial (in dense order) where the two series differ, as a witness
// {monomial, lhs_coeff, rhs_coeff}; nullopt when they agree. Both series must
// share a context and cover its caps (PrecisionError otherwise).
std::optional<Witness> compare_series(const TruncatedSeries& lhs, const TruncatedSeries& rhs);

struct SeriesCheck {
  std::string name;
  int point_index = -1;  // -1 for checks that do not use a sampled point
  bool passed = false;
  std::optional<Witness> witness;
  double elapsed_ms = 0;
};

struct VerifyOptions {
  std::map<std::string, int> caps;  // overrides of the formula's defaults
  SampleOptions sampling;
  std::vector<int> js = {0, 1, 2};  // tf43 only
  std::optional<int> n_max;         // enumeration depth, defaults to the t-cap
  int enumeration_bound = kDefaultEnumerationBound;
  int workers = 1;
  LhsSource source = LhsSource::kPermutations;
};

struct VerifyReport {
  FormulaId id;
  std::map<std::string, int> caps;
  std::string plan;
  std::vector<RationalPoint> points;
  std::uint64_t seed = 0;
  int n_max = 0;                    // enumeration depth, 0 when no left side
  std::vector<int> js;              // tf43 only
  std::vector<SeriesCheck> checks;  // ordered by (point_index, name)
  bool passed = false;
  double elapsed_ms = 0;
};

// Evaluates the formula against its left side (or its partner side, or its
// swapped arguments) at the sampled points. Evaluation errors inside a check
// fail that check with an {error} witness; bad options and pole exhaustion
// throw (DomainError, BoundError, PoleError).
VerifyReport verify_formula(FormulaId id, const VerifyOptions& options);

}  // namespace eslab
