#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eslab/formulas/formula_id.hpp"
#include "eslab/series/rational.hpp"

namespace eslab {

// Values for the specialized parameters, in the formula's parameter order.
using RationalPoint = std::vector<std::pair<std::string, BigRational>>;

// Throws DomainError if the variable is missing.
const BigRational& point_value(const RationalPoint& point, const std::string& name);
std::string point_string(const RationalPoint& point);

struct FormulaInfo {
  FormulaId id;
  std::string plan;                       // human-readable grading plan
  std::map<std::string, int> default_caps;
  std::vector<std::string> parameters;    // specialized variables, sampled
  RationalPoint example;
  // Reason the point is excluded, or nullopt.
  std::function<std::optional<std::string>(const RationalPoint&)> pole;
};

const FormulaInfo& formula_info(FormulaId id);

struct EvalPlan {
  FormulaId formula;
  std::map<std::string, int> caps;
  RationalPoint point;
  std::uint64_t seed = 0;
};

// Candidate values the sampler draws from.
const std::vector<BigRational>& default_sample_pool();

struct SampleOptions {
  int count = 3;
  std::uint64_t seed = 1;
  std::map<std::string, BigRational> pinned;  // held fixed in every point
  std::vector<BigRational> pool = default_sample_pool();
  int max_redraws = 1000;
};

// The first point is the formula's example point (with pinned values
// applied); the rest are drawn with mt19937_64 from the pool. Points on the
// pole set and repeated points are re-drawn; PoleError once max_redraws
// draws have failed. With every parameter pinned a single point is returned.
std::vector<RationalPoint> sample_points(FormulaId id, const SampleOptions& options);

}  // namespace eslab
