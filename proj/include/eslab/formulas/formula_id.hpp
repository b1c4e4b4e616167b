#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace eslab {

enum class FormulaId {
  kGg1,
  kCor1Mid,
  kThm1,
  kAdr1,
  kAdr2,
  kThm4,
  kAscZeroMax,
  kH1Tilde,
  kH1,
  kH2,
  kTf43,
};

// All identifiers, sorted by name.
const std::vector<FormulaId>& all_formulas();
std::string_view formula_name(FormulaId id);
// Throws DomainError for unknown names.
FormulaId parse_formula(std::string_view name);

// Names of the formal variables used by the evaluators.
namespace var {
inline constexpr const char* kT = "t";
inline constexpr const char* kX = "x";
inline constexpr const char* kU = "u";
inline constexpr const char* kUbar = "ubar";
inline constexpr const char* kXbar = "xbar";
inline constexpr const char* kR = "r";
}  // namespace var

}  // namespace eslab
