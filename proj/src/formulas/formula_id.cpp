#include "eslab/formulas/formula_id.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "eslab/error.hpp"

namespace eslab {

namespace {

constexpr std::array<std::pair<FormulaId, std::string_view>, 11> kNames = {{
    {FormulaId::kAdr1, "adr1"},
    {FormulaId::kAdr2, "adr2"},
    {FormulaId::kAscZeroMax, "asczeromax"},
    {FormulaId::kCor1Mid, "cor1_mid"},
    {FormulaId::kGg1, "gg1"},
    {FormulaId::kH1, "h1"},
    {FormulaId::kH1Tilde, "h1tilde"},
    {FormulaId::kH2, "h2"},
    {FormulaId::kTf43, "tf43"},
    {FormulaId::kThm1, "thm1"},
    {FormulaId::kThm4, "thm4"},
}};

}  // namespace

const std::vector<FormulaId>& all_formulas() {
  static const std::vector<FormulaId> ids = [] {
    std::vector<FormulaId> out;
    for (const auto& [id, name] : kNames) out.push_back(id);
    return out;
  }();
  return ids;
}

std::string_view formula_name(FormulaId id) {
  for (const auto& [i, name] : kNames) {
    if (i == id) return name;
  }
  return "?";
}

FormulaId parse_formula(std::string_view name) {
  for (const auto& [id, n] : kNames) {
    if (n == name) return id;
  }
  throw DomainError("unknown formula id '" + std::string(name) + "'");
}

}  // namespace eslab
