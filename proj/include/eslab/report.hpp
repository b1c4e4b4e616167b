#pragma once

#include <map>
#include <string>
#include <vector>

#include "eslab/equidist/check.hpp"
#include "eslab/equidist/distribution.hpp"
#include "eslab/formulas/verify.hpp"

namespace eslab {

std::string tool_version();

// Reports serialize rationals as "p/q" strings. With timing off every
// elapsed_ms is written as 0, so identical runs give identical bytes.
struct ReportStyle {
  bool timing = true;
};

// One object per formula; several reports become an array sorted by id.
std::string verify_json(const std::vector<VerifyReport>& reports, const ReportStyle& style);
std::string verify_text(const std::vector<VerifyReport>& reports, const ReportStyle& style);

// Distribution checks (claims, baselines, conjecture, bijection roundtrip).
// `params` is echoed verbatim under "params".
std::string check_json(const std::vector<CheckReport>& reports,
                       const std::vector<std::map<std::string, std::string>>& params,
                       const ReportStyle& style);
std::string check_text(const std::vector<CheckReport>& reports, const ReportStyle& style);

// Joint distribution tables: rows "tuple : count", CSV with the statistic
// names and a count column, or JSON.
std::string distribution_text(const Distribution& d);
std::string distribution_csv(const Distribution& d);
std::string distribution_json(const Distribution& d, double elapsed_ms, const ReportStyle& style);

}  // namespace eslab
