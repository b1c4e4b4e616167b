#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace eslab {

struct VariableSpec {
  std::string name;
  int cap = 0;
};

// Ordered set of formal variables with per-variable degree caps. At most one
// variable may carry negative exponents, down to min_valuation.
class SeriesContext {
 public:
  // min_valuation defaults to -cap of the Laurent variable.
  static std::shared_ptr<const SeriesContext> create(
      std::vector<VariableSpec> variables,
      std::optional<std::string> laurent_variable = std::nullopt,
      std::optional<int> min_valuation = std::nullopt);

  std::size_t num_variables() const { return variables_.size(); }
  const std::vector<VariableSpec>& variables() const { return variables_; }
  const std::string& name(std::size_t var) const { return variables_[var].name; }
  int cap(std::size_t var) const { return variables_[var].cap; }
  // Lowest admissible exponent: min_valuation for the Laurent variable, else 0.
  int low(std::size_t var) const { return var == laurent_ ? min_valuation_ : 0; }

  bool has(const std::string& name) const;
  // Throws ContextError when the variable is absent.
  std::size_t index_of(const std::string& name) const;

  std::optional<std::size_t> laurent_index() const;
  std::optional<std::string> laurent_variable() const;
  int min_valuation() const { return min_valuation_; }

  // Dense storage layout.
  std::size_t size() const { return size_; }
  std::size_t stride(std::size_t var) const { return strides_[var]; }
  std::size_t extent(std::size_t var) const {
    return static_cast<std::size_t>(cap(var) - low(var) + 1);
  }
  bool in_box(const std::vector<int>& exponents) const;
  std::size_t offset(const std::vector<int>& exponents) const;
  std::vector<int> exponents(std::size_t offset) const;

  // Copies of this context with one change applied.
  std::shared_ptr<const SeriesContext> with_cap(const std::string& name,
                                                int cap) const;
  std::shared_ptr<const SeriesContext> without(const std::string& name) const;
  // Replaces the variable `from` by `to` keeping its position and cap.
  std::shared_ptr<const SeriesContext> renamed(const std::string& from,
                                               const std::string& to) const;

  bool operator==(const SeriesContext& other) const;
  bool operator!=(const SeriesContext& other) const { return !(*this == other); }

  std::string describe() const;

 private:
  SeriesContext() = default;

  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::vector<VariableSpec> variables_;
  std::size_t laurent_ = kNone;
  int min_valuation_ = 0;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 1;
};

using ContextPtr = std::shared_ptr<const SeriesContext>;

}  // namespace eslab
