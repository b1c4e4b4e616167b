#include "eslab/series/context.hpp"

#include <set>

#include "eslab/error.hpp"

namespace eslab {

namespace {
// Dense coefficient arrays beyond this size are refused.
constexpr std::size_t kMaxDenseSize = std::size_t{1} << 22;
}  // namespace

ContextPtr SeriesContext::create(std::vector<VariableSpec> variables,
                                 std::optional<std::string> laurent_variable,
                                 std::optional<int> min_valuation) {
  std::shared_ptr<SeriesContext> ctx(new SeriesContext());
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (v.name.empty()) throw ContextError("variable with empty name");
    if (v.cap < 0) throw ContextError("negative cap for variable " + v.name);
    if (!seen.insert(v.name).second) {
      throw ContextError("duplicate variable " + v.name);
    }
  }
  ctx->variables_ = std::move(variables);
  if (laurent_variable) {
    for (std::size_t i = 0; i < ctx->variables_.size(); ++i) {
      if (ctx->variables_[i].name == *laurent_variable) ctx->laurent_ = i;
    }
    if (ctx->laurent_ == kNone) {
      throw ContextError("Laurent variable " + *laurent_variable +
                         " is not in the context");
    }
    ctx->min_valuation_ =
        min_valuation.value_or(-ctx->variables_[ctx->laurent_].cap);
    if (ctx->min_valuation_ > 0) {
      throw ContextError("min_valuation must be non-positive");
    }
  } else if (min_valuation && *min_valuation != 0) {
    throw ContextError("min_valuation given without a Laurent variable");
  }

  const std::size_t k = ctx->variables_.size();
  ctx->strides_.assign(k, 1);
  std::size_t size = 1;
  for (std::size_t i = k; i-- > 0;) {
    ctx->strides_[i] = size;
    size *= ctx->extent(i);
    if (size > kMaxDenseSize) {
      throw BoundError("series context too large: " + ctx->describe());
    }
  }
  ctx->size_ = size;
  return ctx;
}

bool SeriesContext::has(const std::string& name) const {
  for (const auto& v : variables_) {
    if (v.name == name) return true;
  }
  return false;
}

std::size_t SeriesContext::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i].name == name) return i;
  }
  throw ContextError("variable " + name + " not in context " + describe());
}

std::optional<std::size_t> SeriesContext::laurent_index() const {
  if (laurent_ == kNone) return std::nullopt;
  return laurent_;
}

std::optional<std::string> SeriesContext::laurent_variable() const {
  if (laurent_ == kNone) return std::nullopt;
  return variables_[laurent_].name;
}

bool SeriesContext::in_box(const std::vector<int>& exponents) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (exponents[i] < low(i) || exponents[i] > cap(i)) return false;
  }
  return true;
}

std::size_t SeriesContext::offset(const std::vector<int>& exponents) const {
  std::size_t off = 0;
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    off += static_cast<std::size_t>(exponents[i] - low(i)) * strides_[i];
  }
  return off;
}

std::vector<int> SeriesContext::exponents(std::size_t offset) const {
  std::vector<int> e(variables_.size());
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    e[i] = static_cast<int>(offset / strides_[i]) + low(i);
    offset %= strides_[i];
  }
  return e;
}

ContextPtr SeriesContext::with_cap(const std::string& name, int cap) const {
  auto vars = variables_;
  vars[index_of(name)].cap = cap;
  std::optional<int> minv;
  if (laurent_ != kNone) minv = min_valuation_;
  return create(std::move(vars), laurent_variable(), minv);
}

ContextPtr SeriesContext::without(const std::string& name) const {
  const std::size_t idx = index_of(name);
  std::vector<VariableSpec> vars;
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (i != idx) vars.push_back(variables_[i]);
  }
  if (laurent_ == idx || laurent_ == kNone) return create(std::move(vars));
  return create(std::move(vars), laurent_variable(), min_valuation_);
}

ContextPtr SeriesContext::renamed(const std::string& from,
                                  const std::string& to) const {
  auto vars = variables_;
  vars[index_of(from)].name = to;
  std::optional<std::string> laurent = laurent_variable();
  if (laurent && *laurent == from) laurent = to;
  std::optional<int> minv;
  if (laurent_ != kNone) minv = min_valuation_;
  return create(std::move(vars), laurent, minv);
}

bool SeriesContext::operator==(const SeriesContext& other) const {
  if (variables_.size() != other.variables_.size()) return false;
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i].name != other.variables_[i].name ||
        variables_[i].cap != other.variables_[i].cap) {
      return false;
    }
  }
  return laurent_ == other.laurent_ && min_valuation_ == other.min_valuation_;
}

std::string SeriesContext::describe() const {
  std::string out = "{";
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (i) out += ", ";
    out += variables_[i].name + "<=" + std::to_string(variables_[i].cap);
    if (i == laurent_) out += " (>=" + std::to_string(min_valuation_) + ")";
  }
  return out + "}";
}

}  // namespace eslab
