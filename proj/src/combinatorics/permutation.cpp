#include "eslab/combinatorics/permutation.hpp"

#include <algorithm>

#include "eslab/error.hpp"

namespace eslab {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : values_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw DomainError("not a permutation: " + to_string());
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

int Permutation::at(int position) const {
  if (position < 1 || position > size()) {
    throw DomainError("position " + std::to_string(position) + " out of range");
  }
  return values_[static_cast<std::size_t>(position - 1)];
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(values_[i]);
  }
  return out;
}

Permutation perm_transform(const Permutation& p, Transform kind) {
  const auto& v = p.values();
  const int n = p.size();
  std::vector<int> out(v.size());
  switch (kind) {
    case Transform::kInverse:
      for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(v[static_cast<std::size_t>(i)] - 1)] = i + 1;
      break;
    case Transform::kReverse:
      std::reverse_copy(v.begin(), v.end(), out.begin());
      break;
    case Transform::kComplement:
      for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = n + 1 - v[static_cast<std::size_t>(i)];
      break;
  }
  return Permutation(std::move(out));
}

}  // namespace eslab
