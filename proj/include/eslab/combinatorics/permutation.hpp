#pragma once

#include <string>
#include <vector>

namespace eslab {

// A permutation of {1..n} in one-line notation. Positions are 1-based.
class Permutation {
 public:
  Permutation() = default;
  // Throws DomainError unless values is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> values);

  int size() const { return static_cast<int>(values_.size()); }
  int at(int position) const;  // 1-based
  const std::vector<int>& values() const { return values_; }

  bool operator==(const Permutation& other) const = default;
  auto operator<=>(const Permutation& other) const = default;

  std::string to_string() const;

 private:
  friend class PermutationCursor;
  std::vector<int> values_;
};

enum class Transform { kInverse, kReverse, kComplement };

// inverse: pi^{-1}; reverse: pi_n ... pi_1; complement: (n+1-pi_1) ... (n+1-pi_n).
Permutation perm_transform(const Permutation& p, Transform kind);

}  // namespace eslab
