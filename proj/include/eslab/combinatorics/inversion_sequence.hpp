#pragma once

#include <string>
#include <vector>

namespace eslab {

// A word s_1 ... s_n with 0 <= s_i <= i-1. Positions are 1-based.
class InversionSequence {
 public:
  InversionSequence() = default;
  // Throws DomainError if some entry is out of range.
  explicit InversionSequence(std::vector<int> entries);

  int size() const { return static_cast<int>(entries_.size()); }
  int at(int position) const;  // 1-based
  const std::vector<int>& entries() const { return entries_; }

  bool operator==(const InversionSequence& other) const = default;
  auto operator<=>(const InversionSequence& other) const = default;

  std::string to_string() const;

 private:
  friend class InversionSequenceCursor;
  std::vector<int> entries_;
};

// Entrywise s_i -> i-1-s_i.
InversionSequence invseq_complement(const InversionSequence& s);

}  // namespace eslab
