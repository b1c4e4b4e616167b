#include "eslab/combinatorics/inversion_sequence.hpp"

#include "eslab/error.hpp"

namespace eslab {

InversionSequence::InversionSequence(std::vector<int> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 0 || entries_[i] > static_cast<int>(i)) {
      throw DomainError("not an inversion sequence: (" + to_string() + ")");
    }
  }
}

int InversionSequence::at(int position) const {
  if (position < 1 || position > size()) {
    throw DomainError("position " + std::to_string(position) + " out of range");
  }
  return entries_[static_cast<std::size_t>(position - 1)];
}

std::string InversionSequence::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out;
}

InversionSequence invseq_complement(const InversionSequence& s) {
  std::vector<int> out(s.entries().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<int>(i) - s.entries()[i];
  return InversionSequence(std::move(out));
}

}  // namespace eslab
