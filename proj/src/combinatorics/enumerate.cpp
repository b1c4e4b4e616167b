#include "eslab/combinatorics/enumerate.hpp"

#include <algorithm>

#include "eslab/error.hpp"

namespace eslab {

// Gives the enumerators in-place access to the words of the visited objects.
class PermutationCursor {
 public:
  static std::vector<int>& word(Permutation& p) { return p.values_; }
};

class InversionSequenceCursor {
 public:
  static std::vector<int>& word(InversionSequence& s) { return s.entries_; }
};

void check_enumeration_size(int n, int bound) {
  if (n < 1) throw BoundError("enumeration needs n >= 1, got " + std::to_string(n));
  if (n > bound) {
    throw BoundError("n=" + std::to_string(n) + " exceeds the enumeration bound " +
                     std::to_string(bound));
  }
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit,
                          const std::vector<int>& prefix, int bound) {
  check_enumeration_size(n, bound);
  if (static_cast<int>(prefix.size()) > n) throw DomainError("prefix longer than n");
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (int v : prefix) {
    if (v < 1 || v > n || used[static_cast<std::size_t>(v)]) {
      throw DomainError("prefix is not part of a permutation");
    }
    used[static_cast<std::size_t>(v)] = true;
  }
  Permutation p;
  auto& w = PermutationCursor::word(p);
  w = prefix;
  for (int v = 1; v <= n; ++v) {
    if (!used[static_cast<std::size_t>(v)]) w.push_back(v);
  }
  const auto tail = w.begin() + static_cast<std::ptrdiff_t>(prefix.size());
  do {
    visit(p);
  } while (std::next_permutation(tail, w.end()));
}

void for_each_inversion_sequence(int n,
                                 const std::function<void(const InversionSequence&)>& visit,
                                 const std::vector<int>& prefix, int bound) {
  check_enumeration_size(n, bound);
  if (static_cast<int>(prefix.size()) > n) throw DomainError("prefix longer than n");
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (prefix[i] < 0 || prefix[i] > static_cast<int>(i)) {
      throw DomainError("prefix is not part of an inversion sequence");
    }
  }
  InversionSequence s;
  auto& w = InversionSequenceCursor::word(s);
  w = prefix;
  w.resize(static_cast<std::size_t>(n), 0);
  const std::size_t fixed = prefix.size();
  while (true) {
    visit(s);
    // Odometer on the free positions, last position fastest.
    bool advanced = false;
    for (std::size_t i = static_cast<std::size_t>(n); i > fixed && !advanced;) {
      --i;
      if (w[i] < static_cast<int>(i)) {
        ++w[i];
        advanced = true;
      } else {
        w[i] = 0;
      }
    }
    if (!advanced) return;
  }
}

std::vector<Permutation> enumerate_perms(int n, int bound) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); }, {}, bound);
  return out;
}

std::vector<InversionSequence> enumerate_invseqs(int n, int bound) {
  std::vector<InversionSequence> out;
  for_each_inversion_sequence(n, [&](const InversionSequence& s) { out.push_back(s); }, {}, bound);
  return out;
}

}  // namespace eslab
