#pragma once

#include <functional>
#include <vector>

#include "eslab/combinatorics/inversion_sequence.hpp"
#include "eslab/combinatorics/permutation.hpp"

namespace eslab {

inline constexpr int kDefaultEnumerationBound = 10;

// Visits every element of S_n (resp. I_n) whose word starts with `prefix`,
// in lexicographic order. The visited object is reused between calls; copy
// it to keep it. Throws BoundError if n is outside [1, bound] and
// DomainError if the prefix cannot be extended.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit,
                          const std::vector<int>& prefix = {},
                          int bound = kDefaultEnumerationBound);
void for_each_inversion_sequence(int n,
                                 const std::function<void(const InversionSequence&)>& visit,
                                 const std::vector<int>& prefix = {},
                                 int bound = kDefaultEnumerationBound);

std::vector<Permutation> enumerate_perms(int n, int bound = kDefaultEnumerationBound);
std::vector<InversionSequence> enumerate_invseqs(int n, int bound = kDefaultEnumerationBound);

// Throws BoundError unless 1 <= n <= bound.
void check_enumeration_size(int n, int bound = kDefaultEnumerationBound);

}  // namespace eslab
