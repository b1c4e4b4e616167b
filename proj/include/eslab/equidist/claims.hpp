#pragma once

#include <string>
#include <vector>

#include "eslab/equidist/check.hpp"

namespace eslab {

// A published equidistribution statement between two statistic tuples.
struct EquidistClaim {
  std::string id;
  std::string description;
  StatTuple stats_a;
  Domain domain_a;
  StatTuple stats_b;
  Domain domain_b;
  int default_n_max;
};

// All registered claims, sorted by id.
const std::vector<EquidistClaim>& equidist_claims();
// Throws DomainError for unknown ids.
const EquidistClaim& find_claim(const std::string& id);
CheckReport run_claim(const EquidistClaim& claim, int n_max, int workers = 1,
                      int bound = kDefaultEnumerationBound);

// Eulerian numbers A(n,k): permutations of [n] with k descents, by the
// recurrence A(n,k) = (k+1)A(n-1,k) + (n-k)A(n-1,k-1).
std::vector<BigInt> eulerian_numbers(int n);
// Coefficients of x(x+1)...(x+n-1), index = power of x.
std::vector<BigInt> rising_factorial_coefficients(int n);

// des on S_n against the Eulerian numbers and lmax against the rising
// factorial, for 1 <= n <= n_max.
CheckReport check_baselines(int n_max, int bound = kDefaultEnumerationBound);

// Compares (asc,rep,zero,max,rmin) with (asc,rep,zero,rmin,max) on I_n for
// every n <= n_max. A failure is a counterexample and carries the tuple and
// both counts.
CheckReport check_conjecture_op2(int n_max, int workers = 1,
                                 int bound = kDefaultEnumerationBound);

inline constexpr int kConjectureDefaultNMax = 9;

}  // namespace eslab
