#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eslab/combinatorics/enumerate.hpp"
#include "eslab/equidist/distribution.hpp"

namespace eslab {

// Ordered name/value pairs describing why a check failed.
struct Witness {
  std::vector<std::pair<std::string, std::string>> fields;

  void add(std::string name, std::string value) {
    fields.emplace_back(std::move(name), std::move(value));
  }
  std::string get(const std::string& name) const;
  std::string summary() const;
};

struct CheckReport {
  std::string claim;
  int n_min = 1;
  int n_max = 0;
  bool passed = true;
  std::optional<Witness> witness;  // present whenever passed is false
  double elapsed_ms = 0;
  std::string detail;
};

// First key (in key order) at which the two distributions differ, with both
// counts, or nullopt when they agree. The keys of `b` are compared as if they
// were keys of `a`, so the tuples must have matching shapes.
std::optional<Witness> compare_distributions(const Distribution& a, const Distribution& b);

// Exact equality of the joint distributions of stats_a over domain_a and
// stats_b over domain_b for every n in [n_min, n_max]. Throws DomainError if
// the tuples have different arity or place the Rmin slot differently.
CheckReport check_equidistribution(const std::string& claim, const StatTuple& stats_a,
                                   Domain domain_a, const StatTuple& stats_b, Domain domain_b,
                                   int n_min, int n_max, int workers = 1,
                                   int bound = kDefaultEnumerationBound);

}  // namespace eslab
