#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "eslab/combinatorics/statistics.hpp"
#include "eslab/series/rational.hpp"

namespace eslab {

// One coordinate of a statistic tuple: a scalar statistic or the Rmin set.
struct StatField {
  bool is_rmin_set = false;
  Stat stat = Stat::kDes;

  static StatField scalar(Stat s) { return {false, s}; }
  static StatField rmin() { return {true, Stat::kRmin}; }
  // Accepts statistic names and "Rmin" for the set-valued slot.
  static StatField parse(std::string_view name);
  std::string name() const;
  Domain domain() const;
  bool operator==(const StatField&) const = default;
};

using StatTuple = std::vector<StatField>;

// Parses a comma-separated list such as "des,ides,rmax".
StatTuple parse_stat_tuple(std::string_view text);
std::string stat_tuple_name(const StatTuple& stats);

// Value of a statistic tuple on one object: the scalars in field order, plus
// the sorted Rmin set when the tuple contains it.
struct DistributionKey {
  std::vector<int> scalars;
  std::vector<int> rmin_set;
  auto operator<=>(const DistributionKey&) const = default;
  bool operator==(const DistributionKey&) const = default;
  // "(1,2,{0,3})" with the set printed at its field position.
  std::string to_string(const StatTuple& stats) const;
};

struct Distribution {
  StatTuple stats;
  int n = 0;
  Domain domain = Domain::kPermutations;
  std::map<DistributionKey, BigInt> counts;

  BigInt total() const;
  // Count for a key, zero when absent.
  BigInt count(const DistributionKey& key) const;
};

DistributionKey key_of(const Permutation& p, const StatTuple& stats);
DistributionKey key_of(const InversionSequence& s, const StatTuple& stats);

// Exact joint distribution over S_n or I_n. Work is split by word prefix over
// `workers` threads and merged; the result does not depend on the split.
// Throws DomainError if a statistic does not belong to the domain and
// BoundError if n is outside [1, bound].
Distribution joint_distribution(const StatTuple& stats, int n, Domain domain, int workers = 1,
                                int bound = 10);

}  // namespace eslab
