#pragma once

#include <array>
#include <bitset>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eslab/combinatorics/inversion_sequence.hpp"
#include "eslab/combinatorics/permutation.hpp"

namespace eslab {

enum class Stat {
  // Permutations.
  kDes,
  kIdes,
  kIasc,
  kLmax,
  kLmin,
  kRmax,
  // Inversion sequences.
  kAsc,
  kDist,
  kRep,
  kZero,
  kMax,
  kRmin,
  kLast,
  kCzero,
  kEalz,
  kCmax,
  kEalm,
};

inline constexpr std::size_t kStatCount = 17;

enum class Domain { kPermutations, kInversionSequences };

std::string_view stat_name(Stat s);
// Throws DomainError for unknown names.
Stat parse_stat(std::string_view name);
Domain stat_domain(Stat s);
std::string_view domain_name(Domain d);
// Accepts "perm", "permutations", "invseq", "inversion_sequences".
Domain parse_domain(std::string_view name);

// Named scalar statistics plus the optional set-valued Rmin slot.
class StatVector {
 public:
  bool has(Stat s) const { return present_[static_cast<std::size_t>(s)]; }
  // Throws DomainError when the statistic was not computed.
  int get(Stat s) const;
  void set(Stat s, int value);

  const std::optional<std::vector<int>>& rmin_set() const { return rmin_set_; }
  void set_rmin_set(std::vector<int> sorted_values) { rmin_set_ = std::move(sorted_values); }

 private:
  std::array<int, kStatCount> values_{};
  std::bitset<kStatCount> present_;
  std::optional<std::vector<int>> rmin_set_;
};

// des, ides, iasc, lmax, lmin, rmax. Throws DomainError for n = 0.
StatVector perm_stats(const Permutation& p);

// asc, dist, rep, zero, max, rmin, last, czero, ealz, cmax, ealm and the Rmin
// set. Throws DomainError for n = 0.
StatVector invseq_stats(const InversionSequence& s);

// Single statistic without building the whole vector.
int perm_stat(const Permutation& p, Stat s);
int invseq_stat(const InversionSequence& s, Stat stat);
// Rmin(s) = {s_i : s_i < s_j for all j > i}, sorted ascending.
std::vector<int> rmin_set(const InversionSequence& s);

}  // namespace eslab
