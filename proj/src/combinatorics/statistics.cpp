#include "eslab/combinatorics/statistics.hpp"

#include <algorithm>

#include "eslab/error.hpp"

namespace eslab {

namespace {

constexpr std::array<std::string_view, kStatCount> kNames = {
    "des", "ides", "iasc", "lmax", "lmin", "rmax", "asc",  "dist", "rep",
    "zero", "max", "rmin", "last", "czero", "ealz", "cmax", "ealm"};

void require_nonempty(int n) {
  if (n == 0) throw DomainError("statistics need a non-empty object");
}

int descents(const std::vector<int>& w) {
  int d = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) d += w[i] > w[i + 1];
  return d;
}

int inverse_descents(const std::vector<int>& w) {
  // i is an inverse descent when i+1 appears to the left of i.
  std::vector<int> pos(w.size() + 1);
  for (std::size_t i = 0; i < w.size(); ++i) pos[static_cast<std::size_t>(w[i])] = static_cast<int>(i);
  int d = 0;
  for (std::size_t v = 1; v < w.size(); ++v) d += pos[v] > pos[v + 1];
  return d;
}

int left_to_right_maxima(const std::vector<int>& w) {
  int count = 0, best = 0;
  for (int v : w) {
    if (v > best) {
      ++count;
      best = v;
    }
  }
  return count;
}

int left_to_right_minima(const std::vector<int>& w) {
  int count = 0, best = static_cast<int>(w.size()) + 1;
  for (int v : w) {
    if (v < best) {
      ++count;
      best = v;
    }
  }
  return count;
}

int right_to_left_maxima(const std::vector<int>& w) {
  int count = 0, best = 0;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (*it > best) {
      ++count;
      best = *it;
    }
  }
  return count;
}

int distinct_nonzero(const std::vector<int>& s) {
  std::vector<bool> seen(s.size(), false);
  int d = 0;
  for (int v : s) {
    if (v != 0 && !seen[static_cast<std::size_t>(v)]) {
      seen[static_cast<std::size_t>(v)] = true;
      ++d;
    }
  }
  return d;
}

int initial_zeros(const std::vector<int>& s) {
  int c = 0;
  while (static_cast<std::size_t>(c) < s.size() && s[static_cast<std::size_t>(c)] == 0) ++c;
  return c;
}

int entry_after_last_zero(const std::vector<int>& s) {
  std::size_t last = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == 0) last = i;
  }
  return last + 1 < s.size() ? s[last + 1] : 0;
}

int initial_increasing(const std::vector<int>& s) {
  std::size_t p = 1;
  while (p < s.size() && s[p] > s[p - 1]) ++p;
  return static_cast<int>(p);
}

int entry_after_last_maximal(const std::vector<int>& s) {
  const auto p = static_cast<std::size_t>(initial_increasing(s));
  return p < s.size() ? s[p] : 0;
}

}  // namespace

std::string_view stat_name(Stat s) { return kNames[static_cast<std::size_t>(s)]; }

Stat parse_stat(std::string_view name) {
  for (std::size_t i = 0; i < kStatCount; ++i) {
    if (kNames[i] == name) return static_cast<Stat>(i);
  }
  throw DomainError("unknown statistic '" + std::string(name) + "'");
}

Domain stat_domain(Stat s) {
  return static_cast<std::size_t>(s) <= static_cast<std::size_t>(Stat::kRmax)
             ? Domain::kPermutations
             : Domain::kInversionSequences;
}

std::string_view domain_name(Domain d) {
  return d == Domain::kPermutations ? "perm" : "invseq";
}

Domain parse_domain(std::string_view name) {
  if (name == "perm" || name == "permutations") return Domain::kPermutations;
  if (name == "invseq" || name == "inversion_sequences") return Domain::kInversionSequences;
  throw DomainError("unknown domain '" + std::string(name) + "'");
}

int StatVector::get(Stat s) const {
  if (!has(s)) throw DomainError("statistic " + std::string(stat_name(s)) + " not computed");
  return values_[static_cast<std::size_t>(s)];
}

void StatVector::set(Stat s, int value) {
  values_[static_cast<std::size_t>(s)] = value;
  present_.set(static_cast<std::size_t>(s));
}

int perm_stat(const Permutation& p, Stat s) {
  require_nonempty(p.size());
  const auto& w = p.values();
  switch (s) {
    case Stat::kDes: return descents(w);
    case Stat::kIdes: return inverse_descents(w);
    case Stat::kIasc: return p.size() - 1 - inverse_descents(w);
    case Stat::kLmax: return left_to_right_maxima(w);
    case Stat::kLmin: return left_to_right_minima(w);
    case Stat::kRmax: return right_to_left_maxima(w);
    default:
      throw DomainError("statistic " + std::string(stat_name(s)) + " is not defined on permutations");
  }
}

StatVector perm_stats(const Permutation& p) {
  StatVector out;
  for (Stat s : {Stat::kDes, Stat::kIdes, Stat::kIasc, Stat::kLmax, Stat::kLmin, Stat::kRmax}) {
    out.set(s, perm_stat(p, s));
  }
  return out;
}

std::vector<int> rmin_set(const InversionSequence& seq) {
  const auto& s = seq.entries();
  std::vector<int> out;
  int best = static_cast<int>(s.size()) + 1;
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    if (*it < best) {
      out.push_back(*it);
      best = *it;
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

int invseq_stat(const InversionSequence& seq, Stat stat) {
  require_nonempty(seq.size());
  const auto& s = seq.entries();
  const int n = seq.size();
  switch (stat) {
    case Stat::kAsc: {
      int a = 0;
      for (std::size_t i = 0; i + 1 < s.size(); ++i) a += s[i] < s[i + 1];
      return a;
    }
    case Stat::kDist: return distinct_nonzero(s);
    case Stat::kRep: return n - 1 - distinct_nonzero(s);
    case Stat::kZero: return static_cast<int>(std::count(s.begin(), s.end(), 0));
    case Stat::kMax: {
      int m = 0;
      for (std::size_t i = 0; i < s.size(); ++i) m += s[i] == static_cast<int>(i);
      return m;
    }
    case Stat::kRmin: return static_cast<int>(rmin_set(seq).size());
    case Stat::kLast: return s.back();
    case Stat::kCzero: return initial_zeros(s);
    case Stat::kEalz: return entry_after_last_zero(s);
    case Stat::kCmax: return initial_increasing(s);
    case Stat::kEalm: return entry_after_last_maximal(s);
    default:
      throw DomainError("statistic " + std::string(stat_name(stat)) +
                        " is not defined on inversion sequences");
  }
}

StatVector invseq_stats(const InversionSequence& s) {
  StatVector out;
  for (std::size_t i = static_cast<std::size_t>(Stat::kAsc); i < kStatCount; ++i) {
    out.set(static_cast<Stat>(i), invseq_stat(s, static_cast<Stat>(i)));
  }
  out.set_rmin_set(rmin_set(s));
  return out;
}

}  // namespace eslab
