#include "eslab/equidist/distribution.hpp"

#include <algorithm>
#include <thread>

#include "eslab/combinatorics/enumerate.hpp"
#include "eslab/error.hpp"

namespace eslab {

StatField StatField::parse(std::string_view name) {
  if (name == "Rmin" || name == "RminSet") return rmin();
  return scalar(parse_stat(name));
}

std::string StatField::name() const {
  return is_rmin_set ? "Rmin" : std::string(stat_name(stat));
}

Domain StatField::domain() const {
  return is_rmin_set ? Domain::kInversionSequences : stat_domain(stat);
}

StatTuple parse_stat_tuple(std::string_view text) {
  StatTuple out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    if (piece.empty()) throw DomainError("empty statistic name in '" + std::string(text) + "'");
    out.push_back(StatField::parse(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string stat_tuple_name(const StatTuple& stats) {
  std::string out = "(";
  for (std::size_t i = 0; i < stats.size(); ++i) {
    if (i) out += ",";
    out += stats[i].name();
  }
  return out + ")";
}

std::string DistributionKey::to_string(const StatTuple& stats) const {
  std::string out = "(";
  std::size_t scalar = 0;
  for (std::size_t i = 0; i < stats.size(); ++i) {
    if (i) out += ",";
    if (stats[i].is_rmin_set) {
      out += "{";
      for (std::size_t j = 0; j < rmin_set.size(); ++j) {
        if (j) out += ",";
        out += std::to_string(rmin_set[j]);
      }
      out += "}";
    } else {
      out += std::to_string(scalars[scalar++]);
    }
  }
  return out + ")";
}

BigInt Distribution::total() const {
  BigInt t = 0;
  for (const auto& [key, c] : counts) t += c;
  return t;
}

BigInt Distribution::count(const DistributionKey& key) const {
  auto it = counts.find(key);
  return it == counts.end() ? BigInt(0) : it->second;
}

DistributionKey key_of(const Permutation& p, const StatTuple& stats) {
  DistributionKey key;
  key.scalars.reserve(stats.size());
  for (const auto& f : stats) {
    if (f.is_rmin_set) throw DomainError("Rmin is not defined on permutations");
    key.scalars.push_back(perm_stat(p, f.stat));
  }
  return key;
}

DistributionKey key_of(const InversionSequence& s, const StatTuple& stats) {
  DistributionKey key;
  key.scalars.reserve(stats.size());
  for (const auto& f : stats) {
    if (f.is_rmin_set) {
      key.rmin_set = rmin_set(s);
    } else {
      key.scalars.push_back(invseq_stat(s, f.stat));
    }
  }
  return key;
}

namespace {

std::vector<std::vector<int>> prefixes(int n, Domain domain) {
  // Up to three leading positions, enough to balance a handful of workers.
  std::vector<std::vector<int>> out = {{}};
  const int depth = std::min(n, 3);
  for (int pos = 0; pos < depth; ++pos) {
    std::vector<std::vector<int>> next;
    for (const auto& p : out) {
      if (domain == Domain::kPermutations) {
        for (int v = 1; v <= n; ++v) {
          if (std::find(p.begin(), p.end(), v) != p.end()) continue;
          auto q = p;
          q.push_back(v);
          next.push_back(q);
        }
      } else {
        for (int v = 0; v <= pos; ++v) {
          auto q = p;
          q.push_back(v);
          next.push_back(q);
        }
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

Distribution joint_distribution(const StatTuple& stats, int n, Domain domain, int workers,
                                int bound) {
  if (stats.empty()) throw DomainError("empty statistic tuple");
  int sets = 0;
  for (const auto& f : stats) {
    if (f.domain() != domain) {
      throw DomainError("statistic " + f.name() + " is not defined on " +
                        std::string(domain_name(domain)));
    }
    sets += f.is_rmin_set;
  }
  if (sets > 1) throw DomainError("at most one Rmin slot per tuple");
  check_enumeration_size(n, bound);

  Distribution dist;
  dist.stats = stats;
  dist.n = n;
  dist.domain = domain;

  const auto parts = prefixes(n, domain);
  using Counts = std::map<DistributionKey, BigInt>;
  auto run = [&](std::size_t part, Counts& local) {
    if (domain == Domain::kPermutations) {
      for_each_permutation(
          n, [&](const Permutation& p) { ++local[key_of(p, stats)]; }, parts[part], bound);
    } else {
      for_each_inversion_sequence(
          n, [&](const InversionSequence& s) { ++local[key_of(s, stats)]; }, parts[part], bound);
    }
  };

  const std::size_t w = static_cast<std::size_t>(std::max(1, workers));
  std::vector<Counts> locals(std::min(w, parts.size()));
  if (locals.size() <= 1) {
    locals.resize(1);
    for (std::size_t i = 0; i < parts.size(); ++i) run(i, locals[0]);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t t = 0; t < locals.size(); ++t) {
      threads.emplace_back([&, t] {
        for (std::size_t i = t; i < parts.size(); i += locals.size()) run(i, locals[t]);
      });
    }
    for (auto& th : threads) th.join();
  }
  for (auto& local : locals) {
    for (auto& [key, c] : local) dist.counts[key] += c;
  }
  return dist;
}

}  // namespace eslab
