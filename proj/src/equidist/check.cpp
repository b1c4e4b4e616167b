#include "eslab/equidist/check.hpp"

#include <chrono>

#include "eslab/error.hpp"

namespace eslab {

std::string Witness::get(const std::string& name) const {
  for (const auto& [k, v] : fields) {
    if (k == name) return v;
  }
  return {};
}

std::string Witness::summary() const {
  std::string out;
  for (const auto& [k, v] : fields) {
    if (!out.empty()) out += ", ";
    out += k + "=" + v;
  }
  return out;
}

std::optional<Witness> compare_distributions(const Distribution& a, const Distribution& b) {
  auto ia = a.counts.begin();
  auto ib = b.counts.begin();
  while (ia != a.counts.end() || ib != b.counts.end()) {
    const DistributionKey* key;
    BigInt ca = 0, cb = 0;
    if (ib == b.counts.end() || (ia != a.counts.end() && ia->first < ib->first)) {
      key = &ia->first;
      ca = ia->second;
      ++ia;
    } else if (ia == a.counts.end() || ib->first < ia->first) {
      key = &ib->first;
      cb = ib->second;
      ++ib;
    } else {
      key = &ia->first;
      ca = ia->second;
      cb = ib->second;
      ++ia;
      ++ib;
    }
    if (ca != cb) {
      Witness w;
      w.add("n", std::to_string(a.n));
      w.add("tuple", key->to_string(a.stats));
      w.add("count_a", ca.get_str());
      w.add("count_b", cb.get_str());
      return w;
    }
  }
  return std::nullopt;
}

CheckReport check_equidistribution(const std::string& claim, const StatTuple& stats_a,
                                   Domain domain_a, const StatTuple& stats_b, Domain domain_b,
                                   int n_min, int n_max, int workers, int bound) {
  if (stats_a.size() != stats_b.size()) {
    throw DomainError("statistic tuples " + stat_tuple_name(stats_a) + " and " +
                      stat_tuple_name(stats_b) + " have different arity");
  }
  for (std::size_t i = 0; i < stats_a.size(); ++i) {
    if (stats_a[i].is_rmin_set != stats_b[i].is_rmin_set) {
      throw DomainError("Rmin slots of " + stat_tuple_name(stats_a) + " and " +
                        stat_tuple_name(stats_b) + " do not line up");
    }
  }
  const auto start = std::chrono::steady_clock::now();
  CheckReport report;
  report.claim = claim;
  report.n_min = n_min;
  report.n_max = n_max;
  report.detail = stat_tuple_name(stats_a) + " on " + std::string(domain_name(domain_a)) +
                  " vs " + stat_tuple_name(stats_b) + " on " + std::string(domain_name(domain_b));
  for (int n = n_min; n <= n_max; ++n) {
    const auto a = joint_distribution(stats_a, n, domain_a, workers, bound);
    const auto b = joint_distribution(stats_b, n, domain_b, workers, bound);
    if (auto w = compare_distributions(a, b)) {
      report.passed = false;
      report.witness = std::move(w);
      break;
    }
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace eslab
