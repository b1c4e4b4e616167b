#include "eslab/equidist/claims.hpp"

#include <algorithm>
#include <chrono>

#include "eslab/error.hpp"

namespace eslab {

namespace {

EquidistClaim make(std::string id, std::string description, const char* a, Domain da,
                   const char* b, Domain db, int n_max) {
  return {std::move(id), std::move(description), parse_stat_tuple(a), da, parse_stat_tuple(b), db,
          n_max};
}

std::vector<EquidistClaim> build_registry() {
  constexpr auto P = Domain::kPermutations;
  constexpr auto I = Domain::kInversionSequences;
  std::vector<EquidistClaim> claims = {
      make("bv", "Euler-Stirling quintuple transported to inversion sequences",
           "des,ides,lmin,lmax,rmax", P, "asc,dist,max,zero,rmin", I, 7),
      make("thm1_a", "quadruple symmetry (rmax,lmin) swap", "des,ides,rmax,lmin", P,
           "des,ides,lmin,rmax", P, 8),
      make("thm1_b", "quadruple symmetry with des and ides exchanged", "des,ides,rmax,lmin", P,
           "ides,des,rmax,lmin", P, 8),
      make("thm1_c", "quadruple symmetry, second and third forms", "des,ides,lmin,rmax", P,
           "ides,des,rmax,lmin", P, 8),
      make("thm2_a", "Euler-Stirling triple with lmin and des/ides exchanged", "des,ides,rmax", P,
           "ides,des,lmin", P, 8),
      make("thm2_b", "Euler-Stirling triple with lmin", "des,ides,rmax", P, "des,ides,lmin", P, 8),
      make("thm2_c", "Euler-Stirling triple with des/ides exchanged", "des,ides,rmax", P,
           "ides,des,rmax", P, 8),
      make("thm5", "des and ides share (lmax,lmin,rmax)", "des,lmax,lmin,rmax", P,
           "ides,lmax,lmin,rmax", P, 8),
      make("tbij", "asc and dist share (zero,max,Rmin)", "asc,zero,max,Rmin", I,
           "dist,zero,max,Rmin", I, 8),
      make("remark2", "(des,iasc,rmax,lmax) against (iasc,des,lmax,lmin)", "des,iasc,rmax,lmax", P,
           "iasc,des,lmax,lmin", P, 8),
  };
  std::sort(claims.begin(), claims.end(),
            [](const auto& x, const auto& y) { return x.id < y.id; });
  return claims;
}

}  // namespace

const std::vector<EquidistClaim>& equidist_claims() {
  static const std::vector<EquidistClaim> registry = build_registry();
  return registry;
}

const EquidistClaim& find_claim(const std::string& id) {
  for (const auto& c : equidist_claims()) {
    if (c.id == id) return c;
  }
  throw DomainError("unknown claim '" + id + "'");
}

CheckReport run_claim(const EquidistClaim& claim, int n_max, int workers, int bound) {
  return check_equidistribution(claim.id, claim.stats_a, claim.domain_a, claim.stats_b,
                                claim.domain_b, 1, n_max, workers, bound);
}

std::vector<BigInt> eulerian_numbers(int n) {
  if (n < 1) throw DomainError("Eulerian numbers need n >= 1");
  std::vector<BigInt> row = {1};
  for (int m = 2; m <= n; ++m) {
    std::vector<BigInt> next(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
      BigInt v = 0;
      if (k < m - 1) v += (k + 1) * row[static_cast<std::size_t>(k)];
      if (k >= 1) v += (m - k) * row[static_cast<std::size_t>(k - 1)];
      next[static_cast<std::size_t>(k)] = v;
    }
    row = std::move(next);
  }
  return row;
}

std::vector<BigInt> rising_factorial_coefficients(int n) {
  if (n < 1) throw DomainError("rising factorial needs n >= 1");
  std::vector<BigInt> poly = {0, 1};  // x
  for (int i = 1; i < n; ++i) {
    std::vector<BigInt> next(poly.size() + 1);
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d + 1] += poly[d];
      next[d] += i * poly[d];
    }
    poly = std::move(next);
  }
  return poly;
}

CheckReport check_baselines(int n_max, int bound) {
  const auto start = std::chrono::steady_clock::now();
  CheckReport report;
  report.claim = "baselines";
  report.n_max = n_max;
  report.detail = "des vs Eulerian numbers, lmax vs rising factorial";
  for (int n = 1; n <= n_max && report.passed; ++n) {
    const auto des = joint_distribution({StatField::scalar(Stat::kDes)}, n, Domain::kPermutations, 1, bound);
    const auto lmax = joint_distribution({StatField::scalar(Stat::kLmax)}, n, Domain::kPermutations, 1, bound);
    const auto eul = eulerian_numbers(n);
    const auto stir = rising_factorial_coefficients(n);
    auto compare = [&](const Distribution& d, const std::vector<BigInt>& expect,
                       const std::string& what) {
      for (std::size_t k = 0; k < expect.size() && report.passed; ++k) {
        const BigInt got = d.count({{static_cast<int>(k)}, {}});
        if (got != expect[k]) {
          Witness w;
          w.add("n", std::to_string(n));
          w.add("tuple", what + "=" + std::to_string(k));
          w.add("count_a", got.get_str());
          w.add("count_b", expect[k].get_str());
          report.passed = false;
          report.witness = std::move(w);
        }
      }
      if (report.passed && d.total() != [&] {
            BigInt s = 0;
            for (const auto& c : expect) s += c;
            return s;
          }()) {
        Witness w;
        w.add("n", std::to_string(n));
        w.add("tuple", what + " total");
        w.add("count_a", d.total().get_str());
        w.add("count_b", "sum of the expected row");
        report.passed = false;
        report.witness = std::move(w);
      }
    };
    compare(des, eul, "des");
    compare(lmax, stir, "lmax");
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

CheckReport check_conjecture_op2(int n_max, int workers, int bound) {
  constexpr auto I = Domain::kInversionSequences;
  return check_equidistribution("op2", parse_stat_tuple("asc,rep,zero,max,rmin"), I,
                                parse_stat_tuple("asc,rep,zero,rmin,max"), I, 1, n_max, workers,
                                bound);
}

}  // namespace eslab
