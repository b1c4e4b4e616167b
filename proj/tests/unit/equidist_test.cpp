#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "eslab/combinatorics/enumerate.hpp"
#include "eslab/equidist/claims.hpp"
#include "eslab/equidist/tbij.hpp"
#include "eslab/error.hpp"

namespace eslab {
namespace {

std::map<int, long> as_map(const Distribution& d) {
  std::map<int, long> out;
  for (const auto& [k, c] : d.counts) out[k.scalars.at(0)] = c.get_si();
  return out;
}

// Oracle: walk S_n with std::next_permutation and count by hand.
std::map<int, long> oracle_perm_histogram(int n, int (*stat)(const std::vector<int>&)) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  std::map<int, long> out;
  do {
    ++out[stat(w)];
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

int oracle_des(const std::vector<int>& w) {
  int d = 0;
  for (std::size_t i = 1; i < w.size(); ++i) d += w[i - 1] > w[i];
  return d;
}

int oracle_lmax(const std::vector<int>& w) {
  int c = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    c += std::all_of(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i),
                     [&](int x) { return x < w[i]; });
  }
  return c;
}

TEST(JointDistribution, DescentsOnS3) {
  const auto oracle = oracle_perm_histogram(3, oracle_des);
  ASSERT_EQ(oracle, (std::map<int, long>{{0, 1}, {1, 4}, {2, 1}}));
  EXPECT_EQ(as_map(joint_distribution(parse_stat_tuple("des"), 3, Domain::kPermutations)), oracle);
}

TEST(JointDistribution, LmaxOnS3) {
  const auto oracle = oracle_perm_histogram(3, oracle_lmax);
  ASSERT_EQ(oracle, (std::map<int, long>{{1, 2}, {2, 3}, {3, 1}}));
  EXPECT_EQ(as_map(joint_distribution(parse_stat_tuple("lmax"), 3, Domain::kPermutations)), oracle);
}

TEST(JointDistribution, ZeroOnI2) {
  EXPECT_EQ(as_map(joint_distribution(parse_stat_tuple("zero"), 2, Domain::kInversionSequences)),
            (std::map<int, long>{{1, 1}, {2, 1}}));
}

TEST(JointDistribution, TotalsAreFactorials) {
  long f = 1;
  for (int n = 1; n <= 7; ++n) {
    f *= n;
    EXPECT_EQ(joint_distribution(parse_stat_tuple("des,ides,lmax"), n, Domain::kPermutations).total(), f);
    EXPECT_EQ(joint_distribution(parse_stat_tuple("asc,Rmin"), n, Domain::kInversionSequences).total(), f);
  }
}

TEST(JointDistribution, WorkerSplitDoesNotChangeResult) {
  for (auto domain : {Domain::kPermutations, Domain::kInversionSequences}) {
    const auto stats = domain == Domain::kPermutations ? parse_stat_tuple("des,ides,rmax")
                                                       : parse_stat_tuple("asc,dist,Rmin");
    const auto one = joint_distribution(stats, 6, domain, 1);
    const auto three = joint_distribution(stats, 6, domain, 3);
    EXPECT_EQ(one.counts, three.counts);
  }
}

TEST(JointDistribution, Errors) {
  EXPECT_THROW(joint_distribution(parse_stat_tuple("asc"), 3, Domain::kPermutations), DomainError);
  EXPECT_THROW(joint_distribution(parse_stat_tuple("des"), 3, Domain::kInversionSequences), DomainError);
  EXPECT_THROW(joint_distribution(parse_stat_tuple("des"), 0, Domain::kPermutations), BoundError);
  EXPECT_THROW(joint_distribution(parse_stat_tuple("des"), 11, Domain::kPermutations), BoundError);
  EXPECT_THROW(parse_stat_tuple("des,,ides"), DomainError);
  EXPECT_THROW(parse_stat_tuple("nope"), DomainError);
}

TEST(JointDistribution, RminKeyFormatting) {
  const auto stats = parse_stat_tuple("asc,Rmin,zero");
  const InversionSequence s({0, 0, 2, 1, 4, 3});
  EXPECT_EQ(key_of(s, stats).to_string(stats), "(2,{0,1,3},2)");
}

TEST(CheckEquidistribution, RmaxLminQuadrupleOnS4) {
  auto r = check_equidistribution("t", parse_stat_tuple("des,ides,rmax,lmin"), Domain::kPermutations,
                                  parse_stat_tuple("des,ides,lmin,rmax"), Domain::kPermutations, 4, 4);
  EXPECT_TRUE(r.passed);
  EXPECT_FALSE(r.witness);
}

TEST(CheckEquidistribution, CrossDomainQuintupleSmall) {
  auto r = run_claim(find_claim("bv"), 6);
  EXPECT_TRUE(r.passed) << r.witness->summary();
}

TEST(CheckEquidistribution, DesVsLmaxFailsWithWitness) {
  auto r = check_equidistribution("t", parse_stat_tuple("des"), Domain::kPermutations,
                                  parse_stat_tuple("lmax"), Domain::kPermutations, 3, 3);
  ASSERT_FALSE(r.passed);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->get("n"), "3");
  EXPECT_EQ(r.witness->get("tuple"), "(0)");
  EXPECT_EQ(r.witness->get("count_a"), "1");
  EXPECT_EQ(r.witness->get("count_b"), "0");
}

TEST(CheckEquidistribution, ArityAndSlotMismatch) {
  EXPECT_THROW(check_equidistribution("t", parse_stat_tuple("des"), Domain::kPermutations,
                                      parse_stat_tuple("des,ides"), Domain::kPermutations, 1, 2),
               DomainError);
  EXPECT_THROW(check_equidistribution("t", parse_stat_tuple("asc,Rmin"), Domain::kInversionSequences,
                                      parse_stat_tuple("Rmin,asc"), Domain::kInversionSequences, 1, 2),
               DomainError);
}

TEST(Claims, RegistrySortedAndComplete) {
  const auto& claims = equidist_claims();
  EXPECT_TRUE(std::is_sorted(claims.begin(), claims.end(),
                             [](const auto& a, const auto& b) { return a.id < b.id; }));
  for (const char* id : {"bv", "thm1_a", "thm1_b", "thm1_c", "thm2_a", "thm2_b", "thm2_c", "thm5",
                         "tbij", "remark2"}) {
    EXPECT_NO_THROW(find_claim(id)) << id;
  }
  EXPECT_THROW(find_claim("bogus"), DomainError);
}

TEST(Claims, AllHoldForSmallN) {
  for (const auto& c : equidist_claims()) {
    auto r = run_claim(c, 6);
    EXPECT_TRUE(r.passed) << c.id << ": " << (r.witness ? r.witness->summary() : "");
  }
}

TEST(Baselines, KnownRows) {
  EXPECT_EQ(eulerian_numbers(4), (std::vector<BigInt>{1, 11, 11, 1}));
  EXPECT_EQ(rising_factorial_coefficients(3), (std::vector<BigInt>{0, 2, 3, 1}));
  EXPECT_TRUE(check_baselines(7).passed);
}

TEST(ConjectureOP2, SmallCases) {
  EXPECT_TRUE(check_conjecture_op2(1).passed);
  EXPECT_TRUE(check_conjecture_op2(2).passed);
  EXPECT_TRUE(check_conjecture_op2(7).passed);
}

TEST(Tbij, DistinctExamples) {
  EXPECT_EQ(tbij_extend_distinct(InversionSequence({0}), 1), InversionSequence({0, 1}));
  EXPECT_EQ(tbij_extend_distinct(InversionSequence({0, 0}), 1), InversionSequence({0, 0, 1}));
  EXPECT_EQ(tbij_extend_distinct(InversionSequence({0, 0, 1}), 2), InversionSequence({0, 0, 1, 2}));
  EXPECT_THROW(tbij_extend_distinct(InversionSequence({0, 1}), 1), DomainError);
  EXPECT_THROW(tbij_extend_distinct(InversionSequence({0, 0}), 3), DomainError);
}

TEST(Tbij, RepeatedExamples) {
  EXPECT_EQ(tbij_extend_repeated(InversionSequence({0, 1}), 1), InversionSequence({0, 1, 1}));
  EXPECT_EQ(tbij_extend_repeated(InversionSequence({0, 0, 2}), 1), InversionSequence({0, 1, 0, 1}));
  EXPECT_THROW(tbij_extend_repeated(InversionSequence({0, 0}), 2), DomainError);
  EXPECT_THROW(tbij_extend_repeated(InversionSequence({0, 0, 1}), 0), DomainError);
}

TEST(Tbij, DistinctMapIsBijectiveThroughSeven) {
  // Only the distinct map: the repeated map is replaced by a lookup of the
  // remaining targets so the verifier exercises the distinct half alone.
  for (int n = 2; n <= 7; ++n) {
    std::map<InversionSequence, int> hits;
    for_each_inversion_sequence(n - 1, [&](const InversionSequence& s) {
      for (int j = s.entries().back() + 1; j <= n - 1; ++j) ++hits[tbij_extend_distinct(s, j)];
    });
    long targets = 0;
    for_each_inversion_sequence(n, [&](const InversionSequence& t) {
      const auto& e = t.entries();
      if (std::count(e.begin(), e.end(), e.back()) == 1) {
        ++targets;
        ASSERT_EQ(hits[t], 1) << t.to_string();
      }
    });
    EXPECT_EQ(static_cast<long>(hits.size()), targets);
  }
}

TEST(Tbij, RoundtripSmall) {
  EXPECT_TRUE(tbij_roundtrip_verify(1).passed);
  auto r = tbij_roundtrip_verify(4);
  EXPECT_TRUE(r.passed) << (r.witness ? r.witness->summary() : "");
}

TEST(Tbij, RepeatedMapBreaksAtLengthFive) {
  // As described, the repeated-entry step loses injectivity once j already
  // occurs in s; the first failure appears for n = 5.
  EXPECT_EQ(tbij_extend_repeated(InversionSequence({0, 0, 1, 2}), 1),
            InversionSequence({0, 0, 1, 1, 1}));
  EXPECT_EQ(tbij_extend_repeated(InversionSequence({0, 0, 1, 1}), 1),
            InversionSequence({0, 0, 1, 1, 1}));
  auto r = tbij_roundtrip_verify(5);
  ASSERT_FALSE(r.passed);
  EXPECT_EQ(r.witness->get("n"), "5");
}

TEST(Tbij, SyntheticCollisionReportsBothPreimages) {
  TbijMaps maps;
  maps.distinct = [](const InversionSequence& s, int j) {
    auto e = s.entries();
    e.push_back(j);
    std::fill(e.begin() + 1, e.end() - 1, 0);
    return InversionSequence(e);
  };
  auto r = tbij_roundtrip_verify(3, maps);
  ASSERT_FALSE(r.passed);
  ASSERT_TRUE(r.witness);
  EXPECT_FALSE(r.witness->get("preimage_a").empty());
  EXPECT_FALSE(r.witness->get("preimage_b").empty());
  EXPECT_NE(r.witness->get("preimage_a"), r.witness->get("preimage_b"));
}

}  // namespace
}  // namespace eslab
