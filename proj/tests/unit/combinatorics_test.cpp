#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "eslab/combinatorics/enumerate.hpp"
#include "eslab/combinatorics/statistics.hpp"
#include "eslab/error.hpp"

namespace eslab {
namespace {

// Quantifier-style restatements of the definitions, used as oracles.
int oracle_lmax(const std::vector<int>& w) {
  int c = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < i; ++j) ok &= w[i] > w[j];
    c += ok;
  }
  return c;
}

int oracle_lmin(const std::vector<int>& w) {
  int c = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < i; ++j) ok &= w[i] < w[j];
    c += ok;
  }
  return c;
}

int oracle_rmax(const std::vector<int>& w) {
  int c = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    bool ok = true;
    for (std::size_t j = i + 1; j < w.size(); ++j) ok &= w[i] > w[j];
    c += ok;
  }
  return c;
}

int oracle_des(const std::vector<int>& w) {
  int c = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) c += w[i] > w[i + 1];
  return c;
}

std::vector<int> oracle_inverse(const std::vector<int>& w) {
  std::vector<int> inv(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (w[j] == static_cast<int>(i) + 1) inv[i] = static_cast<int>(j) + 1;
    }
  }
  return inv;
}

std::set<int> oracle_rmin_set(const std::vector<int>& s) {
  std::set<int> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    bool ok = true;
    for (std::size_t j = i + 1; j < s.size(); ++j) ok &= s[i] < s[j];
    if (ok) out.insert(s[i]);
  }
  return out;
}

TEST(Permutation, Validation) {
  EXPECT_THROW(Permutation({1, 1}), DomainError);
  EXPECT_THROW(Permutation({0, 1}), DomainError);
  EXPECT_THROW(Permutation({1, 3}), DomainError);
  EXPECT_EQ(Permutation({3, 1, 2}).at(1), 3);
  EXPECT_THROW(Permutation({3, 1, 2}).at(0), DomainError);
  EXPECT_THROW(perm_stats(Permutation()), DomainError);
}

TEST(PermStats, Identity) {
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
    auto s = perm_stats(Permutation(w));
    EXPECT_EQ(s.get(Stat::kDes), 0);
    EXPECT_EQ(s.get(Stat::kIdes), 0);
    EXPECT_EQ(s.get(Stat::kLmax), n);
    EXPECT_EQ(s.get(Stat::kLmin), 1);
    EXPECT_EQ(s.get(Stat::kRmax), 1);
  }
}

TEST(PermStats, Decreasing) {
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = n - i;
    auto s = perm_stats(Permutation(w));
    EXPECT_EQ(s.get(Stat::kDes), n - 1);
    EXPECT_EQ(s.get(Stat::kLmax), 1);
    EXPECT_EQ(s.get(Stat::kLmin), n);
    EXPECT_EQ(s.get(Stat::kRmax), n);
  }
}

TEST(PermStats, ThreeOneTwo) {
  const std::vector<int> w = {3, 1, 2};
  // Oracle values, then frozen.
  ASSERT_EQ(oracle_des(w), 1);
  ASSERT_EQ(oracle_des(oracle_inverse(w)), 1);
  ASSERT_EQ(oracle_lmax(w), 1);
  ASSERT_EQ(oracle_lmin(w), 2);
  ASSERT_EQ(oracle_rmax(w), 2);
  auto s = perm_stats(Permutation(w));
  EXPECT_EQ(s.get(Stat::kDes), 1);
  EXPECT_EQ(s.get(Stat::kIdes), 1);
  EXPECT_EQ(s.get(Stat::kIasc), 1);
  EXPECT_EQ(s.get(Stat::kLmax), 1);
  EXPECT_EQ(s.get(Stat::kLmin), 2);
  EXPECT_EQ(s.get(Stat::kRmax), 2);
}

TEST(PermStats, MatchesOraclesOnAllOfS6) {
  for_each_permutation(6, [](const Permutation& p) {
    const auto& w = p.values();
    auto s = perm_stats(p);
    ASSERT_EQ(s.get(Stat::kDes), oracle_des(w));
    ASSERT_EQ(s.get(Stat::kIdes), oracle_des(oracle_inverse(w)));
    ASSERT_EQ(s.get(Stat::kLmax), oracle_lmax(w));
    ASSERT_EQ(s.get(Stat::kLmin), oracle_lmin(w));
    ASSERT_EQ(s.get(Stat::kRmax), oracle_rmax(w));
  });
}

TEST(Transform, Examples) {
  const Permutation p({3, 1, 2});
  EXPECT_EQ(perm_transform(p, Transform::kReverse), Permutation({2, 1, 3}));
  EXPECT_EQ(perm_transform(p, Transform::kComplement), Permutation({1, 3, 2}));
  EXPECT_EQ(perm_transform(p, Transform::kInverse), Permutation({2, 3, 1}));
}

void check_transfer_identities(const Permutation& p) {
  const int n = p.size();
  const auto inv = perm_transform(p, Transform::kInverse);
  const auto rev = perm_transform(p, Transform::kReverse);
  const auto cpl = perm_transform(p, Transform::kComplement);
  const auto rc = perm_transform(cpl, Transform::kReverse);
  ASSERT_EQ(perm_transform(inv, Transform::kInverse), p);
  ASSERT_EQ(perm_transform(rev, Transform::kReverse), p);
  ASSERT_EQ(perm_transform(cpl, Transform::kComplement), p);
  const auto s = perm_stats(p);
  ASSERT_EQ(s.get(Stat::kIdes), perm_stat(inv, Stat::kDes));
  ASSERT_EQ(perm_stat(rev, Stat::kDes), n - 1 - s.get(Stat::kDes));
  ASSERT_EQ(s.get(Stat::kLmax), perm_stat(cpl, Stat::kLmin));
  ASSERT_EQ(s.get(Stat::kRmax), perm_stat(rev, Stat::kLmax));
  ASSERT_EQ(s.get(Stat::kIasc), n - 1 - s.get(Stat::kIdes));
  // (des,ides,lmin,rmax)(p) = (des,ides,rmax,lmin)(reverse(complement(p)))
  const auto t = perm_stats(rc);
  ASSERT_EQ(s.get(Stat::kDes), t.get(Stat::kDes));
  ASSERT_EQ(s.get(Stat::kIdes), t.get(Stat::kIdes));
  ASSERT_EQ(s.get(Stat::kLmin), t.get(Stat::kRmax));
  ASSERT_EQ(s.get(Stat::kRmax), t.get(Stat::kLmin));
  // (des,ides,lmin,rmax)(p) = (ides,des,lmin,rmax)(inverse(p))
  const auto i = perm_stats(inv);
  ASSERT_EQ(s.get(Stat::kDes), i.get(Stat::kIdes));
  ASSERT_EQ(s.get(Stat::kIdes), i.get(Stat::kDes));
  ASSERT_EQ(s.get(Stat::kLmin), i.get(Stat::kLmin));
  ASSERT_EQ(s.get(Stat::kRmax), i.get(Stat::kRmax));
}

TEST(Transform, TransferIdentitiesExhaustive) {
  for (int n = 1; n <= 7; ++n) for_each_permutation(n, check_transfer_identities);
}

TEST(Transform, TransferIdentitiesRandomLarge) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 8 + trial % 5;
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(w.begin(), w.end(), rng);
    check_transfer_identities(Permutation(w));
  }
}

TEST(InversionSequence, Validation) {
  EXPECT_THROW(InversionSequence({1}), DomainError);
  EXPECT_THROW(InversionSequence({0, 2}), DomainError);
  EXPECT_THROW(InversionSequence({0, -1}), DomainError);
  EXPECT_THROW(invseq_stats(InversionSequence()), DomainError);
  EXPECT_EQ(InversionSequence({0, 1, 1}).at(3), 1);
}

TEST(InvseqStats, CzeroEalzExample) {
  auto s = invseq_stats(InversionSequence({0, 0, 2, 1, 3, 2}));
  EXPECT_EQ(s.get(Stat::kCzero), 2);
  EXPECT_EQ(s.get(Stat::kEalz), 2);
}

TEST(InvseqStats, CmaxEalmExample) {
  auto s = invseq_stats(InversionSequence({0, 1, 2, 3, 2, 4}));
  EXPECT_EQ(s.get(Stat::kCmax), 4);
  EXPECT_EQ(s.get(Stat::kEalm), 2);
}

TEST(InvseqStats, RminSetExample) {
  auto s = invseq_stats(InversionSequence({0, 0, 2, 1, 4, 3}));
  EXPECT_EQ(*s.rmin_set(), (std::vector<int>{0, 1, 3}));
  EXPECT_EQ(s.get(Stat::kLast), 3);
}

TEST(InvseqStats, EulerStirlingExample) {
  const std::vector<int> w = {0, 0, 2, 1, 3, 2};
  // Oracle: each definition evaluated directly.
  int asc = 0, zero = 0, mx = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) asc += w[i] < w[i + 1];
  for (std::size_t i = 0; i < w.size(); ++i) {
    zero += w[i] == 0;
    mx += w[i] == static_cast<int>(i);
  }
  std::set<int> nonzero(w.begin(), w.end());
  nonzero.erase(0);
  ASSERT_EQ(asc, 2);
  ASSERT_EQ(static_cast<int>(nonzero.size()), 3);
  ASSERT_EQ(zero, 2);
  ASSERT_EQ(mx, 2);
  ASSERT_EQ(oracle_rmin_set(w).size(), 3u);
  auto s = invseq_stats(InversionSequence(w));
  EXPECT_EQ(s.get(Stat::kAsc), 2);
  EXPECT_EQ(s.get(Stat::kDist), 3);
  EXPECT_EQ(s.get(Stat::kZero), 2);
  EXPECT_EQ(s.get(Stat::kMax), 2);
  EXPECT_EQ(s.get(Stat::kRmin), 3);
}

TEST(InvseqStats, Conventions) {
  auto zeros = invseq_stats(InversionSequence({0, 0, 0, 0}));
  EXPECT_EQ(zeros.get(Stat::kCzero), 4);
  EXPECT_EQ(zeros.get(Stat::kEalz), 0);
  auto staircase = invseq_stats(InversionSequence({0, 1, 2, 3}));
  EXPECT_EQ(staircase.get(Stat::kCmax), 4);
  EXPECT_EQ(staircase.get(Stat::kEalm), 0);
  EXPECT_EQ(invseq_stat(InversionSequence({0, 1, 0}), Stat::kEalz), 0);
}

TEST(Complement, Examples) {
  EXPECT_EQ(invseq_complement(InversionSequence({0, 0, 0})), InversionSequence({0, 1, 2}));
  EXPECT_EQ(invseq_complement(InversionSequence({0, 1, 2})), InversionSequence({0, 0, 0}));
  EXPECT_EQ(invseq_complement(InversionSequence({0, 0, 2, 1})), InversionSequence({0, 1, 0, 2}));
}

TEST(InvseqStats, InvariantsExhaustive) {
  for (int n = 1; n <= 7; ++n) {
    for_each_inversion_sequence(n, [n](const InversionSequence& seq) {
      const auto s = invseq_stats(seq);
      const auto c = invseq_complement(seq);
      ASSERT_EQ(invseq_complement(c), seq);
      ASSERT_EQ(s.get(Stat::kRep), n - 1 - s.get(Stat::kDist));
      ASSERT_EQ(s.get(Stat::kLast), s.rmin_set()->back());
      ASSERT_EQ(invseq_stat(c, Stat::kZero), s.get(Stat::kMax));
      ASSERT_EQ(invseq_stat(c, Stat::kMax), s.get(Stat::kZero));
      ASSERT_GE(s.get(Stat::kCzero), 1);
      ASSERT_GE(s.get(Stat::kCmax), 1);
      if (s.get(Stat::kCmax) < n) ASSERT_LT(s.get(Stat::kEalm), s.get(Stat::kCmax));
      const auto oracle = oracle_rmin_set(seq.entries());
      ASSERT_EQ(std::vector<int>(oracle.begin(), oracle.end()), *s.rmin_set());
      ASSERT_EQ(s.get(Stat::kRmin), static_cast<int>(oracle.size()));
    });
  }
}

TEST(StatNames, RoundTrip) {
  for (std::size_t i = 0; i < kStatCount; ++i) {
    EXPECT_EQ(parse_stat(stat_name(static_cast<Stat>(i))), static_cast<Stat>(i));
  }
  EXPECT_THROW(parse_stat("bogus"), DomainError);
  EXPECT_EQ(stat_domain(Stat::kRmax), Domain::kPermutations);
  EXPECT_EQ(stat_domain(Stat::kAsc), Domain::kInversionSequences);
  EXPECT_THROW(perm_stat(Permutation({1}), Stat::kAsc), DomainError);
  EXPECT_THROW(invseq_stat(InversionSequence({0}), Stat::kDes), DomainError);
}

TEST(Enumerate, Counts) {
  EXPECT_EQ(enumerate_perms(1).size(), 1u);
  EXPECT_EQ(enumerate_perms(3).size(), 6u);
  EXPECT_EQ(enumerate_perms(8).size(), 40320u);
  EXPECT_EQ(enumerate_invseqs(3).size(), 6u);
  EXPECT_EQ(enumerate_invseqs(5).size(), 120u);
  long factorial = 1;
  for (int n = 1; n <= 8; ++n) {
    factorial *= n;
    long perms = 0, seqs = 0;
    for_each_permutation(n, [&](const Permutation&) { ++perms; });
    for_each_inversion_sequence(n, [&](const InversionSequence&) { ++seqs; });
    EXPECT_EQ(perms, factorial);
    EXPECT_EQ(seqs, factorial);
  }
}

TEST(Enumerate, InvseqsOfLengthTwo) {
  EXPECT_EQ(enumerate_invseqs(2),
            (std::vector<InversionSequence>{InversionSequence({0, 0}), InversionSequence({0, 1})}));
}

TEST(Enumerate, LexicographicAndDistinct) {
  auto perms = enumerate_perms(5);
  EXPECT_TRUE(std::is_sorted(perms.begin(), perms.end()));
  EXPECT_EQ(std::adjacent_find(perms.begin(), perms.end()), perms.end());
  auto seqs = enumerate_invseqs(5);
  EXPECT_TRUE(std::is_sorted(seqs.begin(), seqs.end()));
  EXPECT_EQ(std::adjacent_find(seqs.begin(), seqs.end()), seqs.end());
}

TEST(Enumerate, PrefixPartitionCoversDomain) {
  std::vector<Permutation> joined;
  for (int first = 1; first <= 5; ++first) {
    for_each_permutation(5, [&](const Permutation& p) { joined.push_back(p); }, {first});
  }
  EXPECT_EQ(joined, enumerate_perms(5));
  std::vector<InversionSequence> seqs;
  for (int second = 0; second <= 1; ++second) {
    for_each_inversion_sequence(5, [&](const InversionSequence& s) { seqs.push_back(s); },
                                {0, second});
  }
  EXPECT_EQ(seqs, enumerate_invseqs(5));
}

TEST(Enumerate, Bounds) {
  EXPECT_THROW(enumerate_perms(0), BoundError);
  EXPECT_THROW(enumerate_perms(11), BoundError);
  EXPECT_THROW(enumerate_invseqs(11), BoundError);
  EXPECT_THROW(enumerate_perms(12, 11), BoundError);
  EXPECT_THROW(for_each_permutation(3, [](const Permutation&) {}, {4}), DomainError);
  EXPECT_THROW(for_each_inversion_sequence(3, [](const InversionSequence&) {}, {1}), DomainError);
}

}  // namespace
}  // namespace eslab
