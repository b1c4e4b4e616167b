#include "eslab/equidist/tbij.hpp"

#include <chrono>
#include <map>

#include "eslab/combinatorics/enumerate.hpp"
#include "eslab/combinatorics/statistics.hpp"
#include "eslab/error.hpp"

namespace eslab {

namespace {

std::string pair_string(const InversionSequence& s, int j) {
  return "((" + s.to_string() + ")," + std::to_string(j) + ")";
}

}  // namespace

InversionSequence tbij_extend_distinct(const InversionSequence& seq, int j) {
  const auto& s = seq.entries();
  const int len = seq.size();
  if (len == 0) throw DomainError("extension needs a non-empty sequence");
  if (j <= s.back() || j > len) {
    throw DomainError("distinct extension needs last(s) < j <= |s|, got " + pair_string(seq, j));
  }
  const int n = len + 1;
  // Hole marked by -1 at 0-based index j.
  std::vector<int> t(s.begin(), s.begin() + j);
  t.push_back(-1);
  t.insert(t.end(), s.begin() + j, s.end());
  for (int& y : t) {
    if (y >= j) ++y;
  }
  std::vector<int> below;  // 0-based indices after position j+1 holding entries < j
  for (int p = j + 1; p < n; ++p) {
    if (t[static_cast<std::size_t>(p)] >= 0 && t[static_cast<std::size_t>(p)] < j) below.push_back(p);
  }
  if (!below.empty()) {
    t[static_cast<std::size_t>(j)] = t[static_cast<std::size_t>(below.front())];
    for (std::size_t i = 0; i + 1 < below.size(); ++i) {
      t[static_cast<std::size_t>(below[i])] = t[static_cast<std::size_t>(below[i + 1])];
    }
    t[static_cast<std::size_t>(below.back())] = -1;
  }
  if (t.back() != -1) throw DomainError("hole did not reach the end for " + pair_string(seq, j));
  t.back() = j;
  return InversionSequence(std::move(t));
}

InversionSequence tbij_extend_repeated(const InversionSequence& seq, int j) {
  const auto& s = seq.entries();
  const int len = seq.size();
  if (len == 0) throw DomainError("extension needs a non-empty sequence");
  if (j < 1 || j > len - 1 || s.back() < j) {
    throw DomainError("repeated extension needs 1 <= j <= |s|-1 and last(s) >= j, got " +
                      pair_string(seq, j));
  }
  std::vector<int> t(s);
  const int last = s.back();
  if (last == j) {
    t.push_back(j);
    return InversionSequence(std::move(t));
  }
  int ell = 1;
  while (s[static_cast<std::size_t>(ell - 1)] != last) ++ell;
  const int m = ell - 1 - last;
  int k = 1;
  while (k < len && s[static_cast<std::size_t>(len - 1 - k)] == last) ++k;
  const int p = j + m + 1;  // 1-based insertion position
  if (p < 1 || p > len + 1) throw DomainError("insertion position out of range for " + pair_string(seq, j));

  std::vector<int> out(s.begin(), s.begin() + (p - 1));
  out.insert(out.end(), static_cast<std::size_t>(k), j);
  for (auto it = s.begin() + (p - 1); it != s.end(); ++it) out.push_back(*it >= j + m ? *it + k : *it);
  for (int i = 0; i < k - 1; ++i) {
    if (out.back() != last + k) {
      throw DomainError("terminal run missing after shifting " + pair_string(seq, j));
    }
    out.pop_back();
  }
  for (int& y : out) {
    if (y == last + k) y = j;
  }
  return InversionSequence(std::move(out));
}

CheckReport tbij_roundtrip_verify(int n_max, const TbijMaps& maps) {
  const auto start = std::chrono::steady_clock::now();
  CheckReport report;
  report.claim = "tbij_roundtrip";
  report.n_min = 1;
  report.n_max = n_max;
  check_enumeration_size(std::max(n_max, 1));

  auto fail = [&](Witness w) {
    report.passed = false;
    report.witness = std::move(w);
  };

  for (int n = 2; n <= n_max && report.passed; ++n) {
    // image -> (map name, preimage, j)
    std::map<InversionSequence, std::pair<std::string, std::string>> images;
    auto record = [&](const std::string& map, const InversionSequence& s, int j,
                      const InversionSequence& image) -> bool {
      auto [it, inserted] = images.emplace(image, std::make_pair(map, pair_string(s, j)));
      if (inserted) return true;
      Witness w;
      w.add("n", std::to_string(n));
      w.add("kind", it->second.first == map ? "collision" : "overlap");
      w.add("image", "(" + image.to_string() + ")");
      w.add("preimage_a", it->second.first + " " + it->second.second);
      w.add("preimage_b", map + " " + pair_string(s, j));
      fail(std::move(w));
      return false;
    };
    auto stat_failure = [&](const std::string& map, const InversionSequence& s, int j,
                            const InversionSequence& image, const std::string& what) {
      Witness w;
      w.add("n", std::to_string(n));
      w.add("kind", "statistics");
      w.add("map", map);
      w.add("preimage", pair_string(s, j));
      w.add("image", "(" + image.to_string() + ")");
      w.add("violation", what);
      fail(std::move(w));
    };

    for_each_inversion_sequence(n - 1, [&](const InversionSequence& s) {
      if (!report.passed) return;
      const auto before = invseq_stats(s);
      const auto& rmin_before = *before.rmin_set();
      const int last = s.entries().back();

      // Appending 0 keeps everything but adds a zero.
      {
        std::vector<int> w = s.entries();
        w.push_back(0);
        if (!record("append0", s, 0, InversionSequence(w))) return;
      }

      for (int j = last + 1; j <= n - 1; ++j) {
        const auto image = maps.distinct(s, j);
        if (!record("distinct", s, j, image)) return;
        const auto after = invseq_stats(image);
        auto expect = rmin_before;
        expect.push_back(j);
        const auto& e = image.entries();
        if (image.size() != n || e.back() != j || std::count(e.begin(), e.end(), j) != 1) {
          return stat_failure("distinct", s, j, image, "last entry is not a new distinct j");
        }
        if (after.get(Stat::kDist) != before.get(Stat::kDist) + 1) {
          return stat_failure("distinct", s, j, image, "dist did not grow by one");
        }
        if (after.get(Stat::kZero) != before.get(Stat::kZero)) {
          return stat_failure("distinct", s, j, image, "zero changed");
        }
        if (j != n - 1 && after.get(Stat::kMax) != before.get(Stat::kMax)) {
          return stat_failure("distinct", s, j, image, "max changed");
        }
        if (*after.rmin_set() != expect) {
          return stat_failure("distinct", s, j, image, "Rmin is not Rmin(s) + {j}");
        }
      }

      for (int j = 1; j <= std::min(last, n - 2); ++j) {
        const auto image = maps.repeated(s, j);
        if (!record("repeated", s, j, image)) return;
        const auto after = invseq_stats(image);
        std::vector<int> expect;
        for (int a : rmin_before) {
          if (a < j) expect.push_back(a);
        }
        expect.push_back(j);
        const auto& e = image.entries();
        if (image.size() != n || e.back() != j || std::count(e.begin(), e.end(), j) < 2) {
          return stat_failure("repeated", s, j, image, "last entry j is not repeated");
        }
        for (Stat st : {Stat::kDist, Stat::kZero, Stat::kMax}) {
          if (after.get(st) != before.get(st)) {
            return stat_failure("repeated", s, j, image, std::string(stat_name(st)) + " changed");
          }
        }
        if (*after.rmin_set() != expect) {
          return stat_failure("repeated", s, j, image, "Rmin is not {a in Rmin(s): a <= j} + {j}");
        }
      }
    });
    if (!report.passed) break;

    for_each_inversion_sequence(n, [&](const InversionSequence& t) {
      if (!report.passed || images.count(t)) return;
      Witness w;
      w.add("n", std::to_string(n));
      w.add("kind", "uncovered");
      w.add("image", "(" + t.to_string() + ")");
      fail(std::move(w));
    });
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace eslab
