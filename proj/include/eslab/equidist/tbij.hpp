#pragma once

#include <functional>

#include "eslab/combinatorics/inversion_sequence.hpp"
#include "eslab/equidist/check.hpp"

namespace eslab {

// One-step extension onto sequences whose last entry j occurs once.
// Requires last(s) < j <= |s| (so j >= 1):
//  1. shift s_{j+1..} one place right, leaving a hole at position j+1;
//  2. add one to every entry >= j;
//  3. rotate the entries below j found after position j+1 one slot left
//     along their positions, the first filling the hole;
//  4. write j into the last position.
InversionSequence tbij_extend_distinct(const InversionSequence& s, int j);

// One-step extension onto sequences whose last entry j occurs more than once,
// for 1 <= j <= |s|-1 and last(s) >= j. If last(s) == j, j is appended.
// Otherwise, with L = last(s), l the leftmost position holding L, m = l-1-L
// and k the length of the terminal run of L:
//  1. move s_{j+m+1..} k places right, adding k to every entry >= j+m there;
//  2. fill positions j+m+1 .. j+m+k with j;
//  3. drop k-1 trailing copies of L+k and replace the remaining ones by j.
InversionSequence tbij_extend_repeated(const InversionSequence& s, int j);

struct TbijMaps {
  std::function<InversionSequence(const InversionSequence&, int)> distinct = tbij_extend_distinct;
  std::function<InversionSequence(const InversionSequence&, int)> repeated = tbij_extend_repeated;
};

// For each n in [2, n_max], applies the maps to every admissible (s, j) with
// s in I_{n-1} and checks: the stated statistic changes, injectivity of each
// map, disjointness of the images (together with appending 0), and that the
// images cover I_n. The first failure is reported with a witness; for
// collisions the witness carries both preimages.
CheckReport tbij_roundtrip_verify(int n_max, const TbijMaps& maps = {});

}  // namespace eslab
