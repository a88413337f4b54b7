// Copyright 2026 The tct-solver Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Random layer thresholds summing to one.
//
// Positions 1..d own the intervals [2(p-1)/d^2, 2p/d^2], whose midpoints sum
// to 1. Positions are grouped into pairs, plus one leading triple when d is
// odd; inside a group the thresholds are coupled so that their sum is fixed,
// and different groups use independent randomness.

#ifndef TCT_THRESHOLDS_H_
#define TCT_THRESHOLDS_H_

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "tct/random.h"
#include "tct/rational.h"

namespace tct {

// Base-3 digits per number in the triple sampler.
inline constexpr int kTripleDigits = 40;

struct Triple {
  Rational x;  // in [0, 2/9]
  Rational y;  // in [2/9, 4/9]
  Rational z;  // in [4/9, 6/9]
};

// Three base-3 numbers a, b, c whose i-th digits form a permutation of
// {0, 1, 2}; `digits[i]` holds the i-th digits of (a, b, c). Each number's
// tail beyond the given digits is replaced by its conditional mean, so
// a + b + c = 3/2 exactly. The sorted numbers scaled by 2/3 give x, y, z.
Triple TripleFromDigits(std::span<const std::array<int, 3>> digits);

// kTripleDigits uniformly random digit permutations. x + y + z = 1 exactly
// and each coordinate is uniform on its interval up to a grid of 3^-41.
Triple SampleTriple(Rng& rng);

// Lower and upper end of position p's interval (p is 1-based).
Rational IntervalLow(int p, int d);
Rational IntervalHigh(int p, int d);

// Groups of 1-based positions: {1,2,3} first when d is odd, then
// consecutive pairs. Requires d >= 2.
std::vector<std::vector<int>> ThresholdGroups(int d);

// Sum of the interval midpoints over a group, (2p-1)/d^2 summed.
Rational GroupBudget(std::span<const int> positions, int d);

struct PositionThresholds {
  std::vector<Rational> a;                // a[p-1] for position p
  std::vector<std::vector<int>> groups;   // as ThresholdGroups(d)
};

// a_p uniform on position p's interval with sum_p a_p = 1 exactly. In a pair
// (p, p+1), a_p = (2(p-1) + 2u)/d^2 with u uniform on a 2^-64 midpoint grid
// and a_{p+1} = 4p/d^2 - a_p; the triple is SampleTriple scaled by 9/d^2.
PositionThresholds SampleThresholds(int d, Rng& rng);

// Thresholds assigned to layers through a permutation.
struct ThresholdAssignment {
  int depth = 0;
  std::vector<int> sigma;                 // sigma[i-1]: position of layer i
  std::vector<Rational> a;                // a[i-1]: threshold of layer i
  std::vector<std::vector<int>> groups;   // groups of positions
  // Layers whose positions share a group with layer i's position.
  std::vector<int> GroupOfLayer(int layer) const;
};

// Draws sigma uniformly (Fisher-Yates over 1..d), then SampleThresholds.
ThresholdAssignment SampleAssignment(int d, Rng& rng);

}  // namespace tct

#endif  // TCT_THRESHOLDS_H_
