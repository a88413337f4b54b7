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

#include "tct/thresholds.h"

#include <algorithm>
#include <numeric>

#include "tct/error.h"

namespace tct {
namespace {

constexpr std::array<std::array<int, 3>, 6> kPermutations = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

Rational Pow3(int e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 3, e);
  return Rational(p);
}

mpz_class FromU64(std::uint64_t value) {
  mpz_class out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(value), 0, 0, &value);
  return out;
}

}  // namespace

Triple TripleFromDigits(std::span<const std::array<int, 3>> digits) {
  std::array<mpz_class, 3> value = {0, 0, 0};
  for (const auto& round : digits) {
    std::array<int, 3> sorted = round;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::array<int, 3>{0, 1, 2}) {
      ThrowInvalid("each digit round must be a permutation of {0,1,2}");
    }
    for (int k = 0; k < 3; ++k) value[k] = value[k] * 3 + round[k];
  }
  const Rational scale = Pow3(static_cast<int>(digits.size()));
  // number = (digits + 1/2) / 3^L, then scaled by 2/3.
  std::array<Rational, 3> scaled;
  for (int k = 0; k < 3; ++k) {
    scaled[k] = (Rational(value[k]) + Rational(1, 2)) / scale * Rational(2, 3);
  }
  std::sort(scaled.begin(), scaled.end());
  return Triple{scaled[0], scaled[1], scaled[2]};
}

Triple SampleTriple(Rng& rng) {
  std::array<std::array<int, 3>, kTripleDigits> digits;
  for (auto& round : digits) round = kPermutations[rng.UniformInt(0, 5)];
  return TripleFromDigits(digits);
}

Rational IntervalLow(int p, int d) { return Frac(2 * (p - 1), d * d); }
Rational IntervalHigh(int p, int d) { return Frac(2 * p, d * d); }

std::vector<std::vector<int>> ThresholdGroups(int d) {
  if (d < 2) ThrowInvalid("thresholds need depth at least 2");
  std::vector<std::vector<int>> groups;
  int p = 1;
  if (d % 2 == 1) {
    groups.push_back({1, 2, 3});
    p = 4;
  }
  for (; p <= d; p += 2) groups.push_back({p, p + 1});
  return groups;
}

Rational GroupBudget(std::span<const int> positions, int d) {
  Rational total = 0;
  for (int p : positions) total += Frac(2 * p - 1, d * d);
  return total;
}

PositionThresholds SampleThresholds(int d, Rng& rng) {
  PositionThresholds result;
  result.groups = ThresholdGroups(d);
  result.a.assign(d, Rational(0));
  const Rational dd(d * d);
  mpz_class two_65 = 1;
  two_65 <<= 65;
  for (const auto& group : result.groups) {
    if (group.size() == 3) {
      const Triple t = SampleTriple(rng);
      result.a[0] = 9 * t.x / dd;
      result.a[1] = 9 * t.y / dd;
      result.a[2] = 9 * t.z / dd;
    } else {
      const int p = group[0];
      const mpz_class m = FromU64(rng.NextU64());
      const Rational u(2 * m + 1, two_65);
      result.a[p - 1] = (2 * (p - 1) + 2 * u) / dd;
      result.a[p] = Rational(4 * p) / dd - result.a[p - 1];
    }
  }
  for (Rational& value : result.a) value.canonicalize();
  return result;
}

std::vector<int> ThresholdAssignment::GroupOfLayer(int layer) const {
  const int position = sigma[layer - 1];
  std::vector<int> layers;
  for (const auto& group : groups) {
    if (std::find(group.begin(), group.end(), position) == group.end()) continue;
    for (int i = 1; i <= depth; ++i) {
      if (std::find(group.begin(), group.end(), sigma[i - 1]) != group.end()) {
        layers.push_back(i);
      }
    }
  }
  return layers;
}

ThresholdAssignment SampleAssignment(int d, Rng& rng) {
  ThresholdAssignment result;
  result.depth = d;
  result.sigma.resize(d);
  std::iota(result.sigma.begin(), result.sigma.end(), 1);
  rng.Shuffle(std::span<int>(result.sigma));
  PositionThresholds positions = SampleThresholds(d, rng);
  result.groups = std::move(positions.groups);
  result.a.resize(d);
  for (int i = 1; i <= d; ++i) result.a[i - 1] = positions.a[result.sigma[i - 1] - 1];
  return result;
}

}  // namespace tct
