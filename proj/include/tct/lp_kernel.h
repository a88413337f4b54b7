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

// Dense simplex kernel for covering LPs
//
//   minimize   sum_v c_v x_v
//   subject to sum_{v in P} x_v >= 1   for every cut P
//              0 <= x_v <= 1.
//
// The kernel runs the primal revised simplex on the dual
//
//   maximize   sum_P y_P - sum_v z_v
//   subject to sum_{P ni v} y_P - z_v + s_v = c_v,   y, z, s >= 0,
//
// which has one row per variable of the covering LP and one column per cut.
// The slack basis is feasible because c >= 0, and adding a cut adds a column,
// so the previous optimal basis stays feasible and the kernel warm-starts
// across row-generation rounds. The covering solution is read off as the
// simplex multipliers of the optimal basis.
//
// Pivoting follows Bland's rule (smallest entering index, smallest leaving
// basic index on ties), which terminates on degenerate problems.

#ifndef TCT_LP_KERNEL_H_
#define TCT_LP_KERNEL_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "tct/error.h"
#include "tct/rational.h"

namespace tct {

template <typename Num>
struct KernelTraits;

template <>
struct KernelTraits<Rational> {
  static bool IsPositive(const Rational& a) { return sgn(a) > 0; }
  static bool IsZero(const Rational& a) { return sgn(a) == 0; }
  static bool Less(const Rational& a, const Rational& b) { return a < b; }
  static bool Equal(const Rational& a, const Rational& b) { return a == b; }
};

template <>
struct KernelTraits<double> {
  static constexpr double kTolerance = 1e-9;
  static bool IsPositive(double a) { return a > kTolerance; }
  static bool IsZero(double a) { return std::fabs(a) <= kTolerance; }
  static bool Less(double a, double b) { return a < b - kTolerance; }
  static bool Equal(double a, double b) { return std::fabs(a - b) <= kTolerance; }
};

template <typename Num>
class CoverLpKernel {
 public:
  using Traits = KernelTraits<Num>;

  explicit CoverLpKernel(std::vector<Num> costs) : costs_(std::move(costs)) {
    const int n = num_rows();
    basis_.resize(n);
    binv_.assign(static_cast<std::size_t>(n) * n, Num(0));
    xb_ = costs_;
    for (int r = 0; r < n; ++r) {
      basis_[r] = r;
      binv_[Index(r, r)] = Num(1);
    }
    is_basic_.assign(2 * n, 0);
    for (int r = 0; r < n; ++r) is_basic_[r] = 1;
  }

  int num_rows() const { return static_cast<int>(costs_.size()); }
  int num_cuts() const { return static_cast<int>(cuts_.size()); }
  int num_pivots() const { return pivots_; }
  const std::vector<int>& basis() const { return basis_; }

  // `members` are row indices; must be nonempty.
  void AddCut(std::vector<int> members) {
    if (members.empty()) {
      throw TctError(ErrorKind::kInfeasible, "empty cut: covering LP infeasible");
    }
    cuts_.push_back(std::move(members));
    is_basic_.push_back(0);
  }

  // Pivots to optimality. Returns the number of pivots performed.
  int Solve(int max_pivots = 1 << 30) {
    int count = 0;
    while (true) {
      const std::vector<Num> pi = Multipliers();
      const int entering = ChooseEntering(pi);
      if (entering < 0) return count;
      if (count++ >= max_pivots) {
        throw TctError(ErrorKind::kResourceCap, "simplex pivot cap exceeded");
      }
      const std::vector<Num> u = Direction(entering);
      const int leaving = ChooseLeavingRow(u);
      if (leaving < 0) {
        throw TctError(ErrorKind::kInternal, "covering LP dual is unbounded");
      }
      Pivot(entering, leaving, u);
    }
  }

  // Current covering solution x = c_B B^{-1}.
  std::vector<Num> Primal() const { return Multipliers(); }

  Num Objective() const {
    Num total(0);
    for (int r = 0; r < num_rows(); ++r) total += ObjectiveCoefficient(basis_[r]) * xb_[r];
    return total;
  }

  // Replaces the basis by `basis` if it is nonsingular and primal feasible
  // for the dual problem. Used to warm-start an exact kernel from a floating
  // point one. Returns false and keeps the current basis otherwise.
  bool TryAdoptBasis(const std::vector<int>& basis) {
    const int n = num_rows();
    if (static_cast<int>(basis.size()) != n) return false;
    std::vector<char> used(is_basic_.size(), 0);
    for (int j : basis) {
      if (j < 0 || j >= static_cast<int>(is_basic_.size()) || used[j]) return false;
      used[j] = 1;
    }
    // Gauss-Jordan on [B | I].
    std::vector<Num> m(static_cast<std::size_t>(n) * n, Num(0));
    std::vector<Num> inv(static_cast<std::size_t>(n) * n, Num(0));
    for (int c = 0; c < n; ++c) {
      for (auto [row, value] : Column(basis[c])) m[Index(row, c)] = value;
      inv[Index(c, c)] = Num(1);
    }
    for (int c = 0; c < n; ++c) {
      int p = -1;
      for (int r = c; r < n; ++r) {
        if (!Traits::IsZero(m[Index(r, c)])) {
          p = r;
          break;
        }
      }
      if (p < 0) return false;
      if (p != c) {
        for (int k = 0; k < n; ++k) {
          std::swap(m[Index(p, k)], m[Index(c, k)]);
          std::swap(inv[Index(p, k)], inv[Index(c, k)]);
        }
      }
      const Num scale = m[Index(c, c)];
      for (int k = 0; k < n; ++k) {
        m[Index(c, k)] /= scale;
        inv[Index(c, k)] /= scale;
      }
      for (int r = 0; r < n; ++r) {
        if (r == c || Traits::IsZero(m[Index(r, c)])) continue;
        const Num f = m[Index(r, c)];
        for (int k = 0; k < n; ++k) {
          m[Index(r, k)] -= f * m[Index(c, k)];
          inv[Index(r, k)] -= f * inv[Index(c, k)];
        }
      }
    }
    std::vector<Num> xb(n, Num(0));
    for (int r = 0; r < n; ++r) {
      for (int k = 0; k < n; ++k) xb[r] += inv[Index(r, k)] * costs_[k];
      if (Traits::Less(xb[r], Num(0))) return false;
    }
    std::fill(is_basic_.begin(), is_basic_.end(), 0);
    for (int j : basis) is_basic_[j] = 1;
    basis_ = basis;
    binv_ = std::move(inv);
    xb_ = std::move(xb);
    return true;
  }

 private:
  std::size_t Index(int r, int c) const {
    return static_cast<std::size_t>(r) * num_rows() + c;
  }

  Num ObjectiveCoefficient(int column) const {
    const int n = num_rows();
    if (column < n) return Num(0);
    if (column < 2 * n) return Num(-1);
    return Num(1);
  }

  // Sparse column: (row, coefficient).
  std::vector<std::pair<int, Num>> Column(int column) const {
    const int n = num_rows();
    if (column < n) return {{column, Num(1)}};
    if (column < 2 * n) return {{column - n, Num(-1)}};
    std::vector<std::pair<int, Num>> out;
    for (int v : cuts_[column - 2 * n]) out.emplace_back(v, Num(1));
    return out;
  }

  std::vector<Num> Multipliers() const {
    const int n = num_rows();
    std::vector<Num> pi(n, Num(0));
    for (int r = 0; r < n; ++r) {
      const Num cb = ObjectiveCoefficient(basis_[r]);
      if (Traits::IsZero(cb)) continue;
      for (int k = 0; k < n; ++k) pi[k] += cb * binv_[Index(r, k)];
    }
    return pi;
  }

  int ChooseEntering(const std::vector<Num>& pi) const {
    const int n = num_rows();
    const int total = static_cast<int>(is_basic_.size());
    for (int j = 0; j < total; ++j) {
      if (is_basic_[j]) continue;
      Num reduced;
      if (j < n) {
        reduced = -pi[j];
      } else if (j < 2 * n) {
        reduced = pi[j - n] - Num(1);
      } else {
        reduced = Num(1);
        for (int v : cuts_[j - 2 * n]) reduced -= pi[v];
      }
      if (Traits::IsPositive(reduced)) return j;
    }
    return -1;
  }

  std::vector<Num> Direction(int column) const {
    const int n = num_rows();
    std::vector<Num> u(n, Num(0));
    for (auto [row, value] : Column(column)) {
      for (int r = 0; r < n; ++r) u[r] += binv_[Index(r, row)] * value;
    }
    return u;
  }

  int ChooseLeavingRow(const std::vector<Num>& u) const {
    int best = -1;
    Num best_ratio(0);
    for (int r = 0; r < num_rows(); ++r) {
      if (!Traits::IsPositive(u[r])) continue;
      Num ratio = xb_[r] / u[r];
      if (best < 0 || Traits::Less(ratio, best_ratio) ||
          (Traits::Equal(ratio, best_ratio) && basis_[r] < basis_[best])) {
        best = r;
        best_ratio = std::move(ratio);
      }
    }
    return best;
  }

  void Pivot(int entering, int row, const std::vector<Num>& u) {
    const int n = num_rows();
    const Num pivot = u[row];
    for (int k = 0; k < n; ++k) binv_[Index(row, k)] /= pivot;
    xb_[row] /= pivot;
    for (int r = 0; r < n; ++r) {
      if (r == row || Traits::IsZero(u[r])) continue;
      const Num f = u[r];
      for (int k = 0; k < n; ++k) binv_[Index(r, k)] -= f * binv_[Index(row, k)];
      xb_[r] -= f * xb_[row];
      if constexpr (std::is_floating_point_v<Num>) {
        if (xb_[r] < 0 && xb_[r] > -KernelTraits<double>::kTolerance) xb_[r] = 0;
      }
    }
    is_basic_[basis_[row]] = 0;
    is_basic_[entering] = 1;
    basis_[row] = entering;
    ++pivots_;
  }

  std::vector<Num> costs_;
  std::vector<std::vector<int>> cuts_;
  std::vector<int> basis_;
  std::vector<Num> binv_;
  std::vector<Num> xb_;
  std::vector<char> is_basic_;
  int pivots_ = 0;
};

}  // namespace tct

#endif  // TCT_LP_KERNEL_H_
