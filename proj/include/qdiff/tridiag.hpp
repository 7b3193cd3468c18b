#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace qdiff {

// Factorized tridiagonal solver. For cyclic systems (periodic grids) the two
// corner couplings lower[0] -> x[n-1] and upper[n-1] -> x[0] are folded in by
// a Sherman-Morrison rank-one correction. The factorization is done once at
// construction; solve() is then a pair of O(n) sweeps, reusable across steps
// while the matrix is unchanged.
class TridiagonalSystem {
 public:
  TridiagonalSystem(std::vector<double> diag, std::vector<double> lower,
                    std::vector<double> upper, bool cyclic);

  void solve(std::span<const double> rhs, std::span<double> x) const;

  std::size_t size() const { return diag_.size(); }

 private:
  void factorize();
  // Thomas solve against the (corner-free) factorized core.
  void core_solve(std::span<const double> rhs, std::span<double> x) const;

  std::vector<double> diag_, lower_, upper_;
  bool cyclic_;
  double corner_lower_ = 0.0;  // original lower[0]
  double corner_upper_ = 0.0;  // original upper[n-1]
  double gamma_ = 0.0;
  std::vector<double> inv_den_;     // cached forward-sweep denominators
  std::vector<double> upper_mod_;   // cached modified upper coefficients
  std::vector<double> correction_;  // A_core^{-1} u for Sherman-Morrison
  double correction_scale_ = 0.0;   // 1 + v . correction_
};

}  // namespace qdiff
