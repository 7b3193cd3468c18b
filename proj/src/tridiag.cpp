#include "qdiff/tridiag.hpp"

#include <cmath>
#include <stdexcept>

#include "qdiff/errors.hpp"

namespace qdiff {

TridiagonalSystem::TridiagonalSystem(std::vector<double> diag, std::vector<double> lower,
                                     std::vector<double> upper, bool cyclic)
    : diag_(std::move(diag)),
      lower_(std::move(lower)),
      upper_(std::move(upper)),
      cyclic_(cyclic) {
  const std::size_t n = diag_.size();
  if (n < 3 || lower_.size() != n || upper_.size() != n) {
    throw NumericalError("tridiagonal system needs n >= 3 with matching bands");
  }
  if (cyclic_) {
    corner_lower_ = lower_[0];
    corner_upper_ = upper_[n - 1];
    // fold the corners into a rank-one update u v^T with
    // u = (gamma, 0, .., 0, corner_upper), v = (1, 0, .., 0, corner_lower/gamma)
    gamma_ = -diag_[0];
    diag_[0] -= gamma_;
    diag_[n - 1] -= corner_lower_ * corner_upper_ / gamma_;
    lower_[0] = 0.0;
    upper_[n - 1] = 0.0;
  }
  factorize();
  if (cyclic_) {
    std::vector<double> u(n, 0.0);
    u[0] = gamma_;
    u[n - 1] = corner_upper_;
    correction_.resize(n);
    core_solve(u, correction_);
    correction_scale_ =
        1.0 + correction_[0] + corner_lower_ * correction_[n - 1] / gamma_;
    if (correction_scale_ == 0.0 || !std::isfinite(correction_scale_)) {
      throw NumericalError("cyclic tridiagonal correction is singular");
    }
  }
}

void TridiagonalSystem::factorize() {
  const std::size_t n = diag_.size();
  inv_den_.resize(n);
  upper_mod_.resize(n);
  double den = diag_[0];
  if (den == 0.0) throw NumericalError("tridiagonal factorization hit a zero pivot");
  inv_den_[0] = 1.0 / den;
  upper_mod_[0] = upper_[0] * inv_den_[0];
  for (std::size_t i = 1; i < n; ++i) {
    den = diag_[i] - lower_[i] * upper_mod_[i - 1];
    if (den == 0.0 || !std::isfinite(den)) {
      throw NumericalError("tridiagonal factorization hit a zero pivot");
    }
    inv_den_[i] = 1.0 / den;
    upper_mod_[i] = upper_[i] * inv_den_[i];
  }
}

void TridiagonalSystem::core_solve(std::span<const double> rhs,
                                   std::span<double> x) const {
  const std::size_t n = diag_.size();
  x[0] = rhs[0] * inv_den_[0];
  for (std::size_t i = 1; i < n; ++i) {
    x[i] = (rhs[i] - lower_[i] * x[i - 1]) * inv_den_[i];
  }
  for (std::size_t i = n - 1; i-- > 0;) {
    x[i] -= upper_mod_[i] * x[i + 1];
  }
}

void TridiagonalSystem::solve(std::span<const double> rhs, std::span<double> x) const {
  const std::size_t n = diag_.size();
  if (rhs.size() != n || x.size() != n) {
    throw NumericalError("tridiagonal solve size mismatch");
  }
  core_solve(rhs, x);
  if (cyclic_) {
    const double v_dot_x = x[0] + corner_lower_ * x[n - 1] / gamma_;
    const double factor = v_dot_x / correction_scale_;
    for (std::size_t i = 0; i < n; ++i) x[i] -= factor * correction_[i];
  }
}

}  // namespace qdiff
