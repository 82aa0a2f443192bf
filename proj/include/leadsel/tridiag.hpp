#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

namespace leadsel {

// Symmetric tridiagonal matrix: diag has m entries, off has m-1 (empty when
// m == 0). m == 0 is the empty block.
struct TridiagonalMatrix {
  std::vector<double> diag;
  std::vector<double> off;

  TridiagonalMatrix() = default;
  // Throws ValidationError when the lengths do not match.
  TridiagonalMatrix(std::vector<double> diag, std::vector<double> off);

  int size() const { return static_cast<int>(diag.size()); }
  bool empty() const { return diag.empty(); }
  Eigen::MatrixXd dense() const;

  bool operator==(const TridiagonalMatrix&) const = default;
};

// Diagonal of T^{-1} in O(m). Runs the forward and backward LDL^T pivot
// recurrences (ratios of consecutive leading/trailing principal minors, so
// no overflow for large m) and combines them:
//   (T^{-1})_ii = 1 / (fwd_i + bwd_i - a_i).
// Throws NotPositiveDefinite on a pivot <= 0 or non-finite.
std::vector<double> inverse_diagonal(const TridiagonalMatrix& t);
std::vector<double> inverse_diagonal(std::span<const double> diag,
                                     std::span<const double> off);

// Sum of inverse_diagonal; exactly 0 for the empty block.
double trace_of_inverse(const TridiagonalMatrix& t);
double trace_of_inverse(std::span<const double> diag,
                        std::span<const double> off);

// Reusable pivot buffers for evaluating many traces without allocating.
class TridiagonalWorkspace {
 public:
  double trace_of_inverse(std::span<const double> diag,
                          std::span<const double> off);

 private:
  std::vector<double> fwd_;
  std::vector<double> bwd_;
};

// tr(A^{-1}) via a dense Cholesky factorization. Validation oracle only.
double dense_trace_of_inverse(const Eigen::MatrixXd& a);

}  // namespace leadsel
