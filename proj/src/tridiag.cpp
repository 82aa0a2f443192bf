#include "leadsel/tridiag.hpp"

#include <cmath>
#include <string>

#include "leadsel/errors.hpp"

namespace leadsel {

TridiagonalMatrix::TridiagonalMatrix(std::vector<double> d,
                                     std::vector<double> o)
    : diag(std::move(d)), off(std::move(o)) {
  const std::size_t want = diag.empty() ? 0 : diag.size() - 1;
  if (off.size() != want) {
    throw ValidationError("tridiagonal: " + std::to_string(diag.size()) +
                          " diagonal entries need " + std::to_string(want) +
                          " off-diagonal entries, got " +
                          std::to_string(off.size()));
  }
}

Eigen::MatrixXd TridiagonalMatrix::dense() const {
  const int m = size();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(m, m);
  for (int i = 0; i < m; ++i) out(i, i) = diag[i];
  for (int i = 0; i + 1 < m; ++i) {
    out(i, i + 1) = off[i];
    out(i + 1, i) = off[i];
  }
  return out;
}

namespace {

void check_pivot(double p, int index) {
  if (!(p > 0.0) || !std::isfinite(p)) {
    throw NotPositiveDefinite("tridiagonal pivot " + std::to_string(p) +
                              " at row " + std::to_string(index));
  }
}

// fwd[i] = theta_i / theta_{i-1}, bwd[i] = phi_i / phi_{i+1}: the pivots of
// top-down and bottom-up elimination. Calls emit(i, (T^-1)_ii) in order.
template <typename Emit>
void inverse_diagonal_into(std::span<const double> diag,
                           std::span<const double> off,
                           std::vector<double>& fwd, std::vector<double>& bwd,
                           Emit emit) {
  const std::size_t m = diag.size();
  if (m == 0) return;
  if (off.size() + 1 != m) {
    throw ValidationError("tridiagonal: off-diagonal length mismatch");
  }
  fwd.resize(m);
  bwd.resize(m);
  fwd[0] = diag[0];
  check_pivot(fwd[0], 0);
  for (std::size_t i = 1; i < m; ++i) {
    fwd[i] = diag[i] - off[i - 1] * off[i - 1] / fwd[i - 1];
    check_pivot(fwd[i], static_cast<int>(i));
  }
  bwd[m - 1] = diag[m - 1];
  check_pivot(bwd[m - 1], static_cast<int>(m - 1));
  for (std::size_t i = m - 1; i-- > 0;) {
    bwd[i] = diag[i] - off[i] * off[i] / bwd[i + 1];
    check_pivot(bwd[i], static_cast<int>(i));
  }
  // (T^-1)_ii = theta_{i-1} phi_{i+1} / theta_m
  //           = 1 / (fwd_i + bwd_i - a_i) = 1 / (bwd_i - b_{i-1}^2 / fwd_{i-1}).
  for (std::size_t i = 0; i < m; ++i) {
    const double denom =
        i == 0 ? bwd[0] : bwd[i] - off[i - 1] * off[i - 1] / fwd[i - 1];
    check_pivot(denom, static_cast<int>(i));
    emit(i, 1.0 / denom);
  }
}

}  // namespace

std::vector<double> inverse_diagonal(std::span<const double> diag,
                                     std::span<const double> off) {
  std::vector<double> fwd, bwd, out(diag.size());
  inverse_diagonal_into(diag, off, fwd, bwd,
                        [&](std::size_t i, double v) { out[i] = v; });
  return out;
}

double TridiagonalWorkspace::trace_of_inverse(std::span<const double> diag,
                                              std::span<const double> off) {
  double sum = 0.0;
  inverse_diagonal_into(diag, off, fwd_, bwd_,
                        [&](std::size_t, double v) { sum += v; });
  return sum;
}

std::vector<double> inverse_diagonal(const TridiagonalMatrix& t) {
  return inverse_diagonal(t.diag, t.off);
}

double trace_of_inverse(std::span<const double> diag,
                        std::span<const double> off) {
  return TridiagonalWorkspace{}.trace_of_inverse(diag, off);
}

double trace_of_inverse(const TridiagonalMatrix& t) {
  return trace_of_inverse(t.diag, t.off);
}

double dense_trace_of_inverse(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols()) {
    throw ValidationError("dense_trace_of_inverse: matrix is not square");
  }
  if (a.rows() == 0) return 0.0;
  Eigen::LLT<Eigen::MatrixXd> llt(a);
  if (llt.info() != Eigen::Success) {
    throw NotPositiveDefinite("dense Cholesky factorization failed");
  }
  const Eigen::MatrixXd inv =
      llt.solve(Eigen::MatrixXd::Identity(a.rows(), a.cols()));
  return inv.trace();
}

}  // namespace leadsel
