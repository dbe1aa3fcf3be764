#include "shadowda/linalg.hpp"

namespace shadowda {

ThinQR mgs_qr(const Mat& A, bool reorthogonalize) {
  const int d = static_cast<int>(A.rows());
  const int p = static_cast<int>(A.cols());
  if (p > d) throw RankDeficientError("mgs_qr: more columns than rows", p);

  const double scale = A.cwiseAbs().maxCoeff();
  const double pivot_floor = 1e-13 * scale;

  Mat V = A;  // working columns, orthogonalized in place
  Mat Q(d, p);
  Mat R = Mat::Zero(p, p);

  const int passes = reorthogonalize ? 2 : 1;
  for (int k = 0; k < p; ++k) {
    for (int pass = 0; pass < passes; ++pass) {
      for (int i = 0; i < k; ++i) {
        const double proj = Q.col(i).dot(V.col(k));
        V.col(k) -= proj * Q.col(i);
        R(i, k) += proj;
      }
    }
    const double norm = V.col(k).norm();
    if (!(norm > pivot_floor)) throw RankDeficientError("mgs_qr: rank-deficient input", k);
    R(k, k) = norm;
    Q.col(k) = V.col(k) / norm;
    // subtract the new direction from the remaining columns (modified GS)
    for (int j = k + 1; j < p; ++j) {
      const double proj = Q.col(k).dot(V.col(j));
      V.col(j) -= proj * Q.col(k);
      R(k, j) = proj;
    }
  }
  return {std::move(Q), std::move(R)};
}

BlockTridiagonalSPD::BlockTridiagonalSPD(std::vector<Mat> diag, std::vector<Mat> sub)
    : diag_(std::move(diag)), sub_(std::move(sub)) {
  if (diag_.empty()) throw FactorizationError("block tridiagonal: no blocks", 0);
  if (sub_.size() + 1 != diag_.size())
    throw FactorizationError("block tridiagonal: sub-diagonal count mismatch",
                             static_cast<int>(sub_.size()));
}

void BlockTridiagonalSPD::factor() const {
  const int n_blocks = block_count();
  pivot_llt_.resize(n_blocks);
  below_.resize(n_blocks > 0 ? n_blocks - 1 : 0);

  Mat schur = diag_[0];
  for (int n = 0; n < n_blocks; ++n) {
    pivot_llt_[n].compute(schur);
    if (pivot_llt_[n].info() != Eigen::Success)
      throw FactorizationError("block tridiagonal: non-positive-definite pivot", n);
    if (n + 1 < n_blocks) {
      // F_n = E_n L_n^{-T}; next Schur complement D_{n+1} - F_n F_n^T
      below_[n] = pivot_llt_[n].matrixL().solve(sub_[n].transpose()).transpose();
      schur = diag_[n + 1] - below_[n] * below_[n].transpose();
    }
  }
  factored_ = true;
}

Vec BlockTridiagonalSPD::solve(const Vec& b) const {
  if (!factored_) factor();
  const int n_blocks = block_count();
  const int m = block_size();

  // forward: L z = b
  Vec z(b.size());
  for (int n = 0; n < n_blocks; ++n) {
    Vec rhs = b.segment(n * m, m);
    if (n > 0) rhs -= below_[n - 1] * z.segment((n - 1) * m, m);
    z.segment(n * m, m) = pivot_llt_[n].matrixL().solve(rhs);
  }
  // backward: L^T x = z
  Vec x(b.size());
  for (int n = n_blocks - 1; n >= 0; --n) {
    Vec rhs = z.segment(n * m, m);
    if (n + 1 < n_blocks) rhs -= below_[n].transpose() * x.segment((n + 1) * m, m);
    x.segment(n * m, m) = pivot_llt_[n].matrixU().solve(rhs);
  }
  return x;
}

Mat BlockTridiagonalSPD::dense() const {
  const int m = block_size();
  Mat M = Mat::Zero(size(), size());
  for (int n = 0; n < block_count(); ++n) M.block(n * m, n * m, m, m) = diag_[n];
  for (int n = 0; n + 1 < block_count(); ++n) {
    M.block((n + 1) * m, n * m, m, m) = sub_[n];
    M.block(n * m, (n + 1) * m, m, m) = sub_[n].transpose();
  }
  return M;
}

Vec smw_solve(const BlockTridiagonalSPD& M, const Mat& U, const Vec& b) {
  const int q = static_cast<int>(U.cols());
  Vec w = M.solve(b);
  if (q == 0) return w;

  Mat Z(U.rows(), q);
  for (int j = 0; j < q; ++j) Z.col(j) = M.solve(U.col(j));

  Mat capacitance = Mat::Identity(q, q) + U.transpose() * Z;
  Eigen::FullPivLU<Mat> lu(capacitance);
  if (!lu.isInvertible()) throw SingularUpdateError("smw_solve: singular capacitance matrix");
  return w - Z * lu.solve(U.transpose() * w);
}

}  // namespace shadowda
