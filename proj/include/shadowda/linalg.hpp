#pragma once

#include <vector>

#include "shadowda/types.hpp"

namespace shadowda {

/// Thin QR factors: Q (d x p, orthonormal columns), R (p x p, upper
/// triangular with positive diagonal).
struct ThinQR {
  Mat Q;
  Mat R;
};

/// Thin QR of a full-column-rank d x p matrix by modified Gram-Schmidt.
///
/// A second orthogonalization pass can be requested for ill-conditioned
/// inputs. A diagonal pivot below 1e-13 * max|A| raises RankDeficientError
/// naming the offending column.
ThinQR mgs_qr(const Mat& A, bool reorthogonalize = false);

/// Symmetric block tridiagonal matrix with N diagonal blocks (m x m) and
/// N-1 sub-diagonal blocks; super-diagonal blocks are the transposes.
/// The solver requires positive definiteness, detected during factorization.
class BlockTridiagonalSPD {
 public:
  /// `diag[n]` is block (n, n); `sub[n]` is block (n+1, n).
  BlockTridiagonalSPD(std::vector<Mat> diag, std::vector<Mat> sub);

  int block_count() const { return static_cast<int>(diag_.size()); }
  int block_size() const { return static_cast<int>(diag_.front().rows()); }
  int size() const { return block_count() * block_size(); }

  /// Solves M x = b by block Cholesky (block Thomas). Factors are cached
  /// after the first call. Throws FactorizationError on a non-SPD pivot.
  Vec solve(const Vec& b) const;

  /// Assembles the dense matrix; test/oracle use only.
  Mat dense() const;

 private:
  void factor() const;

  std::vector<Mat> diag_;
  std::vector<Mat> sub_;
  // Cholesky factors: M = L L^T with L block lower bidiagonal.
  mutable std::vector<Eigen::LLT<Mat>> pivot_llt_;
  mutable std::vector<Mat> below_;
  mutable bool factored_ = false;
};

/// Solves (M + U U^T) x = b via Sherman-Morrison-Woodbury: q + 1 block
/// tridiagonal solves plus one dense q x q solve. U has q columns; q = 0
/// reduces to a plain solve. Throws SingularUpdateError if the capacitance
/// matrix I + U^T M^{-1} U is singular.
Vec smw_solve(const BlockTridiagonalSPD& M, const Mat& U, const Vec& b);

}  // namespace shadowda
