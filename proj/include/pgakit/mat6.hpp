#pragma once

#include <array>

namespace pga {

using Vec6 = std::array<double, 6>;
using Mat6 = std::array<Vec6, 6>;

Mat6 mat6_identity();
Vec6 mat6_apply(const Mat6& m, const Vec6& v);
Mat6 mat6_mul(const Mat6& a, const Mat6& b);
Mat6 mat6_transpose(const Mat6& m);

struct SymEigen6 {
  Vec6 values;
  Mat6 vectors;  // columns are the eigenvectors
};

/// Cyclic Jacobi eigendecomposition of a symmetric matrix.
SymEigen6 sym_eigen(const Mat6& m);

/// Moore-Penrose pseudo-inverse of a symmetric matrix; eigenvalues below
/// rel_tol * max|lambda| are treated as zero.
Mat6 sym_pseudo_inverse(const Mat6& m, double rel_tol = 1e-12);

int sym_rank(const Mat6& m, double rel_tol = 1e-9);

}  // namespace pga
