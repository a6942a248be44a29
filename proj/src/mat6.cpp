#include "pgakit/mat6.hpp"

#include <cmath>

namespace pga {

Mat6 mat6_identity() {
  Mat6 m{};
  for (int i = 0; i < 6; ++i) m[i][i] = 1.0;
  return m;
}

Vec6 mat6_apply(const Mat6& m, const Vec6& v) {
  Vec6 out{};
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) out[i] += m[i][j] * v[j];
  }
  return out;
}

Mat6 mat6_mul(const Mat6& a, const Mat6& b) {
  Mat6 out{};
  for (int i = 0; i < 6; ++i) {
    for (int k = 0; k < 6; ++k) {
      const double aik = a[i][k];
      if (aik == 0.0) continue;
      for (int j = 0; j < 6; ++j) out[i][j] += aik * b[k][j];
    }
  }
  return out;
}

Mat6 mat6_transpose(const Mat6& m) {
  Mat6 out{};
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) out[i][j] = m[j][i];
  }
  return out;
}

SymEigen6 sym_eigen(const Mat6& m) {
  Mat6 a = m;
  Mat6 v = mat6_identity();

  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < 6; ++p) {
      for (int q = p + 1; q < 6; ++q) off += a[p][q] * a[p][q];
    }
    if (off < 1e-28) break;

    for (int p = 0; p < 6; ++p) {
      for (int q = p + 1; q < 6; ++q) {
        if (a[p][q] == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < 6; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < 6; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (int k = 0; k < 6; ++k) {
          const double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }

  SymEigen6 out;
  for (int i = 0; i < 6; ++i) out.values[i] = a[i][i];
  out.vectors = v;
  return out;
}

Mat6 sym_pseudo_inverse(const Mat6& m, double rel_tol) {
  const SymEigen6 eig = sym_eigen(m);
  double lmax = 0.0;
  for (double l : eig.values) lmax = std::max(lmax, std::abs(l));
  const double cutoff = rel_tol * (lmax > 0 ? lmax : 1.0);

  Mat6 out{};
  for (int k = 0; k < 6; ++k) {
    if (std::abs(eig.values[k]) <= cutoff) continue;
    const double inv = 1.0 / eig.values[k];
    for (int i = 0; i < 6; ++i) {
      for (int j = 0; j < 6; ++j) {
        out[i][j] += inv * eig.vectors[i][k] * eig.vectors[j][k];
      }
    }
  }
  return out;
}

int sym_rank(const Mat6& m, double rel_tol) {
  const SymEigen6 eig = sym_eigen(m);
  double lmax = 0.0;
  for (double l : eig.values) lmax = std::max(lmax, std::abs(l));
  if (lmax == 0.0) return 0;
  int rank = 0;
  for (double l : eig.values) {
    if (std::abs(l) > rel_tol * lmax) ++rank;
  }
  return rank;
}

}  // namespace pga
