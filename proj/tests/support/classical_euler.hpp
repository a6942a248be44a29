#pragma once

// Textbook rigid-body oracle: 3x3 inertia tensor from point masses via
// sum m (r^2 I - r r^T), Euler equations w' = I^{-1}((I w) x w), classical
// RK4 on the 3-vector w. No geometric algebra anywhere.

#include <array>
#include <cmath>
#include <vector>

namespace testsupport {

using V3 = std::array<double, 3>;
using M3 = std::array<std::array<double, 3>, 3>;

inline V3 v3_cross(const V3& a, const V3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

inline V3 m3_apply(const M3& m, const V3& v) {
  V3 out{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) out[i] += m[i][j] * v[j];
  }
  return out;
}

inline M3 m3_inverse(const M3& m) {
  const double det =
      m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
      m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
      m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  M3 inv{};
  inv[0][0] = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) / det;
  inv[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) / det;
  inv[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / det;
  inv[1][0] = (m[1][2] * m[2][0] - m[1][0] * m[2][2]) / det;
  inv[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / det;
  inv[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) / det;
  inv[2][0] = (m[1][0] * m[2][1] - m[1][1] * m[2][0]) / det;
  inv[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) / det;
  inv[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / det;
  return inv;
}

struct ClassicalParticle {
  double mass;
  V3 pos;
};

inline M3 classical_inertia(const std::vector<ClassicalParticle>& parts) {
  M3 I{};
  for (const auto& p : parts) {
    const double r2 = p.pos[0] * p.pos[0] + p.pos[1] * p.pos[1] + p.pos[2] * p.pos[2];
    for (int i = 0; i < 3; ++i) {
      I[i][i] += p.mass * r2;
      for (int j = 0; j < 3; ++j) I[i][j] -= p.mass * p.pos[i] * p.pos[j];
    }
  }
  return I;
}

inline V3 euler_rhs(const M3& inertia, const M3& inertia_inv, const V3& w) {
  return m3_apply(inertia_inv, v3_cross(m3_apply(inertia, w), w));
}

inline V3 euler_rk4_step(const M3& inertia, const M3& inertia_inv, const V3& w,
                         double dt) {
  auto add = [](const V3& a, const V3& b, double s) {
    return V3{a[0] + s * b[0], a[1] + s * b[1], a[2] + s * b[2]};
  };
  const V3 k1 = euler_rhs(inertia, inertia_inv, w);
  const V3 k2 = euler_rhs(inertia, inertia_inv, add(w, k1, dt / 2));
  const V3 k3 = euler_rhs(inertia, inertia_inv, add(w, k2, dt / 2));
  const V3 k4 = euler_rhs(inertia, inertia_inv, add(w, k3, dt));
  V3 out = w;
  for (int i = 0; i < 3; ++i) {
    out[i] += dt / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
  }
  return out;
}

}  // namespace testsupport
