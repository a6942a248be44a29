#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "pgakit/algebra.hpp"

namespace pga {

/// Dense multivector: one coefficient per basis blade of its algebra.
/// Values are immutable in spirit; every operation returns a fresh value,
/// so sharing across threads is safe.
class Multivector {
public:
  explicit Multivector(AlgebraPtr alg) : alg_(std::move(alg)) {}

  static Multivector zero(AlgebraPtr alg) { return Multivector(std::move(alg)); }

  static Multivector scalar(AlgebraPtr alg, double s) {
    Multivector out(std::move(alg));
    out.c_[0] = s;
    return out;
  }

  static Multivector blade(AlgebraPtr alg, BladeMask b, double coeff = 1.0) {
    Multivector out(std::move(alg));
    out.check_mask(b);
    out.c_[b] = coeff;
    return out;
  }

  const AlgebraPtr& algebra() const { return alg_; }
  std::size_t size() const { return alg_->blade_count(); }

  double operator[](BladeMask b) const { return c_[b]; }
  double coeff(BladeMask b) const {
    check_mask(b);
    return c_[b];
  }
  Multivector& set(BladeMask b, double v) {
    check_mask(b);
    c_[b] = v;
    return *this;
  }

  double scalar_part() const { return c_[0]; }
  /// Coefficient of the unit pseudoscalar e_{0..dim-1}.
  double pseudoscalar_part() const { return c_[alg_->pseudoscalar()]; }

  bool is_zero(double tol = 0.0) const {
    for (std::size_t b = 0; b < size(); ++b) {
      if (std::abs(c_[b]) > tol) return false;
    }
    return true;
  }

  Multivector& operator+=(const Multivector& o) {
    check_same(o);
    for (std::size_t b = 0; b < size(); ++b) c_[b] += o.c_[b];
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    check_same(o);
    for (std::size_t b = 0; b < size(); ++b) c_[b] -= o.c_[b];
    return *this;
  }
  Multivector& operator*=(double s) {
    for (std::size_t b = 0; b < size(); ++b) c_[b] *= s;
    return *this;
  }

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator-(Multivector a) {
    for (std::size_t b = 0; b < a.size(); ++b) a.c_[b] = -a.c_[b];
    return a;
  }
  friend Multivector operator*(Multivector a, double s) { return a *= s; }
  friend Multivector operator*(double s, Multivector a) { return a *= s; }
  friend Multivector operator/(Multivector a, double s) { return a *= (1.0 / s); }

  friend Multivector operator*(const Multivector& a, const Multivector& b) {
    return geometric_product(a, b);
  }
  friend Multivector operator^(const Multivector& a, const Multivector& b) {
    return outer_product(a, b);
  }

  friend Multivector geometric_product(const Multivector& a, const Multivector& b);
  friend Multivector outer_product(const Multivector& a, const Multivector& b);
  /// Symmetric grade-selection inner product: per pure-grade pair (k,m) the
  /// grade-|k-m| part of the geometric product, extended bilinearly.
  friend Multivector inner_product(const Multivector& a, const Multivector& b);

  void check_same(const Multivector& o) const {
    if (alg_ != o.alg_ && !alg_->same_as(*o.alg_)) {
      throw std::invalid_argument("multivector operands use different algebras");
    }
  }

private:
  void check_mask(BladeMask b) const {
    if (b >= size()) throw std::out_of_range("blade mask out of range for algebra");
  }

  template <typename Filter>
  static Multivector product_filtered(const Multivector& a, const Multivector& b,
                                      Filter&& keep);

  AlgebraPtr alg_;
  std::array<double, Algebra::kMaxBlades> c_{};
};

template <typename Filter>
Multivector Multivector::product_filtered(const Multivector& a, const Multivector& b,
                                          Filter&& keep) {
  a.check_same(b);
  Multivector out(a.alg_);
  const Algebra& alg = *a.alg_;
  const std::size_t n = a.size();
  for (BladeMask i = 0; i < n; ++i) {
    const double ca = a.c_[i];
    if (ca == 0.0) continue;
    for (BladeMask j = 0; j < n; ++j) {
      const double cb = b.c_[j];
      if (cb == 0.0) continue;
      if (!keep(i, j)) continue;
      const int sign = alg.product_sign(i, j);
      if (sign == 0) continue;
      out.c_[i ^ j] += sign * ca * cb;
    }
  }
  return out;
}

inline Multivector geometric_product(const Multivector& a, const Multivector& b) {
  return Multivector::product_filtered(a, b, [](BladeMask, BladeMask) { return true; });
}

inline Multivector outer_product(const Multivector& a, const Multivector& b) {
  return Multivector::product_filtered(
      a, b, [](BladeMask i, BladeMask j) { return (i & j) == 0; });
}

inline Multivector inner_product(const Multivector& a, const Multivector& b) {
  return Multivector::product_filtered(a, b, [](BladeMask i, BladeMask j) {
    const int k = Algebra::grade(i), m = Algebra::grade(j);
    const int target = k > m ? k - m : m - k;
    return Algebra::grade(i ^ j) == target;
  });
}

inline Multivector grade_part(const Multivector& a, int k) {
  if (k < 0 || k > a.algebra()->dim()) {
    throw std::out_of_range("grade_part: grade out of range");
  }
  Multivector out(a.algebra());
  for (BladeMask b = 0; b < a.size(); ++b) {
    if (Algebra::grade(b) == k) out.set(b, a[b]);
  }
  return out;
}

/// Reversal: grade-k coefficients scaled by (-1)^(k(k-1)/2).
inline Multivector reverse(const Multivector& a) {
  Multivector out(a.algebra());
  for (BladeMask b = 0; b < a.size(); ++b) {
    const int k = Algebra::grade(b);
    const double s = (k % 4 == 2 || k % 4 == 3) ? -1.0 : 1.0;
    out.set(b, s * a[b]);
  }
  return out;
}

/// Poincare duality: grade k -> dim-k, sign fixed by blade ^ dual(blade) = +I.
/// Metric-free, so it survives the degenerate generator.
inline Multivector poincare_dual(const Multivector& a) {
  const Algebra& alg = *a.algebra();
  const BladeMask full = alg.pseudoscalar();
  Multivector out(a.algebra());
  for (BladeMask b = 0; b < a.size(); ++b) {
    if (a[b] != 0.0) out.set(full ^ b, alg.dual_sign(b) * a[b]);
  }
  return out;
}

/// Exact inverse of poincare_dual.
inline Multivector poincare_undual(const Multivector& a) {
  const Algebra& alg = *a.algebra();
  const BladeMask full = alg.pseudoscalar();
  Multivector out(a.algebra());
  for (BladeMask b = 0; b < a.size(); ++b) {
    if (a[b] != 0.0) out.set(full ^ b, alg.dual_sign(full ^ b) * a[b]);
  }
  return out;
}

/// The join: undual(dual(a) ^ dual(b)).
inline Multivector regressive_product(const Multivector& a, const Multivector& b) {
  return poincare_undual(outer_product(poincare_dual(a), poincare_dual(b)));
}

inline Multivector vee(const Multivector& a, const Multivector& b) {
  return regressive_product(a, b);
}

/// (ab - ba)/2. Anti-symmetric; the Lie bracket on bivectors.
inline Multivector commutator(const Multivector& a, const Multivector& b) {
  return (geometric_product(a, b) - geometric_product(b, a)) * 0.5;
}

/// g x reverse(g); grade-preserving for versors g.
inline Multivector sandwich(const Multivector& g, const Multivector& x) {
  return geometric_product(geometric_product(g, x), reverse(g));
}

/// Standard norm sqrt(|<a reverse(a)>_0|). Zero for ideal elements.
inline double norm(const Multivector& a) {
  return std::sqrt(std::abs(geometric_product(a, reverse(a)).scalar_part()));
}

/// Magnitude of the ideal part: euclidean norm of the coefficients of all
/// blades containing the degenerate generator e_0.
inline double ideal_norm(const Multivector& a) {
  double sum = 0.0;
  for (BladeMask b = 1; b < a.size(); b += 2) sum += a[b] * a[b];
  return std::sqrt(sum);
}

inline double max_abs_diff(const Multivector& a, const Multivector& b) {
  a.check_same(b);
  double m = 0.0;
  for (BladeMask i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline bool approx_equal(const Multivector& a, const Multivector& b, double tol) {
  return max_abs_diff(a, b) <= tol;
}

/// Truncated power series sum_{k<terms} a^k / k!. Slow but convention-free;
/// the oracle for every closed-form exponential in the typed layers.
Multivector exp_series(const Multivector& a, int terms);

}  // namespace pga
