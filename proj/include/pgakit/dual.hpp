#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace pga {

/// Domain violation inside a lifted analytic function; carries the value
/// that broke the contract.
class DomainError : public std::domain_error {
public:
  DomainError(const std::string& what, double value)
      : std::domain_error(what + " (at value " + std::to_string(value) + ")"),
        value_(value) {}
  double value() const { return value_; }

private:
  double value_;
};

/// a + a' eps with eps^2 = 0: the scalar/pseudoscalar subalgebra of euclidean
/// PGA realized standalone. Arithmetic carries first derivatives exactly;
/// polynomials differentiate with no truncation error at all.
class DualScalar {
public:
  DualScalar(double re = 0.0, double du = 0.0) : re_(re), du_(du) {}

  double re() const { return re_; }
  double du() const { return du_; }

  /// The evaluation seed x + eps.
  static DualScalar seeded(double x) { return {x, 1.0}; }

  DualScalar operator-() const { return {-re_, -du_}; }

  friend DualScalar operator+(DualScalar a, DualScalar b) {
    return {a.re_ + b.re_, a.du_ + b.du_};
  }
  friend DualScalar operator-(DualScalar a, DualScalar b) {
    return {a.re_ - b.re_, a.du_ - b.du_};
  }
  friend DualScalar operator*(DualScalar a, DualScalar b) {
    return {a.re_ * b.re_, a.re_ * b.du_ + a.du_ * b.re_};
  }
  friend DualScalar operator/(DualScalar a, DualScalar b) {
    if (b.re_ == 0.0) throw DomainError("division by zero", b.re_);
    return {a.re_ / b.re_, (a.du_ * b.re_ - a.re_ * b.du_) / (b.re_ * b.re_)};
  }

private:
  double re_, du_;
};

/// f lifted by f(a + a' eps) = f(a) + f'(a) a' eps.
inline DualScalar lift(DualScalar x, double value, double deriv) {
  return {value, deriv * x.du()};
}

inline DualScalar sin(DualScalar x) { return lift(x, std::sin(x.re()), std::cos(x.re())); }
inline DualScalar cos(DualScalar x) { return lift(x, std::cos(x.re()), -std::sin(x.re())); }
inline DualScalar tan(DualScalar x) {
  const double c = std::cos(x.re());
  if (c == 0.0) throw DomainError("tan at a pole", x.re());
  return lift(x, std::tan(x.re()), 1.0 / (c * c));
}
inline DualScalar exp(DualScalar x) {
  const double e = std::exp(x.re());
  return lift(x, e, e);
}
inline DualScalar log(DualScalar x) {
  if (x.re() <= 0.0) throw DomainError("log of a non-positive value", x.re());
  return lift(x, std::log(x.re()), 1.0 / x.re());
}
inline DualScalar sqrt(DualScalar x) {
  if (x.re() < 0.0) throw DomainError("sqrt of a negative value", x.re());
  if (x.re() == 0.0) throw DomainError("sqrt derivative at zero", x.re());
  const double s = std::sqrt(x.re());
  return lift(x, s, 0.5 / s);
}

/// Integer power by repeated multiplication: exact on exactly-representable
/// inputs, so polynomial derivatives come out bit-for-bit.
inline DualScalar pow_int(DualScalar x, int k) {
  if (k < 0) return DualScalar(1.0) / pow_int(x, -k);
  DualScalar out(1.0);
  for (int i = 0; i < k; ++i) out = out * x;
  return out;
}

inline DualScalar pow(DualScalar x, double y) {
  if (y == static_cast<long long>(y) && std::abs(y) <= 64) {
    return pow_int(x, static_cast<int>(y));
  }
  if (x.re() <= 0.0) throw DomainError("pow of a non-positive base", x.re());
  const double v = std::pow(x.re(), y);
  return lift(x, v, y * std::pow(x.re(), y - 1.0));
}

inline DualScalar pow(DualScalar x, DualScalar y) {
  if (y.du() == 0.0) return pow(x, y.re());
  if (x.re() <= 0.0) throw DomainError("pow of a non-positive base", x.re());
  return exp(y * log(x));  // x^y = e^{y ln x}
}

// ---------------------------------------------------------------------------

/// a + sum_i a'_i eps_i with every product eps_i eps_j truncated to zero:
/// the ideal n-vectors of PGA as independent nilpotent directions, one per
/// variable. Carries a full gradient in one pass.
class MultiDual {
public:
  MultiDual() = default;
  MultiDual(double re, std::size_t n) : re_(re), du_(n, 0.0) {}
  static MultiDual seeded(double x, std::size_t n, std::size_t i) {
    MultiDual out(x, n);
    out.du_[i] = 1.0;
    return out;
  }
  static MultiDual constant(double x, std::size_t n) { return MultiDual(x, n); }

  double re() const { return re_; }
  const std::vector<double>& du() const { return du_; }
  std::size_t vars() const { return du_.size(); }

  MultiDual operator-() const {
    MultiDual out(-re_, du_.size());
    for (std::size_t i = 0; i < du_.size(); ++i) out.du_[i] = -du_[i];
    return out;
  }

  friend MultiDual operator+(const MultiDual& a, const MultiDual& b) {
    MultiDual out(a.re_ + b.re_, a.size_checked(b));
    for (std::size_t i = 0; i < out.du_.size(); ++i) out.du_[i] = a.du_[i] + b.du_[i];
    return out;
  }
  friend MultiDual operator-(const MultiDual& a, const MultiDual& b) {
    MultiDual out(a.re_ - b.re_, a.size_checked(b));
    for (std::size_t i = 0; i < out.du_.size(); ++i) out.du_[i] = a.du_[i] - b.du_[i];
    return out;
  }
  friend MultiDual operator*(const MultiDual& a, const MultiDual& b) {
    MultiDual out(a.re_ * b.re_, a.size_checked(b));
    for (std::size_t i = 0; i < out.du_.size(); ++i) {
      out.du_[i] = a.re_ * b.du_[i] + a.du_[i] * b.re_;
    }
    return out;
  }
  friend MultiDual operator/(const MultiDual& a, const MultiDual& b) {
    if (b.re_ == 0.0) throw DomainError("division by zero", b.re_);
    MultiDual out(a.re_ / b.re_, a.size_checked(b));
    for (std::size_t i = 0; i < out.du_.size(); ++i) {
      out.du_[i] = (a.du_[i] * b.re_ - a.re_ * b.du_[i]) / (b.re_ * b.re_);
    }
    return out;
  }

  MultiDual lifted(double value, double deriv) const {
    MultiDual out(value, du_.size());
    for (std::size_t i = 0; i < du_.size(); ++i) out.du_[i] = deriv * du_[i];
    return out;
  }

private:
  std::size_t size_checked(const MultiDual& o) const {
    if (du_.size() != o.du_.size()) {
      throw std::invalid_argument("MultiDual: mixed variable counts");
    }
    return du_.size();
  }

  double re_ = 0.0;
  std::vector<double> du_;
};

inline MultiDual sin(const MultiDual& x) { return x.lifted(std::sin(x.re()), std::cos(x.re())); }
inline MultiDual cos(const MultiDual& x) { return x.lifted(std::cos(x.re()), -std::sin(x.re())); }
inline MultiDual tan(const MultiDual& x) {
  const double c = std::cos(x.re());
  if (c == 0.0) throw DomainError("tan at a pole", x.re());
  return x.lifted(std::tan(x.re()), 1.0 / (c * c));
}
inline MultiDual exp(const MultiDual& x) {
  const double e = std::exp(x.re());
  return x.lifted(e, e);
}
inline MultiDual log(const MultiDual& x) {
  if (x.re() <= 0.0) throw DomainError("log of a non-positive value", x.re());
  return x.lifted(std::log(x.re()), 1.0 / x.re());
}
inline MultiDual sqrt(const MultiDual& x) {
  if (x.re() < 0.0) throw DomainError("sqrt of a negative value", x.re());
  if (x.re() == 0.0) throw DomainError("sqrt derivative at zero", x.re());
  const double s = std::sqrt(x.re());
  return x.lifted(s, 0.5 / s);
}
inline MultiDual pow_int(const MultiDual& x, int k) {
  if (k < 0) return MultiDual(1.0, x.vars()) / pow_int(x, -k);
  MultiDual out(1.0, x.vars());
  for (int i = 0; i < k; ++i) out = out * x;
  return out;
}
inline MultiDual pow(const MultiDual& x, double y) {
  if (y == static_cast<long long>(y) && std::abs(y) <= 64) {
    return pow_int(x, static_cast<int>(y));
  }
  if (x.re() <= 0.0) throw DomainError("pow of a non-positive base", x.re());
  return x.lifted(std::pow(x.re(), y), y * std::pow(x.re(), y - 1.0));
}
inline MultiDual pow(const MultiDual& x, const MultiDual& y) {
  bool const_exp = true;
  for (double d : y.du()) const_exp = const_exp && d == 0.0;
  if (const_exp) return pow(x, y.re());
  if (x.re() <= 0.0) throw DomainError("pow of a non-positive base", x.re());
  return exp(y * log(x));
}

// ---------------------------------------------------------------------------

/// d/dx f at x, exactly for polynomial programs.
template <typename F>
double derivative(F&& f, double x) {
  return f(DualScalar::seeded(x)).du();
}

/// Gradient of f : R^n -> R in a single seeded pass.
template <typename F>
std::vector<double> gradient(F&& f, const std::vector<double>& x) {
  std::vector<MultiDual> args;
  args.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    args.push_back(MultiDual::seeded(x[i], x.size(), i));
  }
  return f(args).du();
}

}  // namespace pga
