#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace pga {

/// Bitmask over basis 1-vector indices: bit i set means e_i is a factor.
/// Canonical blade sign is fixed by ascending-index factor order.
using BladeMask = std::uint32_t;

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// A Clifford algebra Cl(p,m,z) over basis 1-vectors e_0 .. e_{dim-1}.
///
/// The degenerate generators come first, so euclidean PGA Cl*(n,0,1) has
/// e_0^2 = 0 and e_1^2 = .. = e_n^2 = 1. Instances are immutable and shared;
/// all product signs are precomputed at construction.
class Algebra {
public:
  static constexpr int kMaxDim = 5;
  static constexpr std::size_t kMaxBlades = std::size_t{1} << kMaxDim;

  static AlgebraPtr create(int plus, int minus, int zero);

  /// The euclidean plane algebra Cl*(2,0,1) (shared instance).
  static const AlgebraPtr& pga2();
  /// The euclidean space algebra Cl*(3,0,1) (shared instance).
  static const AlgebraPtr& pga3();

  int p() const { return p_; }
  int m() const { return m_; }
  int z() const { return z_; }
  int dim() const { return dim_; }
  std::size_t blade_count() const { return blade_count_; }

  /// Square of the basis 1-vector e_i under the metric (0 or +-1).
  int basis_square(int i) const { return metric_[static_cast<std::size_t>(i)]; }

  static int grade(BladeMask b) { return std::popcount(b); }

  BladeMask pseudoscalar() const { return static_cast<BladeMask>(blade_count_ - 1); }

  /// Sign of the geometric product of canonical blades a and b
  /// (the result blade is a^b); 0 when a repeated index squares to zero.
  int product_sign(BladeMask a, BladeMask b) const {
    return table_[a * blade_count_ + b];
  }

  /// Sign s such that poincare_dual(blade b) = s * complement(b),
  /// fixed by b ^ dual(b) = +I.
  int dual_sign(BladeMask b) const { return dual_sign_[b]; }

  /// "1" for the scalar blade, otherwise e.g. "e0", "e13", "e0123".
  std::string blade_name(BladeMask b) const;
  /// Inverse of blade_name; throws std::invalid_argument on bad names.
  BladeMask blade_from_name(const std::string& name) const;

  /// Structural equality (signature and full product table).
  bool same_as(const Algebra& other) const;

  /// Copy of this algebra with the sign of one Cayley cell (a,b) flipped.
  /// Test fixture: lets the verification suites prove they would catch a
  /// corrupted product table. Never used on any normal code path.
  AlgebraPtr with_flipped_product_sign(BladeMask a, BladeMask b) const;

  std::string name() const { return name_; }

private:
  Algebra() = default;

  int p_ = 0, m_ = 0, z_ = 0, dim_ = 0;
  std::size_t blade_count_ = 0;
  std::array<std::int8_t, kMaxDim> metric_{};
  std::vector<std::int8_t> table_;      // blade_count^2 product signs
  std::vector<std::int8_t> dual_sign_;  // blade_count complement signs
  std::string name_;
};

/// Parity of the permutation that merges the factors of blade b into
/// ascending order behind those of blade a (+1 or -1).
int reorder_sign(BladeMask a, BladeMask b);

}  // namespace pga
