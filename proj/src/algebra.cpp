#include "pgakit/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace pga {

int reorder_sign(BladeMask a, BladeMask b) {
  // Counts pairs (i in a, j in b) with i > j; each costs one transposition.
  int swaps = 0;
  BladeMask t = a >> 1;
  while (t != 0) {
    swaps += std::popcount(t & b);
    t >>= 1;
  }
  return (swaps & 1) ? -1 : 1;
}

AlgebraPtr Algebra::create(int plus, int minus, int zero) {
  if (plus < 0 || minus < 0 || zero < 0 || plus + minus + zero < 1 ||
      plus + minus + zero > kMaxDim) {
    throw std::invalid_argument("Algebra::create: bad signature");
  }
  auto alg = std::shared_ptr<Algebra>(new Algebra());
  alg->p_ = plus;
  alg->m_ = minus;
  alg->z_ = zero;
  alg->dim_ = plus + minus + zero;
  alg->blade_count_ = std::size_t{1} << alg->dim_;

  // Degenerate generators first, then +1, then -1.
  int idx = 0;
  for (int i = 0; i < zero; ++i) alg->metric_[static_cast<std::size_t>(idx++)] = 0;
  for (int i = 0; i < plus; ++i) alg->metric_[static_cast<std::size_t>(idx++)] = 1;
  for (int i = 0; i < minus; ++i) alg->metric_[static_cast<std::size_t>(idx++)] = -1;

  const std::size_t n = alg->blade_count_;
  alg->table_.assign(n * n, 0);
  for (BladeMask a = 0; a < n; ++a) {
    for (BladeMask b = 0; b < n; ++b) {
      int sign = reorder_sign(a, b);
      BladeMask repeated = a & b;
      while (repeated != 0) {
        const int i = std::countr_zero(repeated);
        sign *= alg->metric_[static_cast<std::size_t>(i)];
        repeated &= repeated - 1;
      }
      alg->table_[a * n + b] = static_cast<std::int8_t>(sign);
    }
  }

  const BladeMask full = alg->pseudoscalar();
  alg->dual_sign_.assign(n, 0);
  for (BladeMask b = 0; b < n; ++b) {
    alg->dual_sign_[b] = static_cast<std::int8_t>(reorder_sign(b, full ^ b));
  }

  alg->name_ = "cl(" + std::to_string(plus) + "," + std::to_string(minus) + "," +
               std::to_string(zero) + ")";
  return alg;
}

const AlgebraPtr& Algebra::pga2() {
  static const AlgebraPtr alg = create(2, 0, 1);
  return alg;
}

const AlgebraPtr& Algebra::pga3() {
  static const AlgebraPtr alg = create(3, 0, 1);
  return alg;
}

std::string Algebra::blade_name(BladeMask b) const {
  if (b == 0) return "1";
  std::string out = "e";
  for (int i = 0; i < dim_; ++i) {
    if (b & (BladeMask{1} << i)) out += static_cast<char>('0' + i);
  }
  return out;
}

BladeMask Algebra::blade_from_name(const std::string& name) const {
  if (name == "1") return 0;
  if (name.size() < 2 || name[0] != 'e') {
    throw std::invalid_argument("bad blade name: " + name);
  }
  BladeMask b = 0;
  int prev = -1;
  for (std::size_t k = 1; k < name.size(); ++k) {
    const char c = name[k];
    if (c < '0' || c > '9') throw std::invalid_argument("bad blade name: " + name);
    const int i = c - '0';
    if (i >= dim_ || i <= prev) throw std::invalid_argument("bad blade name: " + name);
    b |= BladeMask{1} << i;
    prev = i;
  }
  return b;
}

bool Algebra::same_as(const Algebra& other) const {
  if (this == &other) return true;
  return p_ == other.p_ && m_ == other.m_ && z_ == other.z_ && table_ == other.table_;
}

AlgebraPtr Algebra::with_flipped_product_sign(BladeMask a, BladeMask b) const {
  auto alg = std::shared_ptr<Algebra>(new Algebra(*this));
  auto& cell = alg->table_[a * blade_count_ + b];
  if (cell == 0) {
    throw std::invalid_argument("with_flipped_product_sign: cell is zero");
  }
  cell = static_cast<std::int8_t>(-cell);
  alg->name_ += "/corrupted";
  return alg;
}

}  // namespace pga
