#include "pgakit/multivector.hpp"

namespace pga {

Multivector exp_series(const Multivector& a, int terms) {
  if (terms < 1) throw std::invalid_argument("exp_series: need at least one term");
  Multivector term = Multivector::scalar(a.algebra(), 1.0);
  Multivector sum = term;
  for (int k = 1; k < terms; ++k) {
    term = geometric_product(term, a) * (1.0 / k);
    sum += term;
  }
  return sum;
}

}  // namespace pga
