#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pgakit/algebra.hpp"

namespace pga::verify {

struct RowResult {
  std::string name;
  int trials = 0;
  double max_err = 0.0;
  bool pass = false;
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  int trials_per_row = 0;
  double tolerance = 0.0;
  std::vector<RowResult> rows;
  bool all_pass = false;
};

/// Every row of the 2D construction table (plus the pair-product and
/// projection identities) evaluated on random normalized configurations and
/// compared against the coordinate-geometry oracle. A trial that throws
/// counts as an infinite error, so a corrupted algebra cannot slip through.
Report check_table2d(int trials, std::uint64_t seed,
                     const AlgebraPtr& alg = Algebra::pga2());

/// Every row of the 3D construction table, the worked line-through-point
/// construction, and the skew-line product invariants.
Report check_table3d(int trials, std::uint64_t seed,
                     const AlgebraPtr& alg = Algebra::pga3());

std::string report_to_json(const Report& report);

}  // namespace pga::verify
