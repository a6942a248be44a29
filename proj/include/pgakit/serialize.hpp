#pragma once

#include <string>

#include "pgakit/multivector.hpp"
#include "pgakit/rigid.hpp"

namespace pga {

/// JSON array of [blade-name, coefficient] pairs, zero blades omitted:
/// e.g. [["1",0.5],["e12",-1.0]]. Blade names use ascending indices
/// ("1", "e0", ..., "e0123").
std::string multivector_to_json(const Multivector& mv);
Multivector multivector_from_json(const std::string& json, const AlgebraPtr& alg);

/// CSV with header
/// t,g0..g7,w01,w02,w03,w23,w31,w12,energy,m01,m02,m03,m23,m31,m12
/// where g0..g7 are the even coordinates (1,e01,e02,e03,e23,e31,e12,e0123).
std::string trajectory_to_csv(const Trajectory& traj);

/// JSON form of the same data; parsing it back reproduces every double
/// bit-for-bit.
std::string trajectory_to_json(const Trajectory& traj);
Trajectory trajectory_from_json(const std::string& json,
                                const AlgebraPtr& alg = Algebra::pga3());

}  // namespace pga
