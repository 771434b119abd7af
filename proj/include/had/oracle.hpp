#pragma once

#include <cstdint>
#include <span>

#include "had/variety.hpp"

namespace had {

/// Enumeration limit for the point-count oracle.
inline constexpr std::uint64_t kOracleLimit = 100'000'000;

struct PointCount {
  std::uint64_t q = 0;
  std::uint64_t tuples = 0;  ///< parameter tuples (or factor-point tuples) enumerated
  std::uint64_t count = 0;   ///< distinct image points
  int dim_estimate = 0;      ///< nearest integer to log(count) / log(q)
};

/// Exhaustive image count of a parametrized variety over its (small) field.
/// Each parameter group is enumerated chart by chart, so every projective
/// parameter point is visited once. Throws Error(TooLarge) past kOracleLimit tuples.
PointCount point_count_dim(const Variety& x);

/// Image count of X_1 * ... * X_k: enumerates the distinct F_q-points of each
/// factor first, then every coordinatewise product. Agrees with
/// point_count_dim on the product parametrization, at a fraction of the cost.
PointCount point_count_product(std::span<const Variety> factors);

/// q^d / 8 <= count <= 8 q^d.
bool within_window(std::uint64_t count, std::uint64_t q, int d);

}  // namespace had
