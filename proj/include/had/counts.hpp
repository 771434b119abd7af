#pragma once

#include <cstdint>
#include <string>

namespace had {

/// Parameter count for degree-d surfaces of P^3 that are Hadamard products of
/// two curves, against the dimension of the space of all degree-d surfaces.
///
/// For d >= 5 the family is two planes (3 + 3) and two plane curves of degree
/// d, each in a projective space of dimension binom(d+2,2) - 1, giving
/// 6 + (d+2)(d+1) - 2. For d = 4 the second curve is a projective image of the
/// first, so it costs dim PGL(3) = 8 instead of 14: 3 + 3 + 14 + 8.
struct ParamCountReport {
  int d = 0;
  std::int64_t dim_family = 0;
  std::int64_t dim_ambient = 0;  ///< binom(d+3,3) - 1
  std::int64_t margin = 0;       ///< dim_ambient - dim_family
  bool holds = false;            ///< dim_family < dim_ambient

  std::string summary() const;
};

/// Exact binomial coefficient; throws on overflow of int64.
std::int64_t binomial_coefficient(std::int64_t n, std::int64_t k);

/// Throws Error(DegreeTooSmall) for d <= 3.
ParamCountReport surface_parameter_counts(int d);

}  // namespace had
