#include "had/counts.hpp"

#include "had/error.hpp"

namespace had {

std::int64_t binomial_coefficient(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  __int128 r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > INT64_MAX) throw Error(Errc::TooLarge, "binomial coefficient overflows");
  }
  return static_cast<std::int64_t>(r);
}

ParamCountReport surface_parameter_counts(int d) {
  if (d <= 3) throw Error(Errc::DegreeTooSmall, "surface degree must be at least 4, got " + std::to_string(d));
  ParamCountReport r;
  r.d = d;
  const std::int64_t plane_curves = binomial_coefficient(d + 2, 2) - 1;
  if (d == 4) {
    constexpr std::int64_t kPgl3 = 8;
    r.dim_family = 3 + 3 + plane_curves + kPgl3;
  } else {
    r.dim_family = 3 + 3 + 2 * plane_curves;
  }
  r.dim_ambient = binomial_coefficient(d + 3, 3) - 1;
  r.margin = r.dim_ambient - r.dim_family;
  r.holds = r.dim_family < r.dim_ambient;
  return r;
}

std::string ParamCountReport::summary() const {
  return "dim U_" + std::to_string(d) + " = " + std::to_string(dim_family) + (holds ? " < " : " >= ") +
         std::to_string(dim_ambient) + " = dim |O(" + std::to_string(d) + ")|";
}

}  // namespace had
