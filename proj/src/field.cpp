#include "had/field.hpp"

#include <array>
#include <string>

#include "had/error.hpp"

namespace had {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  a %= m;
  while (e != 0) {
    if (e & 1) result = mulmod(result, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return result;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p < 3 || p >= (std::uint64_t{1} << 63) || !is_prime(p)) {
    throw Error(Errc::InvalidArgument, "modulus " + std::to_string(p) + " is not an odd prime below 2^63");
  }
}

FieldElem PrimeField::from_int(std::int64_t x) const {
  const auto m = static_cast<std::int64_t>(p_);
  std::int64_t r = x % m;
  if (r < 0) r += m;
  return FieldElem{static_cast<std::uint64_t>(r)};
}

FieldElem PrimeField::pow(FieldElem a, std::uint64_t e) const {
  FieldElem result = one();
  while (e != 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

FieldElem PrimeField::inv(FieldElem a) const {
  if (a.is_zero()) throw Error(Errc::ZeroInverse, "inverse of zero");
  // Extended Euclid on signed 128-bit to stay exact for 63-bit moduli.
  __int128 t = 0, new_t = 1;
  __int128 r = p_, new_r = a.value;
  while (new_r != 0) {
    const __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return FieldElem{static_cast<std::uint64_t>(t)};
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t b : kBases) {
    if (n % b == 0) return n == b;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kBases) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t random_prime(unsigned bits, SeedStream rng) {
  if (bits < 3 || bits > 62) {
    throw Error(Errc::InvalidArgument, "prime bit length must lie in [3, 62], got " + std::to_string(bits));
  }
  const std::uint64_t low = std::uint64_t{1} << (bits - 1);
  for (;;) {
    const std::uint64_t candidate = (low + rng.below(low)) | 1;
    if (is_prime(candidate)) return candidate;
  }
}

}  // namespace had
