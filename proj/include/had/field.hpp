#pragma once

#include <compare>
#include <cstdint>
#include <ostream>

#include "had/random.hpp"

namespace had {

/// Residue class in [0, p). The modulus lives in the `PrimeField` that
/// produced the element; mixing elements of different fields is a logic error.
struct FieldElem {
  std::uint64_t value = 0;

  constexpr FieldElem() = default;
  constexpr explicit FieldElem(std::uint64_t v) : value(v) {}

  constexpr bool is_zero() const { return value == 0; }
  friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

inline std::ostream& operator<<(std::ostream& os, FieldElem a) { return os << a.value; }

/// Arithmetic in F_p for an odd prime p < 2^63.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }

  FieldElem zero() const { return FieldElem{0}; }
  FieldElem one() const { return FieldElem{1}; }

  /// Reduces an arbitrary signed integer into the field.
  FieldElem from_int(std::int64_t x) const;
  FieldElem from_uint(std::uint64_t x) const { return FieldElem{x % p_}; }

  FieldElem add(FieldElem a, FieldElem b) const {
    std::uint64_t s = a.value + b.value;
    return FieldElem{s >= p_ ? s - p_ : s};
  }
  FieldElem sub(FieldElem a, FieldElem b) const {
    return FieldElem{a.value >= b.value ? a.value - b.value : a.value + p_ - b.value};
  }
  FieldElem neg(FieldElem a) const { return FieldElem{a.value == 0 ? 0 : p_ - a.value}; }
  FieldElem mul(FieldElem a, FieldElem b) const {
    if (p_ < (std::uint64_t{1} << 32)) return FieldElem{a.value * b.value % p_};
    return FieldElem{static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a.value) * b.value % p_)};
  }
  FieldElem pow(FieldElem a, std::uint64_t e) const;

  /// Throws Error(ZeroInverse) for a = 0.
  FieldElem inv(FieldElem a) const;
  FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }

  FieldElem random(SeedStream& rng) const { return FieldElem{rng.below(p_)}; }
  FieldElem random_nonzero(SeedStream& rng) const { return FieldElem{1 + rng.below(p_ - 1)}; }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_;
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

/// Deterministic Miller-Rabin; exact for every n < 2^64.
bool is_prime(std::uint64_t n);

/// Prime in [2^(bits-1), 2^bits), deterministic in the stream. 3 <= bits <= 62.
std::uint64_t random_prime(unsigned bits, SeedStream rng);

}  // namespace had
