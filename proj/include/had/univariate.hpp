#pragma once

#include <vector>

#include "had/field.hpp"
#include "had/poly.hpp"

namespace had {

/// Dense univariate polynomial, coefficients from constant term upward, no
/// trailing zeros (the zero polynomial is the empty vector).
using UniPoly = std::vector<FieldElem>;

void trim(UniPoly& f);
UniPoly uni_mul(const PrimeField& field, const UniPoly& a, const UniPoly& b);
/// Remainder of a modulo b; b must be nonzero.
UniPoly uni_mod(const PrimeField& field, UniPoly a, const UniPoly& b);
/// Monic gcd.
UniPoly uni_gcd(const PrimeField& field, UniPoly a, UniPoly b);
/// base^e modulo `modulus`.
UniPoly uni_powmod(const PrimeField& field, UniPoly base, std::uint64_t e, const UniPoly& modulus);
FieldElem uni_evaluate(const PrimeField& field, const UniPoly& f, FieldElem x);

/// Polynomial of degree < xs.size() through the points (xs[i], ys[i]); xs distinct.
UniPoly interpolate(const PrimeField& field, const std::vector<FieldElem>& xs, const std::vector<FieldElem>& ys);

/// All roots in F_p, sorted ascending. gcd with x^p - x isolates the product
/// of distinct linear factors, which is then split by random
/// (x + a)^((p-1)/2) - 1 gcds. Throws Error(ZeroPolynomial) for f = 0.
std::vector<FieldElem> univariate_roots(const PrimeField& field, UniPoly f, SeedStream rng);

/// Same, for a one-variable MultiPoly. Throws Error(ArityMismatch) otherwise.
std::vector<FieldElem> univariate_roots(const PrimeField& field, const MultiPoly& f, SeedStream rng);

}  // namespace had
