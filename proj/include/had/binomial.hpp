#pragma once

#include <optional>
#include <string>
#include <vector>

#include "had/poly.hpp"
#include "had/variety.hpp"

namespace had {

/// x^a - lambda * x^b, |a| = |b|, a != b, lambda != 0, vanishing on the variety.
struct BinomialWitness {
  Exponent a;
  Exponent b;
  FieldElem lambda;

  int degree() const;
};

struct BinomialResult {
  std::optional<BinomialWitness> witness;  ///< nullopt means NotFoundUpTo(max_degree)
  int max_degree = 0;
  int samples = 0;
  int verification_samples = 0;
};

/// Degree-d monomials in `nvars` variables, lexicographically descending
/// (x0^d first).
std::vector<Exponent> monomials_of_degree(std::size_t nvars, int degree);

/// Default sample count for a scan up to degree D: 2 + ceil(log2(pairs at D)), at most 64.
int default_binomial_samples(std::size_t nvars, int max_degree);

/// Searches degrees 1..max_degree for a pair of monomials whose ratio is
/// constant on the variety. Pairs are scanned by (first index, second index)
/// in monomial order; a candidate is accepted only after it vanishes at 50
/// fresh samples. Samples for degree d depend only on (rng, d), so a witness
/// found at degree d is found again for every larger bound.
///
/// Throws Error(CoordinateDegenerate) when a coordinate vanishes on the whole
/// variety, Error(SamplingExhausted) when points off the coordinate
/// hyperplanes cannot be drawn.
BinomialResult binomial_containment(const Variety& y, int max_degree, std::optional<int> samples, SeedStream rng);

/// Witness as text, e.g. "x0*x2 - 1*x1^2".
std::string format_witness(const PrimeField& field, const BinomialWitness& w);

/// True when x^a - lambda x^b vanishes at `count` random points of y off the coordinate hyperplanes.
bool verify_witness(const Variety& y, const BinomialWitness& w, int count, SeedStream rng);

}  // namespace had
