#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "had/field.hpp"
#include "had/matrix.hpp"

namespace had {

using Exponent = std::vector<std::uint32_t>;

struct Term {
  Exponent exponent;
  FieldElem coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse multivariate polynomial over a prime field.
///
/// Terms are kept sorted by exponent vector (lexicographic ascending), with
/// no duplicates and no zero coefficients, so structural equality is
/// polynomial equality. Arithmetic takes the field explicitly.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

  /// Normalizes: merges duplicate exponents and drops zero coefficients.
  MultiPoly(const PrimeField& field, std::size_t nvars, std::vector<Term> terms);

  static MultiPoly constant(const PrimeField& field, std::size_t nvars, FieldElem c);
  static MultiPoly variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Maximum total degree; -1 for the zero polynomial.
  int degree() const { return degree_; }

  /// True when every term has the same total degree (the zero polynomial counts).
  bool is_homogeneous() const;

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
  int degree_ = -1;
};

MultiPoly add(const PrimeField& field, const MultiPoly& a, const MultiPoly& b);
MultiPoly sub(const PrimeField& field, const MultiPoly& a, const MultiPoly& b);
MultiPoly mul(const PrimeField& field, const MultiPoly& a, const MultiPoly& b);
MultiPoly scale(const PrimeField& field, const MultiPoly& a, FieldElem c);
MultiPoly pow(const PrimeField& field, const MultiPoly& a, std::uint32_t e);

/// Formal partial derivative with respect to variable `var`.
MultiPoly derivative(const PrimeField& field, const MultiPoly& f, std::size_t var);

/// Throws Error(ArityMismatch) if point.size() != f.nvars().
FieldElem evaluate(const PrimeField& field, const MultiPoly& f, std::span<const FieldElem> point);

/// Matrix of dF_i/dv_j at `point`, rows indexed by polynomial, columns by variable.
Matrix jacobian(const PrimeField& field, std::span<const MultiPoly> polys, std::span<const FieldElem> point);

/// f(A x), expanded. A must be square of side f.nvars().
MultiPoly substitute_linear(const PrimeField& field, const MultiPoly& f, const Matrix& a);

/// Re-embeds `f` into a ring with `nvars` variables, variable i of f becoming
/// variable offset + i.
MultiPoly shift_variables(const PrimeField& field, const MultiPoly& f, std::size_t nvars, std::size_t offset);

/// Default names x0, x1, ... for `count` variables.
std::vector<std::string> default_variable_names(std::size_t count);

/// Grammar: integers, identifiers from `names`, binary + - *, unary -, ^ with
/// a non-negative integer exponent, parentheses. Integer literals are reduced
/// modulo p. Throws SyntaxError (with byte position) or Error(UnknownVariable).
MultiPoly parse(const PrimeField& field, std::string_view text, std::span<const std::string> names);

/// Canonical text: terms by descending total degree then descending exponent,
/// coefficients printed in the symmetric range (-p/2, p/2].
std::string format(const PrimeField& field, const MultiPoly& f, std::span<const std::string> names);

/// Formats a monomial x^e (without coefficient) as "x0*x2" / "x1^2"; "1" for e = 0.
std::string format_monomial(const Exponent& e, std::span<const std::string> names);

/// Signed representative in (-p/2, p/2].
std::int64_t signed_value(const PrimeField& field, FieldElem c);

}  // namespace had
