#include "had/univariate.hpp"

#include <algorithm>
#include <utility>

#include "had/error.hpp"

namespace had {

void trim(UniPoly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

UniPoly uni_mul(const PrimeField& field, const UniPoly& a, const UniPoly& b) {
  if (a.empty() || b.empty()) return {};
  UniPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = field.add(out[i + j], field.mul(a[i], b[j]));
  }
  trim(out);
  return out;
}

UniPoly uni_mod(const PrimeField& field, UniPoly a, const UniPoly& b) {
  if (b.empty()) throw Error(Errc::ZeroPolynomial, "division by the zero polynomial");
  trim(a);
  const FieldElem lead_inv = field.inv(b.back());
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const FieldElem factor = field.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = field.sub(a[shift + i], field.mul(factor, b[i]));
    trim(a);
  }
  return a;
}

UniPoly uni_gcd(const PrimeField& field, UniPoly a, UniPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UniPoly r = uni_mod(field, std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const FieldElem lead_inv = field.inv(a.back());
    for (auto& c : a) c = field.mul(c, lead_inv);
  }
  return a;
}

UniPoly uni_powmod(const PrimeField& field, UniPoly base, std::uint64_t e, const UniPoly& modulus) {
  UniPoly result = uni_mod(field, UniPoly{field.one()}, modulus);
  base = uni_mod(field, std::move(base), modulus);
  while (e != 0) {
    if (e & 1) result = uni_mod(field, uni_mul(field, result, base), modulus);
    e >>= 1;
    if (e != 0) base = uni_mod(field, uni_mul(field, base, base), modulus);
  }
  return result;
}

FieldElem uni_evaluate(const PrimeField& field, const UniPoly& f, FieldElem x) {
  FieldElem acc = field.zero();
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = field.add(field.mul(acc, x), *it);
  return acc;
}

UniPoly interpolate(const PrimeField& field, const std::vector<FieldElem>& xs, const std::vector<FieldElem>& ys) {
  if (xs.size() != ys.size()) throw Error(Errc::ShapeMismatch, "interpolation abscissae and values differ in length");
  UniPoly result;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    UniPoly basis{field.one()};
    FieldElem denom = field.one();
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = uni_mul(field, basis, UniPoly{field.neg(xs[j]), field.one()});
      denom = field.mul(denom, field.sub(xs[i], xs[j]));
    }
    const FieldElem scale = field.mul(ys[i], field.inv(denom));
    if (result.size() < basis.size()) result.resize(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) result[k] = field.add(result[k], field.mul(scale, basis[k]));
  }
  trim(result);
  return result;
}

namespace {

// g is monic, squarefree, and splits into distinct linear factors.
void split_linear(const PrimeField& field, const UniPoly& g, SeedStream& rng, std::vector<FieldElem>& roots) {
  if (g.size() <= 1) return;
  if (g.size() == 2) {
    roots.push_back(field.neg(g[0]));
    return;
  }
  const std::uint64_t half = (field.modulus() - 1) / 2;
  for (;;) {
    const UniPoly shifted{field.random(rng), field.one()};
    UniPoly h = uni_powmod(field, shifted, half, g);
    if (h.empty()) h.push_back(field.zero());
    h[0] = field.sub(h[0], field.one());
    trim(h);
    UniPoly d = uni_gcd(field, g, h);
    if (d.size() <= 1 || d.size() == g.size()) continue;
    // Quotient g / d by long division; remainder is zero.
    UniPoly q(g.size() - d.size() + 1);
    UniPoly rem = g;
    for (std::size_t k = q.size(); k-- > 0;) {
      q[k] = rem[k + d.size() - 1];
      for (std::size_t i = 0; i < d.size(); ++i) rem[k + i] = field.sub(rem[k + i], field.mul(q[k], d[i]));
    }
    split_linear(field, d, rng, roots);
    split_linear(field, q, rng, roots);
    return;
  }
}

}  // namespace

std::vector<FieldElem> univariate_roots(const PrimeField& field, UniPoly f, SeedStream rng) {
  trim(f);
  if (f.empty()) throw Error(Errc::ZeroPolynomial, "roots of the zero polynomial");
  if (f.size() == 1) return {};
  // x^p mod f, then gcd(f, x^p - x).
  UniPoly xp = uni_powmod(field, UniPoly{field.zero(), field.one()}, field.modulus(), f);
  if (xp.size() < 2) xp.resize(2);
  xp[1] = field.sub(xp[1], field.one());
  trim(xp);
  const UniPoly g = uni_gcd(field, f, xp);
  std::vector<FieldElem> roots;
  split_linear(field, g, rng, roots);
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<FieldElem> univariate_roots(const PrimeField& field, const MultiPoly& f, SeedStream rng) {
  if (f.nvars() != 1) throw Error(Errc::ArityMismatch, "univariate_roots needs a one-variable polynomial");
  UniPoly dense(f.is_zero() ? 0 : static_cast<std::size_t>(f.degree()) + 1);
  for (const auto& t : f.terms()) dense[t.exponent[0]] = t.coeff;
  return univariate_roots(field, std::move(dense), rng);
}

}  // namespace had
