#include "had/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

#include "had/error.hpp"

namespace had {

namespace {

int total_degree(const Exponent& e) {
  return static_cast<int>(std::accumulate(e.begin(), e.end(), std::uint64_t{0}));
}

}  // namespace

MultiPoly::MultiPoly(const PrimeField& field, std::size_t nvars, std::vector<Term> terms) : nvars_(nvars) {
  for (const auto& t : terms) {
    if (t.exponent.size() != nvars) throw Error(Errc::ArityMismatch, "term arity differs from variable count");
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().exponent == t.exponent) {
      terms_.back().coeff = field.add(terms_.back().coeff, t.coeff);
    } else {
      terms_.push_back(std::move(t));
    }
  }
  std::erase_if(terms_, [](const Term& t) { return t.coeff.is_zero(); });
  for (const auto& t : terms_) degree_ = std::max(degree_, total_degree(t.exponent));
}

MultiPoly MultiPoly::constant(const PrimeField& field, std::size_t nvars, FieldElem c) {
  return MultiPoly(field, nvars, {Term{Exponent(nvars, 0), c}});
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
  MultiPoly p(nvars);
  Exponent e(nvars, 0);
  e.at(index) = 1;
  p.terms_.push_back(Term{std::move(e), FieldElem{1}});
  p.degree_ = 1;
  return p;
}

bool MultiPoly::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [this](const Term& t) { return total_degree(t.exponent) == degree_; });
}

MultiPoly add(const PrimeField& field, const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != b.nvars()) throw Error(Errc::ArityMismatch, "adding polynomials in different rings");
  std::vector<Term> terms = a.terms();
  terms.insert(terms.end(), b.terms().begin(), b.terms().end());
  return MultiPoly(field, a.nvars(), std::move(terms));
}

MultiPoly scale(const PrimeField& field, const MultiPoly& a, FieldElem c) {
  std::vector<Term> terms = a.terms();
  for (auto& t : terms) t.coeff = field.mul(t.coeff, c);
  return MultiPoly(field, a.nvars(), std::move(terms));
}

MultiPoly sub(const PrimeField& field, const MultiPoly& a, const MultiPoly& b) {
  return add(field, a, scale(field, b, field.neg(field.one())));
}

MultiPoly mul(const PrimeField& field, const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != b.nvars()) throw Error(Errc::ArityMismatch, "multiplying polynomials in different rings");
  std::map<Exponent, FieldElem> acc;
  Exponent e(a.nvars());
  for (const auto& s : a.terms()) {
    for (const auto& t : b.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = s.exponent[i] + t.exponent[i];
      auto [it, inserted] = acc.try_emplace(e, FieldElem{});
      it->second = field.add(it->second, field.mul(s.coeff, t.coeff));
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [exp, c] : acc) terms.push_back(Term{exp, c});
  return MultiPoly(field, a.nvars(), std::move(terms));
}

MultiPoly pow(const PrimeField& field, const MultiPoly& a, std::uint32_t e) {
  MultiPoly result = MultiPoly::constant(field, a.nvars(), field.one());
  MultiPoly base = a;
  while (e != 0) {
    if (e & 1) result = mul(field, result, base);
    e >>= 1;
    if (e != 0) base = mul(field, base, base);
  }
  return result;
}

MultiPoly derivative(const PrimeField& field, const MultiPoly& f, std::size_t var) {
  if (var >= f.nvars()) throw Error(Errc::ArityMismatch, "derivative variable out of range");
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    if (t.exponent[var] == 0) continue;
    Term d = t;
    d.coeff = field.mul(t.coeff, field.from_uint(t.exponent[var]));
    --d.exponent[var];
    terms.push_back(std::move(d));
  }
  return MultiPoly(field, f.nvars(), std::move(terms));
}

FieldElem evaluate(const PrimeField& field, const MultiPoly& f, std::span<const FieldElem> point) {
  if (point.size() != f.nvars()) throw Error(Errc::ArityMismatch, "point length differs from variable count");
  FieldElem sum = field.zero();
  for (const auto& t : f.terms()) {
    FieldElem v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i) {
      if (t.exponent[i] != 0) v = field.mul(v, field.pow(point[i], t.exponent[i]));
    }
    sum = field.add(sum, v);
  }
  return sum;
}

Matrix jacobian(const PrimeField& field, std::span<const MultiPoly> polys, std::span<const FieldElem> point) {
  const std::size_t m = point.size();
  Matrix jac(polys.size(), m);
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (polys[i].nvars() != m) throw Error(Errc::ArityMismatch, "jacobian point length differs from variable count");
    for (std::size_t j = 0; j < m; ++j) jac(i, j) = evaluate(field, derivative(field, polys[i], j), point);
  }
  return jac;
}

MultiPoly substitute_linear(const PrimeField& field, const MultiPoly& f, const Matrix& a) {
  const std::size_t m = f.nvars();
  if (a.rows() != m || a.cols() != m) throw Error(Errc::ShapeMismatch, "substitution matrix must be square of side nvars");

  std::vector<MultiPoly> forms;
  forms.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < m; ++j) {
      Exponent e(m, 0);
      e[j] = 1;
      terms.push_back(Term{std::move(e), a(i, j)});
    }
    forms.emplace_back(field, m, std::move(terms));
  }

  // powers[i][k] = forms[i]^k, filled on demand.
  std::vector<std::vector<MultiPoly>> powers(m);
  auto power_of = [&](std::size_t i, std::uint32_t k) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(MultiPoly::constant(field, m, field.one()));
    while (cache.size() <= k) cache.push_back(mul(field, cache.back(), forms[i]));
    return cache[k];
  };

  MultiPoly result(m);
  for (const auto& t : f.terms()) {
    MultiPoly product = MultiPoly::constant(field, m, t.coeff);
    for (std::size_t i = 0; i < m; ++i) {
      if (t.exponent[i] != 0) product = mul(field, product, power_of(i, t.exponent[i]));
    }
    result = add(field, result, product);
  }
  return result;
}

MultiPoly shift_variables(const PrimeField& field, const MultiPoly& f, std::size_t nvars, std::size_t offset) {
  if (offset + f.nvars() > nvars) throw Error(Errc::ArityMismatch, "variable shift out of range");
  std::vector<Term> terms;
  terms.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    Exponent e(nvars, 0);
    std::copy(t.exponent.begin(), t.exponent.end(), e.begin() + static_cast<std::ptrdiff_t>(offset));
    terms.push_back(Term{std::move(e), t.coeff});
  }
  return MultiPoly(field, nvars, std::move(terms));
}

}  // namespace had
