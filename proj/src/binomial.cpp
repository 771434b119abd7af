#include "had/binomial.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "had/error.hpp"

namespace had {

namespace {

constexpr int kVerificationSamples = 50;

void monomials_rec(std::size_t var, int remaining, Exponent& current, std::vector<Exponent>& out) {
  if (var + 1 == current.size()) {
    current[var] = static_cast<std::uint32_t>(remaining);
    out.push_back(current);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    current[var] = static_cast<std::uint32_t>(e);
    monomials_rec(var + 1, remaining - e, current, out);
  }
  current[var] = 0;
}

FieldElem monomial_value(const PrimeField& field, const Exponent& e, const ProjectivePoint& p) {
  FieldElem v = field.one();
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0) v = field.mul(v, field.pow(p[i], e[i]));
  return v;
}

// Points of y with every coordinate nonzero.
std::vector<ProjectivePoint> off_delta_samples(const Variety& y, int count, SeedStream rng) {
  std::vector<ProjectivePoint> points;
  const int cap = kSampleRetries * std::max(count, 1);
  for (int attempt = 0; attempt < cap && static_cast<int>(points.size()) < count; ++attempt) {
    ProjectivePoint p = sample_point(y, rng.split(static_cast<std::uint64_t>(attempt)));
    if (!p.on_delta()) points.push_back(std::move(p));
  }
  if (static_cast<int>(points.size()) < count) {
    throw Error(Errc::SamplingExhausted, y.name() + ": could not draw points off the coordinate hyperplanes");
  }
  return points;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

int BinomialWitness::degree() const { return static_cast<int>(std::accumulate(a.begin(), a.end(), 0u)); }

std::vector<Exponent> monomials_of_degree(std::size_t nvars, int degree) {
  std::vector<Exponent> out;
  if (nvars == 0 || degree < 0) return out;
  Exponent current(nvars, 0);
  monomials_rec(0, degree, current, out);
  return out;
}

int default_binomial_samples(std::size_t nvars, int max_degree) {
  const std::uint64_t monomials = binomial(nvars - 1 + static_cast<std::uint64_t>(max_degree), nvars - 1);
  const std::uint64_t pairs = std::max<std::uint64_t>(monomials * (monomials - 1) / 2, 1);
  const int log = static_cast<int>(std::bit_width(pairs - 1));
  return std::min(64, 2 + log);
}

bool verify_witness(const Variety& y, const BinomialWitness& w, int count, SeedStream rng) {
  const PrimeField& field = y.field();
  for (const auto& p : off_delta_samples(y, count, rng)) {
    const FieldElem lhs = monomial_value(field, w.a, p);
    const FieldElem rhs = field.mul(w.lambda, monomial_value(field, w.b, p));
    if (lhs != rhs) return false;
  }
  return true;
}

BinomialResult binomial_containment(const Variety& y, int max_degree, std::optional<int> samples, SeedStream rng) {
  if (max_degree < 1) throw Error(Errc::InvalidArgument, "binomial search needs max degree >= 1");
  const std::size_t nvars = y.ambient_dim() + 1;
  const auto support = coordinate_support(y, 8, rng.split(0));
  if (!support.empty()) {
    throw Error(Errc::CoordinateDegenerate, y.name() + " lies in a coordinate hyperplane");
  }
  const PrimeField& field = y.field();

  BinomialResult result;
  result.max_degree = max_degree;
  result.samples = samples.value_or(default_binomial_samples(nvars, max_degree));
  if (result.samples < 1) throw Error(Errc::InvalidArgument, "binomial search needs at least one sample");
  result.verification_samples = kVerificationSamples;

  for (int d = 1; d <= max_degree; ++d) {
    const SeedStream level = rng.split(static_cast<std::uint64_t>(d));
    const auto points = off_delta_samples(y, result.samples, level.split(0));
    const auto monomials = monomials_of_degree(nvars, d);

    // Ratio to the first sample; two monomials have a constant ratio iff these keys agree.
    std::map<std::vector<FieldElem>, std::vector<std::size_t>> classes;
    std::vector<FieldElem> first_values(monomials.size());
    for (std::size_t m = 0; m < monomials.size(); ++m) {
      std::vector<FieldElem> key(points.size());
      first_values[m] = monomial_value(field, monomials[m], points.front());
      const FieldElem inv_first = field.inv(first_values[m]);
      for (std::size_t s = 0; s < points.size(); ++s)
        key[s] = field.mul(monomial_value(field, monomials[m], points[s]), inv_first);
      classes[std::move(key)].push_back(m);
    }

    std::vector<std::pair<std::size_t, std::size_t>> candidates;
    for (const auto& [key, members] : classes)
      for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) candidates.emplace_back(members[i], members[j]);
    std::sort(candidates.begin(), candidates.end());

    std::uint64_t tag = 0;
    for (const auto& [i, j] : candidates) {
      BinomialWitness w{monomials[i], monomials[j], field.div(first_values[i], first_values[j])};
      if (verify_witness(y, w, kVerificationSamples, level.split(1).split(tag++))) {
        result.witness = std::move(w);
        return result;
      }
    }
  }
  return result;
}

std::string format_witness(const PrimeField& field, const BinomialWitness& w) {
  const auto names = default_variable_names(w.a.size());
  const std::int64_t lambda = signed_value(field, w.lambda);
  std::string out = format_monomial(w.a, names);
  out += lambda < 0 ? " + " : " - ";
  out += std::to_string(lambda < 0 ? -lambda : lambda) + "*" + format_monomial(w.b, names);
  return out;
}

}  // namespace had
