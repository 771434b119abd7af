#include "had/hadamard.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "had/error.hpp"
#include "parallel.hpp"

namespace had {

std::optional<ProjectivePoint> try_hadamard_point(const PrimeField& field, const ProjectivePoint& p,
                                                  const ProjectivePoint& q) {
  if (p.size() != q.size()) throw Error(Errc::ArityMismatch, "Hadamard product of points in different spaces");
  std::vector<FieldElem> coords(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) coords[i] = field.mul(p[i], q[i]);
  return ProjectivePoint::try_normalized(field, std::move(coords));
}

ProjectivePoint hadamard_point(const PrimeField& field, const ProjectivePoint& p, const ProjectivePoint& q) {
  auto r = try_hadamard_point(field, p, q);
  if (!r) throw Error(Errc::UndefinedProduct, "every coordinate product vanishes");
  return *std::move(r);
}

ProjectivePoint hadamard_inverse(const PrimeField& field, const ProjectivePoint& p) {
  if (p.on_delta()) throw Error(Errc::OnDelta, "point has a zero coordinate");
  std::vector<FieldElem> coords(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) coords[i] = field.inv(p[i]);
  return ProjectivePoint::normalized(field, std::move(coords));
}

ProjectivePoint hadamard_identity(std::size_t n) {
  return ProjectivePoint::ones(n + 1);
}

std::string Verdict::to_string() const {
  switch (kind) {
    case VerdictKind::Match: return "MATCH";
    case VerdictKind::Defect: return "DEFECT(" + std::to_string(defect) + ")";
    case VerdictKind::Empty: return "EMPTY";
  }
  return "?";
}

int expected_dim(std::size_t n, std::span<const int> dims) {
  const long sum = std::accumulate(dims.begin(), dims.end(), 0L);
  return static_cast<int>(std::min<long>(static_cast<long>(n), sum));
}

Verdict make_verdict(int expected, int observed, bool all_degenerate) {
  if (all_degenerate) return Verdict{VerdictKind::Empty, 0};
  if (observed == expected) return Verdict{VerdictKind::Match, 0};
  return Verdict{VerdictKind::Defect, expected - observed};
}

Matrix stacked_frame(const PrimeField& field, std::span<const Sample> samples) {
  if (samples.empty()) throw Error(Errc::InvalidArgument, "stacked frame of zero factors");
  const std::size_t len = samples.front().point().size();
  Matrix out(len, 0);
  for (std::size_t j = 0; j < samples.size(); ++j) {
    std::vector<FieldElem> scale(len, field.one());
    for (std::size_t i = 0; i < samples.size(); ++i) {
      if (i == j) continue;
      const auto& p = samples[i].point();
      if (p.size() != len) throw Error(Errc::ArityMismatch, "samples from different ambient spaces");
      for (std::size_t r = 0; r < len; ++r) scale[r] = field.mul(scale[r], p[r]);
    }
    out = out.hconcat(scale_rows(field, scale, samples[j].tangent.frame));
  }
  return out;
}

namespace {

bool product_defined(const PrimeField& field, std::span<const Sample> samples) {
  const std::size_t len = samples.front().point().size();
  for (std::size_t r = 0; r < len; ++r) {
    FieldElem v = field.one();
    for (const auto& s : samples) v = field.mul(v, s.point()[r]);
    if (!v.is_zero()) return true;
  }
  return false;
}

std::size_t check_same_ambient(std::span<const Variety> factors) {
  if (factors.empty()) throw Error(Errc::InvalidArgument, "no factors");
  const std::size_t n = factors.front().ambient_dim();
  for (const auto& x : factors) {
    if (x.ambient_dim() != n) throw Error(Errc::ArityMismatch, "factors live in different projective spaces");
    if (!(x.field() == factors.front().field())) throw Error(Errc::InvalidArgument, "factors over different fields");
  }
  return n;
}

}  // namespace

DimensionReport multi_dim(std::span<const Variety> factors, const DimOptions& opts) {
  const std::size_t n = check_same_ambient(factors);
  const PrimeField& field = factors.front().field();
  const SeedStream root(opts.seed);

  DimensionReport report;
  report.prime = field.modulus();
  if (opts.factor_dims) {
    if (opts.factor_dims->size() != factors.size()) throw Error(Errc::ShapeMismatch, "factor_dims length differs from k");
    report.factor_dims = *opts.factor_dims;
  } else {
    const SeedStream dims = root.split(stream::kDims);
    for (std::size_t j = 0; j < factors.size(); ++j)
      report.factor_dims.push_back(intrinsic_dim(factors[j], opts.trials, dims.split(j)));
  }
  report.expected = expected_dim(n, report.factor_dims);

  const std::size_t trials = static_cast<std::size_t>(std::max(opts.trials, 1));
  report.trials.resize(trials);
  const SeedStream trial_root = root.split(stream::kTrials);
  detail::parallel_for(trials, opts.threads, [&](std::size_t t) {
    const SeedStream trial_rng = trial_root.split(t);
    std::vector<Sample> samples;
    samples.reserve(factors.size());
    for (std::size_t j = 0; j < factors.size(); ++j) samples.push_back(sample_with_frame(factors[j], trial_rng.split(j)));
    TrialRecord record;
    record.seed = trial_rng.key();
    for (const auto& s : samples) record.points.push_back(s.point());
    if (!product_defined(field, samples)) {
      record.degenerate = true;
      record.rank = 0;
    } else {
      record.rank = static_cast<int>(rank(field, stacked_frame(field, samples)));
    }
    report.trials[t] = std::move(record);
  });

  bool all_degenerate = true;
  for (const auto& r : report.trials) {
    if (r.degenerate) continue;
    all_degenerate = false;
    report.observed = std::max(report.observed, r.rank - 1);
  }
  report.verdict = make_verdict(report.expected, report.observed, all_degenerate);
  report.primes_tried = {report.prime};
  report.observed_per_prime = {report.observed};
  return report;
}

DimensionReport terracini_dim(const Variety& x, const Variety& y, const DimOptions& opts) {
  const std::vector<Variety> pair{x, y};
  check_same_ambient(pair);
  const PrimeField& field = x.field();
  const SeedStream root(opts.seed);

  DimensionReport report;
  report.prime = field.modulus();
  if (opts.factor_dims) {
    report.factor_dims = *opts.factor_dims;
  } else {
    const SeedStream dims = root.split(stream::kDims);
    report.factor_dims = {intrinsic_dim(x, opts.trials, dims.split(0)), intrinsic_dim(y, opts.trials, dims.split(1))};
  }
  report.expected = expected_dim(x.ambient_dim(), report.factor_dims);

  const std::size_t trials = static_cast<std::size_t>(std::max(opts.trials, 1));
  report.trials.resize(trials);
  const SeedStream trial_root = root.split(stream::kTrials);
  detail::parallel_for(trials, opts.threads, [&](std::size_t t) {
    const SeedStream trial_rng = trial_root.split(t);
    const Sample p = sample_with_frame(x, trial_rng.split(0));
    const Sample q = sample_with_frame(y, trial_rng.split(1));
    TrialRecord record;
    record.seed = trial_rng.key();
    record.points = {p.point(), q.point()};
    if (!try_hadamard_point(field, p.point(), q.point())) {
      record.degenerate = true;
    } else {
      const Matrix frame = scale_rows(field, q.point().coords(), p.tangent.frame)
                               .hconcat(scale_rows(field, p.point().coords(), q.tangent.frame));
      record.rank = static_cast<int>(rank(field, frame));
    }
    report.trials[t] = std::move(record);
  });

  bool all_degenerate = true;
  for (const auto& r : report.trials) {
    if (r.degenerate) continue;
    all_degenerate = false;
    report.observed = std::max(report.observed, r.rank - 1);
  }
  report.verdict = make_verdict(report.expected, report.observed, all_degenerate);
  report.primes_tried = {report.prime};
  report.observed_per_prime = {report.observed};
  return report;
}

DimensionReport hadamard_power(const Variety& y, int k, const DimOptions& opts) {
  if (k < 1) throw Error(Errc::InvalidArgument, "Hadamard power needs k >= 1");
  DimOptions inner = opts;
  if (!inner.factor_dims) {
    const int d = intrinsic_dim(y, opts.trials, SeedStream(opts.seed).split(stream::kDims));
    inner.factor_dims = std::vector<int>(static_cast<std::size_t>(k), d);
  }
  const std::vector<Variety> copies(static_cast<std::size_t>(k), y);
  return multi_dim(copies, inner);
}

Variety hadamard_param_product(const Variety& x, const Variety& y, SeedStream rng) {
  const std::vector<Variety> pair{x, y};
  const std::size_t n = check_same_ambient(pair);
  const PrimeField& field = x.field();
  const auto& px = x.as_param();
  const auto& py = y.as_param();

  bool defined = false;
  for (int attempt = 0; attempt < 32 && !defined; ++attempt) {
    const SeedStream pair_rng = rng.split(static_cast<std::uint64_t>(attempt));
    defined = try_hadamard_point(field, sample_point(x, pair_rng.split(0)), sample_point(y, pair_rng.split(1))).has_value();
  }
  if (!defined) throw Error(Errc::EmptyProduct, x.name() + " * " + y.name() + " is empty");

  const std::size_t mx = px.param_names.size();
  const std::size_t my = py.param_names.size();
  std::set<std::string> taken(px.param_names.begin(), px.param_names.end());
  std::vector<std::string> names = px.param_names;
  for (const auto& name : py.param_names) {
    std::string fresh = name;
    for (int suffix = 2; taken.contains(fresh); ++suffix) fresh = name + "_" + std::to_string(suffix);
    taken.insert(fresh);
    names.push_back(std::move(fresh));
  }
  std::vector<std::size_t> groups = px.groups;
  groups.insert(groups.end(), py.groups.begin(), py.groups.end());

  std::vector<MultiPoly> comps;
  comps.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    comps.push_back(mul(field, shift_variables(field, px.components[i], mx + my, 0),
                        shift_variables(field, py.components[i], mx + my, mx)));
  }
  return Variety::param(field, x.name() + "*" + y.name(), n, std::move(names), std::move(groups), std::move(comps));
}

std::uint64_t session_prime(std::uint64_t seed, unsigned bits) {
  return random_prime(bits, SeedStream(seed).split(stream::kPrime));
}

DimensionReport run_hedged(const ReportRunner& run, std::uint64_t seed, unsigned prime_bits) {
  DimensionReport best = run(PrimeField(session_prime(seed, prime_bits)));
  std::vector<std::uint64_t> primes{best.prime};
  std::vector<int> observed{best.observed};
  if (best.verdict.kind == VerdictKind::Defect) {
    const SeedStream hedge = SeedStream(seed).split(stream::kHedge);
    std::uint64_t draw = 0;
    for (int extra = 0; extra < 2; ++extra) {
      // Small prime sizes may not offer enough distinct primes.
      std::optional<std::uint64_t> fresh;
      for (int attempt = 0; attempt < 64 && !fresh; ++attempt) {
        const std::uint64_t p = random_prime(prime_bits, hedge.split(draw++));
        if (std::find(primes.begin(), primes.end(), p) == primes.end()) fresh = p;
      }
      if (!fresh) break;
      DimensionReport again = run(PrimeField(*fresh));
      primes.push_back(*fresh);
      observed.push_back(again.observed);
      if (again.observed > best.observed) best = std::move(again);
    }
  }
  best.primes_tried = std::move(primes);
  best.observed_per_prime = std::move(observed);
  return best;
}

std::string to_string(TwistMode mode) {
  switch (mode) {
    case TwistMode::None: return "none";
    case TwistMode::FixLast: return "fix_last";
    case TwistMode::TwistAll: return "twist_all";
  }
  return "?";
}

std::optional<TwistMode> parse_twist_mode(std::string_view text) {
  if (text == "none") return TwistMode::None;
  if (text == "fix_last") return TwistMode::FixLast;
  if (text == "twist_all") return TwistMode::TwistAll;
  return std::nullopt;
}

TwistResult twist_experiment(std::span<const Variety> factors, const TwistConfig& cfg) {
  const std::size_t n = check_same_ambient(factors);
  const std::size_t k = factors.size();
  const SeedStream root(cfg.seed);
  if (cfg.mode == TwistMode::FixLast) {
    const auto support = coordinate_support(factors.back(), 8, root.split(stream::kCheck));
    if (!support.empty()) {
      throw Error(Errc::PreconditionViolated,
                  factors.back().name() +
                      " lies in a coordinate hyperplane; the fixed factor must not be contained in the union of "
                      "the coordinate hyperplanes");
    }
  }

  std::vector<int> dims;
  const SeedStream dim_rng = root.split(stream::kDims);
  for (std::size_t j = 0; j < k; ++j) dims.push_back(intrinsic_dim(factors[j], 8, dim_rng.split(j)));

  TwistResult result;
  result.expected = expected_dim(n, dims);
  const std::size_t trials = static_cast<std::size_t>(std::max(cfg.trials, 1));
  result.reports.resize(trials);
  const SeedStream twist_root = root.split(stream::kTwist);
  detail::parallel_for(trials, cfg.threads, [&](std::size_t t) {
    const SeedStream trial_rng = twist_root.split(t);
    std::vector<Variety> twisted(factors.begin(), factors.end());
    const std::size_t twisted_slots = cfg.mode == TwistMode::None ? 0 : cfg.mode == TwistMode::FixLast ? k - 1 : k;
    for (std::size_t j = 0; j < twisted_slots; ++j) {
      twisted[j] = apply_transform(factors[j], random_invertible(factors[j].field(), n, trial_rng.split(j)));
    }
    DimOptions inner;
    inner.trials = 1;
    inner.seed = trial_rng.split(k + 1).next();
    inner.factor_dims = dims;
    result.reports[t] = multi_dim(twisted, inner);
  });
  result.successes = static_cast<int>(std::count_if(result.reports.begin(), result.reports.end(), [](const auto& r) {
    return r.verdict.kind == VerdictKind::Match;
  }));
  return result;
}

}  // namespace had
