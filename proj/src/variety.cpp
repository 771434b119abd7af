#include "had/variety.hpp"

#include <algorithm>
#include <numeric>

#include "had/error.hpp"
#include "had/univariate.hpp"

namespace had {

// ---- ProjectivePoint --------------------------------------------------------

std::optional<ProjectivePoint> ProjectivePoint::try_normalized(const PrimeField& field, std::vector<FieldElem> coords) {
  const auto lead = std::find_if(coords.begin(), coords.end(), [](FieldElem c) { return !c.is_zero(); });
  if (lead == coords.end()) return std::nullopt;
  const FieldElem scale = field.inv(*lead);
  for (auto it = lead; it != coords.end(); ++it) *it = field.mul(*it, scale);
  return ProjectivePoint(std::move(coords));
}

ProjectivePoint ProjectivePoint::normalized(const PrimeField& field, std::vector<FieldElem> coords) {
  auto p = try_normalized(field, std::move(coords));
  if (!p) throw Error(Errc::InvalidArgument, "the zero vector is not a projective point");
  return *std::move(p);
}

bool ProjectivePoint::on_delta() const {
  return std::any_of(coords_.begin(), coords_.end(), [](FieldElem c) { return c.is_zero(); });
}

// ---- Variety ------------------------------------------------------------------

Variety Variety::param(const PrimeField& field, std::string name, std::size_t n, std::vector<std::string> param_names,
                       std::vector<std::size_t> groups, std::vector<MultiPoly> components) {
  const std::size_t m = param_names.size();
  if (components.size() != n + 1) {
    throw Error(Errc::ShapeMismatch, name + ": expected " + std::to_string(n + 1) + " components, got " +
                                         std::to_string(components.size()));
  }
  if (groups.empty() && m > 0) groups.push_back(m);
  if (std::accumulate(groups.begin(), groups.end(), std::size_t{0}) != m ||
      std::any_of(groups.begin(), groups.end(), [](std::size_t g) { return g == 0; })) {
    throw Error(Errc::InvalidArgument, name + ": parameter groups must be positive and sum to the parameter count");
  }
  std::vector<std::optional<std::uint64_t>> group_degree(groups.size());
  bool any_nonzero = false;
  for (const auto& c : components) {
    if (c.nvars() != m) throw Error(Errc::ArityMismatch, name + ": component arity differs from parameter count");
    for (const auto& t : c.terms()) {
      any_nonzero = true;
      std::size_t offset = 0;
      for (std::size_t g = 0; g < groups.size(); ++g) {
        const auto first = t.exponent.begin() + static_cast<std::ptrdiff_t>(offset);
        const std::uint64_t d = std::accumulate(first, first + static_cast<std::ptrdiff_t>(groups[g]), std::uint64_t{0});
        if (!group_degree[g]) group_degree[g] = d;
        if (*group_degree[g] != d) {
          throw Error(Errc::InvalidArgument, name + ": components are not homogeneous of a common degree");
        }
        offset += groups[g];
      }
    }
  }
  if (!any_nonzero) throw Error(Errc::InvalidArgument, name + ": every component is zero");
  return Variety(field, std::move(name), n,
                 ParamRep{std::move(param_names), std::move(groups), std::move(components)});
}

Variety Variety::implicit(const PrimeField& field, std::string name, std::size_t n, std::vector<MultiPoly> generators,
                          int declared_dim, std::optional<ProjectivePoint> known_point) {
  if (generators.empty()) throw Error(Errc::InvalidArgument, name + ": no generators");
  for (const auto& f : generators) {
    if (f.nvars() != n + 1) throw Error(Errc::ArityMismatch, name + ": generator arity differs from n+1");
    if (!f.is_homogeneous()) throw Error(Errc::InvalidArgument, name + ": generator is not homogeneous");
  }
  if (declared_dim < 0 || declared_dim > static_cast<int>(n) - 1) {
    throw Error(Errc::InvalidArgument, name + ": declared dimension must lie in [0, n-1]");
  }
  if (known_point) {
    if (known_point->size() != n + 1) throw Error(Errc::ArityMismatch, name + ": known point has wrong length");
    for (const auto& f : generators) {
      if (!evaluate(field, f, known_point->coords()).is_zero()) {
        throw Error(Errc::InvalidArgument, name + ": known point does not lie on the variety");
      }
    }
  }
  return Variety(field, std::move(name), n, ImplicitRep{std::move(generators), declared_dim, std::move(known_point)});
}

const ParamRep& Variety::as_param() const {
  if (const auto* p = std::get_if<ParamRep>(&rep_)) return *p;
  throw Error(Errc::UnsupportedRepresentation, name_ + " is not parametrized");
}

const ImplicitRep& Variety::as_implicit() const {
  if (const auto* p = std::get_if<ImplicitRep>(&rep_)) return *p;
  throw Error(Errc::UnsupportedRepresentation, name_ + " is not implicit");
}

std::size_t Variety::param_count() const { return as_param().param_names.size(); }

// ---- sampling -------------------------------------------------------------------

std::optional<ProjectivePoint> map_point(const Variety& x, std::span<const FieldElem> params) {
  const auto& rep = x.as_param();
  std::vector<FieldElem> image;
  image.reserve(rep.components.size());
  for (const auto& c : rep.components) image.push_back(evaluate(x.field(), c, params));
  return ProjectivePoint::try_normalized(x.field(), std::move(image));
}

std::vector<FieldElem> sample_params(const Variety& x, SeedStream& rng) {
  const std::size_t m = x.param_count();
  for (int attempt = 0; attempt < kSampleRetries; ++attempt) {
    std::vector<FieldElem> params(m);
    for (auto& v : params) v = x.field().random(rng);
    if (map_point(x, params)) return params;
  }
  throw Error(Errc::NoPointFound, x.name() + ": every sampled parameter was a base point");
}

std::vector<ProjectivePoint> points_on_line(const Variety& x, std::span<const FieldElem> a,
                                            std::span<const FieldElem> b, SeedStream rng) {
  const auto& rep = x.as_implicit();
  if (rep.generators.size() != 1) {
    throw Error(Errc::UnsupportedRepresentation, x.name() + ": line slicing needs a hypersurface");
  }
  const PrimeField& field = x.field();
  const MultiPoly& f = rep.generators.front();
  const std::size_t len = x.ambient_dim() + 1;
  if (a.size() != len || b.size() != len) throw Error(Errc::ArityMismatch, "line endpoints have wrong length");

  auto on_line = [&](FieldElem t) {
    std::vector<FieldElem> v(len);
    for (std::size_t i = 0; i < len; ++i) v[i] = field.add(a[i], field.mul(t, b[i]));
    return v;
  };

  // Restriction to the line has degree <= deg f; recover it by interpolation.
  const std::size_t samples = static_cast<std::size_t>(std::max(f.degree(), 0)) + 1;
  std::vector<FieldElem> ts, values;
  for (std::size_t i = 0; i < samples; ++i) {
    const FieldElem t = field.from_uint(i);
    ts.push_back(t);
    values.push_back(evaluate(field, f, on_line(t)));
  }
  UniPoly restriction = interpolate(field, ts, values);

  std::vector<ProjectivePoint> points;
  if (restriction.empty()) {
    if (auto p = ProjectivePoint::try_normalized(field, std::vector<FieldElem>(a.begin(), a.end()))) points.push_back(*p);
    return points;
  }
  for (FieldElem t : univariate_roots(field, restriction, rng)) {
    if (auto p = ProjectivePoint::try_normalized(field, on_line(t))) points.push_back(*p);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

ProjectivePoint sample_point(const Variety& x, SeedStream rng) {
  if (x.is_param()) return *map_point(x, sample_params(x, rng));

  const auto& rep = x.as_implicit();
  if (rep.generators.size() != 1) {
    if (rep.known_point) return *rep.known_point;
    throw Error(Errc::UnsupportedRepresentation,
                x.name() + ": sampling an implicit variety of codimension >= 2 needs a known point");
  }
  const PrimeField& field = x.field();
  const std::size_t len = x.ambient_dim() + 1;
  for (int attempt = 0; attempt < kSampleRetries; ++attempt) {
    std::vector<FieldElem> a(len), b(len);
    for (auto& v : a) v = field.random(rng);
    for (auto& v : b) v = field.random(rng);
    auto points = points_on_line(x, a, b, rng.split(static_cast<std::uint64_t>(attempt)));
    if (points.empty()) continue;
    return points[rng.below(points.size())];
  }
  throw Error(Errc::NoPointFound, x.name() + ": no random line met the hypersurface");
}

TangentFrame tangent_frame(const Variety& x, std::span<const FieldElem> params, std::optional<std::size_t> certified_rank) {
  const auto& rep = x.as_param();
  if (params.size() != x.param_count()) throw Error(Errc::ArityMismatch, "parameter vector has wrong length");
  auto base = map_point(x, params);
  if (!base) throw Error(Errc::NoPointFound, x.name() + ": parameter vector is a base point");

  const PrimeField& field = x.field();
  Matrix jac = jacobian(field, rep.components, params);
  Matrix point_column(base->size(), 1);
  for (std::size_t i = 0; i < base->size(); ++i) point_column(i, 0) = (*base)[i];
  Matrix frame = independent_columns(field, jac.hconcat(point_column));
  if (certified_rank && frame.cols() < *certified_rank) {
    throw Error(Errc::SingularPoint, x.name() + ": tangent rank " + std::to_string(frame.cols()) +
                                         " below generic rank " + std::to_string(*certified_rank));
  }
  return TangentFrame{*std::move(base), std::move(frame)};
}

TangentFrame tangent_frame(const Variety& x, const ProjectivePoint& p) {
  const auto& rep = x.as_implicit();
  const PrimeField& field = x.field();
  if (p.size() != x.ambient_dim() + 1) throw Error(Errc::ArityMismatch, "point has wrong length");
  for (const auto& f : rep.generators) {
    if (!evaluate(field, f, p.coords()).is_zero()) {
      throw Error(Errc::PreconditionViolated, x.name() + ": point does not lie on the variety");
    }
  }
  Matrix frame = kernel_basis(field, jacobian(field, rep.generators, p.coords()));
  if (frame.cols() > static_cast<std::size_t>(rep.declared_dim) + 1) {
    throw Error(Errc::SingularPoint, x.name() + ": tangent space larger than declared dimension");
  }
  return TangentFrame{p, std::move(frame)};
}

Sample sample_with_frame(const Variety& x, SeedStream rng) {
  if (x.is_param()) {
    auto params = sample_params(x, rng);
    auto tangent = tangent_frame(x, params);
    return Sample{std::move(tangent), std::move(params)};
  }
  for (int attempt = 0; attempt < kSampleRetries; ++attempt) {
    const ProjectivePoint p = sample_point(x, rng.split(static_cast<std::uint64_t>(attempt)));
    try {
      return Sample{tangent_frame(x, p), {}};
    } catch (const Error& e) {
      if (e.code() != Errc::SingularPoint || x.as_implicit().generators.size() != 1) throw;
    }
  }
  throw Error(Errc::NoPointFound, x.name() + ": every sampled point was singular");
}

int intrinsic_dim(const Variety& x, int trials, SeedStream rng) {
  if (x.is_param()) {
    std::size_t best = 0;
    for (int t = 0; t < std::max(trials, 1); ++t) {
      SeedStream trial = rng.split(static_cast<std::uint64_t>(t));
      best = std::max(best, tangent_frame(x, sample_params(x, trial)).frame.cols());
    }
    return static_cast<int>(best) - 1;
  }
  const int declared = x.as_implicit().declared_dim;
  const Sample s = sample_with_frame(x, rng);
  const int tangent = static_cast<int>(s.tangent.frame.cols()) - 1;
  if (tangent != declared) {
    throw Error(Errc::PreconditionViolated, x.name() + ": declared dimension " + std::to_string(declared) +
                                                " but tangent space at a sampled point has dimension " +
                                                std::to_string(tangent));
  }
  return declared;
}

CoordinateSupport coordinate_support(const Variety& x, int samples, SeedStream rng) {
  CoordinateSupport support;
  const std::size_t len = x.ambient_dim() + 1;
  if (x.is_param()) {
    const auto& comps = x.as_param().components;
    for (std::size_t i = 0; i < len; ++i)
      if (comps[i].is_zero()) support.indices.insert(i);
    return support;
  }
  std::vector<bool> always_zero(len, true);
  for (int s = 0; s < std::max(samples, 1); ++s) {
    const ProjectivePoint p = sample_point(x, rng.split(static_cast<std::uint64_t>(s)));
    for (std::size_t i = 0; i < len; ++i)
      if (!p[i].is_zero()) always_zero[i] = false;
  }
  for (std::size_t i = 0; i < len; ++i)
    if (always_zero[i]) support.indices.insert(i);
  return support;
}

Variety apply_transform(const Variety& x, const Matrix& g) {
  const PrimeField& field = x.field();
  const std::size_t len = x.ambient_dim() + 1;
  if (g.rows() != len || g.cols() != len) throw Error(Errc::ShapeMismatch, "transform must be (n+1)x(n+1)");
  const Matrix g_inv = inverse(field, g);
  const std::string name = "g(" + x.name() + ")";

  if (x.is_param()) {
    const auto& rep = x.as_param();
    std::vector<MultiPoly> comps;
    comps.reserve(len);
    for (std::size_t i = 0; i < len; ++i) {
      MultiPoly acc(rep.param_names.size());
      for (std::size_t j = 0; j < len; ++j) {
        if (!g(i, j).is_zero()) acc = add(field, acc, scale(field, rep.components[j], g(i, j)));
      }
      comps.push_back(std::move(acc));
    }
    return Variety::param(field, name, x.ambient_dim(), rep.param_names, rep.groups, std::move(comps));
  }

  const auto& rep = x.as_implicit();
  std::vector<MultiPoly> gens;
  gens.reserve(rep.generators.size());
  for (const auto& f : rep.generators) gens.push_back(substitute_linear(field, f, g_inv));
  std::optional<ProjectivePoint> known;
  if (rep.known_point) known = ProjectivePoint::normalized(field, multiply(field, g, rep.known_point->coords()));
  return Variety::implicit(field, name, x.ambient_dim(), std::move(gens), rep.declared_dim, std::move(known));
}

}  // namespace had
