#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "had/field.hpp"
#include "had/matrix.hpp"
#include "had/poly.hpp"
#include "had/random.hpp"

namespace had {

/// Point of P^n, stored with its first nonzero coordinate scaled to 1.
class ProjectivePoint {
 public:
  /// Throws Error(InvalidArgument) when every coordinate is zero.
  static ProjectivePoint normalized(const PrimeField& field, std::vector<FieldElem> coords);

  /// Same as normalized() but returns nullopt for the zero vector.
  static std::optional<ProjectivePoint> try_normalized(const PrimeField& field, std::vector<FieldElem> coords);

  /// [1:...:1] with `len` coordinates.
  static ProjectivePoint ones(std::size_t len) { return ProjectivePoint(std::vector<FieldElem>(len, FieldElem{1})); }

  const std::vector<FieldElem>& coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }
  FieldElem operator[](std::size_t i) const { return coords_[i]; }

  /// True when some coordinate vanishes, i.e. the point lies on a coordinate hyperplane.
  bool on_delta() const;

  friend auto operator<=>(const ProjectivePoint&, const ProjectivePoint&) = default;

 private:
  explicit ProjectivePoint(std::vector<FieldElem> coords) : coords_(std::move(coords)) {}
  std::vector<FieldElem> coords_;
};

/// Image of a polynomial map. Parameters split into groups; each group is a
/// separate projective parameter space and every component is homogeneous in
/// each group (a single group for an ordinary parametrization).
struct ParamRep {
  std::vector<std::string> param_names;
  std::vector<std::size_t> groups;
  std::vector<MultiPoly> components;
};

/// Zero set of homogeneous generators, with the dimension asserted by the user.
struct ImplicitRep {
  std::vector<MultiPoly> generators;
  int declared_dim = 0;
  std::optional<ProjectivePoint> known_point;
};

class Variety {
 public:
  /// Validates component count, shared arity, group sizes and per-group homogeneity.
  static Variety param(const PrimeField& field, std::string name, std::size_t n, std::vector<std::string> param_names,
                       std::vector<std::size_t> groups, std::vector<MultiPoly> components);
  /// Validates homogeneity and 0 <= declared_dim <= n-1.
  static Variety implicit(const PrimeField& field, std::string name, std::size_t n, std::vector<MultiPoly> generators,
                          int declared_dim, std::optional<ProjectivePoint> known_point = std::nullopt);

  const PrimeField& field() const { return field_; }
  const std::string& name() const { return name_; }
  std::size_t ambient_dim() const { return n_; }

  bool is_param() const { return std::holds_alternative<ParamRep>(rep_); }
  const ParamRep& as_param() const;
  const ImplicitRep& as_implicit() const;

  /// Number of affine parameters (Param only).
  std::size_t param_count() const;

 private:
  Variety(const PrimeField& field, std::string name, std::size_t n, std::variant<ParamRep, ImplicitRep> rep)
      : field_(field), name_(std::move(name)), n_(n), rep_(std::move(rep)) {}

  PrimeField field_;
  std::string name_;
  std::size_t n_;
  std::variant<ParamRep, ImplicitRep> rep_;
};

/// Column span is the affine cone tangent space at `base`; columns are independent.
struct TangentFrame {
  ProjectivePoint base;
  Matrix frame;
};

/// A sampled point together with its tangent frame (and parameters when the
/// variety is parametrized).
struct Sample {
  TangentFrame tangent;
  std::vector<FieldElem> params;

  const ProjectivePoint& point() const { return tangent.base; }
};

/// Indices i with X contained in {x_i = 0}.
struct CoordinateSupport {
  std::set<std::size_t> indices;

  bool empty() const { return indices.empty(); }
  friend bool operator==(const CoordinateSupport&, const CoordinateSupport&) = default;
};

inline constexpr int kSampleRetries = 64;

/// Image of the map at a parameter vector; nullopt at a base point.
std::optional<ProjectivePoint> map_point(const Variety& x, std::span<const FieldElem> params);

/// Random parameter vector whose image is defined. Throws Error(NoPointFound).
std::vector<FieldElem> sample_params(const Variety& x, SeedStream& rng);

/// Random point of X. Param: image of random parameters. Implicit hypersurface:
/// root of the restriction to a random line. Implicit of higher codimension:
/// the known point, else Error(UnsupportedRepresentation).
ProjectivePoint sample_point(const Variety& x, SeedStream rng);

/// All points of an Implicit hypersurface on the affine line {a + t b}.
/// If the whole line lies on X, returns just `a`.
std::vector<ProjectivePoint> points_on_line(const Variety& x, std::span<const FieldElem> a,
                                            std::span<const FieldElem> b, SeedStream rng);

/// Param: pivot columns of [J(params) | F(params)]. With `certified_rank`, a
/// smaller rank raises Error(SingularPoint).
TangentFrame tangent_frame(const Variety& x, std::span<const FieldElem> params,
                           std::optional<std::size_t> certified_rank = std::nullopt);

/// Implicit: kernel of the generator Jacobian at `p`. Raises Error(SingularPoint)
/// when the kernel is larger than declared_dim + 1.
TangentFrame tangent_frame(const Variety& x, const ProjectivePoint& p);

/// Point plus frame, drawn from `rng`.
Sample sample_with_frame(const Variety& x, SeedStream rng);

/// Param: max over trials of frame rank minus one. Implicit: declared
/// dimension, cross-checked against the tangent space at one sampled point.
int intrinsic_dim(const Variety& x, int trials, SeedStream rng);

/// Param: exact (components that are identically zero). Implicit: coordinates
/// vanishing at every one of `samples` random points.
CoordinateSupport coordinate_support(const Variety& x, int samples, SeedStream rng);

/// g(X). Param: components become g * components. Implicit: generators
/// become f(g^-1 x). Throws Error(SingularTransform) when g is singular.
Variety apply_transform(const Variety& x, const Matrix& g);

// ---- Variety description files -------------------------------------------

enum class VarietyKind { Param, Implicit };

/// Field-independent description of a variety, as stored in a `.var` file.
///
///   name: twisted_cubic
///   note: free text (optional)
///   n: 3
///   kind: param
///   params: s t
///   groups: 2 2          (optional, param only, omitted for one group)
///   poly: s^3            (one line per component / generator)
///   declared_dim: 1      (implicit only)
///   known_point: 1 0 0 0 (implicit only, optional)
///
/// Fields are written in exactly this order; `write_variety_spec` on a parsed
/// canonical file reproduces it byte for byte.
struct VarietySpec {
  std::string name;
  std::string note;
  std::size_t n = 0;
  VarietyKind kind = VarietyKind::Param;
  std::vector<std::string> params;
  std::vector<std::size_t> groups;
  std::vector<std::string> polys;
  std::optional<int> declared_dim;
  std::optional<std::vector<std::int64_t>> known_point;

  friend bool operator==(const VarietySpec&, const VarietySpec&) = default;
};

/// Throws Error(FormatError) on malformed input.
VarietySpec parse_variety_spec(std::string_view text);
std::string write_variety_spec(const VarietySpec& spec);
VarietySpec load_variety_file(const std::filesystem::path& path);

/// Parses the polynomials into `field`.
Variety instantiate(const PrimeField& field, const VarietySpec& spec);

}  // namespace had
