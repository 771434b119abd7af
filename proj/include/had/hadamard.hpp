#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "had/field.hpp"
#include "had/matrix.hpp"
#include "had/variety.hpp"

namespace had {

// ---- points -----------------------------------------------------------------

/// Coordinatewise product; nullopt when every coordinate product vanishes.
std::optional<ProjectivePoint> try_hadamard_point(const PrimeField& field, const ProjectivePoint& p,
                                                  const ProjectivePoint& q);

/// Coordinatewise product. Throws Error(UndefinedProduct) when it is undefined.
ProjectivePoint hadamard_point(const PrimeField& field, const ProjectivePoint& p, const ProjectivePoint& q);

/// Coordinatewise inverse. Throws Error(OnDelta) if some coordinate is zero.
ProjectivePoint hadamard_inverse(const PrimeField& field, const ProjectivePoint& p);

/// [1:...:1] in P^n.
ProjectivePoint hadamard_identity(std::size_t n);

// ---- dimension reports --------------------------------------------------------

enum class VerdictKind { Match, Defect, Empty };

struct Verdict {
  VerdictKind kind = VerdictKind::Match;
  int defect = 0;

  std::string to_string() const;
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct TrialRecord {
  std::uint64_t seed = 0;
  std::vector<ProjectivePoint> points;
  int rank = 0;
  bool degenerate = false;
};

/// Outcome of one dimension computation. `observed` is -1 when every trial
/// was degenerate (the product is empty).
struct DimensionReport {
  int expected = 0;
  int observed = -1;
  std::vector<int> factor_dims;
  std::vector<TrialRecord> trials;
  Verdict verdict;
  std::uint64_t prime = 0;
  /// Every prime tried, primary first, with the observed dimension under each.
  /// Longer than one entry only when a defect triggered re-runs.
  std::vector<std::uint64_t> primes_tried;
  std::vector<int> observed_per_prime;
};

/// min{n, sum of dims}.
int expected_dim(std::size_t n, std::span<const int> dims);

Verdict make_verdict(int expected, int observed, bool all_degenerate);

struct DimOptions {
  int trials = 8;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  /// Skips the intrinsic-dimension pass when the caller already knows the factor dimensions.
  std::optional<std::vector<int>> factor_dims;
};

/// The Terracini-type frame of a k-fold product at the given samples: block j
/// is (prod_{i != j} D_{P_i}) F_j, D_V being diag(V). For k = 2 this is
/// [D_Q F_P | D_P G_Q].
Matrix stacked_frame(const PrimeField& field, std::span<const Sample> samples);

/// Dimension of X * Y from the rank of [D_Q F_P | D_P G_Q] at random (P, Q).
DimensionReport terracini_dim(const Variety& x, const Variety& y, const DimOptions& opts);

/// Dimension of X_1 * ... * X_k, k >= 1, from the stacked k-block frame.
DimensionReport multi_dim(std::span<const Variety> factors, const DimOptions& opts);

/// k-fold Hadamard power Y * ... * Y with independent samples per copy.
DimensionReport hadamard_power(const Variety& y, int k, const DimOptions& opts);

/// Parametrization of X * Y: concatenated parameters (renamed on clash) and
/// coordinatewise products of components. Throws Error(EmptyProduct) if 32
/// random pairs all give undefined products.
Variety hadamard_param_product(const Variety& x, const Variety& y, SeedStream rng);

// ---- characteristic hedging -----------------------------------------------------

/// Primary working prime for a seed: drawn from the seed's prime stream.
std::uint64_t session_prime(std::uint64_t seed, unsigned bits);

using ReportRunner = std::function<DimensionReport(const PrimeField&)>;

/// Runs `run` over the session prime. A DEFECT verdict is re-run under two
/// further random primes of the same size (fewer if the size has no more); the report with the largest
/// observed dimension is returned (finite-field ranks never exceed the
/// characteristic-zero rank) with every prime tried recorded.
DimensionReport run_hedged(const ReportRunner& run, std::uint64_t seed, unsigned prime_bits);

// ---- twist experiments -------------------------------------------------------------

enum class TwistMode {
  None,      ///< factors used as given
  FixLast,   ///< random g_1..g_{k-1}, X_k fixed; requires X_k off the coordinate hyperplanes
  TwistAll,  ///< random g_1..g_k
};

std::string to_string(TwistMode mode);
std::optional<TwistMode> parse_twist_mode(std::string_view text);

struct TwistConfig {
  TwistMode mode = TwistMode::FixLast;
  int trials = 20;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

struct TwistResult {
  std::vector<DimensionReport> reports;
  int expected = 0;
  int successes = 0;
};

/// Per trial: fresh random_invertible matrices for the twisted slots, then
/// multi_dim with one inner sample. Throws Error(PreconditionViolated) for
/// FixLast when the last factor lies in a coordinate hyperplane.
TwistResult twist_experiment(std::span<const Variety> factors, const TwistConfig& cfg);

}  // namespace had
