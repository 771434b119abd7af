// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "had/binomial.hpp"
#include "had/cli.hpp"
#include "had/counts.hpp"
#include "had/error.hpp"
#include "had/hadamard.hpp"
#include "had/oracle.hpp"

namespace {

using namespace had;
using Clock = std::chrono::steady_clock;

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Variety load(const PrimeField& f, const std::string& name) {
  return instantiate(f, load_variety_file(std::filesystem::path(HAD_CATALOGUE_DIR) / (name + ".var")));
}

PrimeField random_field(std::uint64_t seed) { return PrimeField(random_prime(62, SeedStream(seed))); }

ProjectivePoint random_point(const PrimeField& f, std::size_t n, SeedStream& rng, bool allow_zero) {
  for (;;) {
    std::vector<FieldElem> v(n + 1);
    for (auto& c : v) c = (allow_zero && rng.below(5) == 0) ? f.zero() : f.random_nonzero(rng);
    if (auto p = ProjectivePoint::try_normalized(f, std::move(v))) return *p;
  }
}

Check algebra() {
  Check c;
  const PrimeField f = random_field(101);
  SeedStream rng(1);
  const ProjectivePoint one = hadamard_identity(3);
  for (int i = 0; i < 1000; ++i) {
    const auto p = random_point(f, 3, rng, true), q = random_point(f, 3, rng, true), r = random_point(f, 3, rng, true);
    const auto pq = try_hadamard_point(f, p, q), qr = try_hadamard_point(f, q, r);
    c.expect(pq == try_hadamard_point(f, q, p), "commutativity");
    if (pq && qr) c.expect(try_hadamard_point(f, *pq, r) == try_hadamard_point(f, p, *qr), "associativity");
    c.expect(hadamard_point(f, p, one) == p, "identity");
    const auto u = random_point(f, 3, rng, false);
    c.expect(hadamard_point(f, u, hadamard_inverse(f, u)) == one, "inverse");
  }
  return c;
}

Check degenerate_pair() {
  Check c;
  const PrimeField f = random_field(102);
  const std::vector<Variety> lines{load(f, "skew_line_01"), load(f, "skew_line_23")};
  const DimensionReport plain = terracini_dim(lines[0], lines[1], DimOptions{});
  c.expect(plain.verdict.kind == VerdictKind::Empty, "untwisted skew lines are not EMPTY");
  const TwistResult twisted = twist_experiment(lines, TwistConfig{TwistMode::TwistAll, 20, 0});
  int exact = 0;
  for (const auto& r : twisted.reports) exact += r.observed == 2 ? 1 : 0;
  c.expect(exact == 20, "twist_all gave " + std::to_string(exact) + "/20 at dimension 2");
  return c;
}

Check twisted_cubic_harness() {
  Check c;
  const PrimeField f = random_field(103);
  const std::vector<Variety> pair{load(f, "twisted_cubic"), load(f, "twisted_cubic")};
  const TwistResult fixed = twist_experiment(pair, TwistConfig{TwistMode::FixLast, 20, 0});
  int exact = 0;
  for (const auto& r : fixed.reports) exact += r.observed == 2 ? 1 : 0;
  c.expect(fixed.expected == 2 && exact == 20, "fix_last gave " + std::to_string(exact) + "/20 at dimension 2");

  const DimensionReport plain = run_hedged(
      [](const PrimeField& field) {
        const Variety x = load(field, "twisted_cubic");
        return terracini_dim(x, x, DimOptions{8, 1});
      },
      1, 62);
  c.expect(plain.observed == 1 && plain.verdict == Verdict{VerdictKind::Defect, 1}, "untwisted square not DEFECT(1)");

  const PrimeField small(101);
  const Variety cubic = load(small, "twisted_cubic");
  const PointCount count = point_count_dim(hadamard_param_product(cubic, cubic, SeedStream(0)));
  c.expect(count.count == 102 && count.dim_estimate == 1, "oracle count " + std::to_string(count.count));
  return c;
}

Check quartic_powers() {
  Check c;
  const PrimeField f = random_field(104);
  const Variety quartic = load(f, "generic_quartic_curve");
  c.expect(!binomial_containment(quartic, 3, std::nullopt, SeedStream(0)).witness, "binomial witness found");
  for (int k = 2; k <= 3; ++k) {
    const DimensionReport r = run_hedged(
        [k](const PrimeField& field) { return hadamard_power(load(field, "generic_quartic_curve"), k, DimOptions{}); },
        0, 62);
    c.expect(r.observed == k && r.expected == k, "power k=" + std::to_string(k) + " observed " +
                                                     std::to_string(r.observed));
  }
  const PrimeField small(101);
  const Variety q101 = load(small, "generic_quartic_curve");
  for (int k = 1; k <= 3; ++k) {
    const std::vector<Variety> factors(static_cast<std::size_t>(k), q101);
    const PointCount count = point_count_product(factors);
    c.expect(within_window(count.count, 101, k), "oracle window at k=" + std::to_string(k));
  }
  return c;
}

Check surface_counts() {
  Check c;
  const ParamCountReport four = surface_parameter_counts(4);
  c.expect(four.dim_family == 28 && four.dim_ambient == 34 && four.holds, "d=4 counts");
  for (int d = 4; d <= 64; ++d) c.expect(surface_parameter_counts(d).holds, "fails at d=" + std::to_string(d));
  return c;
}

Check binomials() {
  Check c;
  const PrimeField f = random_field(106);
  const Variety conic = load(f, "conic");
  const BinomialResult found = binomial_containment(conic, 2, std::nullopt, SeedStream(0));
  c.expect(found.witness.has_value(), "conic witness missing");
  if (found.witness) {
    c.expect(found.verification_samples == 50 && verify_witness(conic, *found.witness, 50, SeedStream(99)),
             "conic witness does not verify");
  }
  c.expect(!binomial_containment(load(f, "fermat_cubic"), 4, std::nullopt, SeedStream(0)).witness,
           "Fermat cubic witness");
  c.expect(!binomial_containment(load(f, "line_s_t_sum"), 3, std::nullopt, SeedStream(0)).witness, "line witness");
  return c;
}

Check cross_route() {
  Check c;
  const PrimeField f = random_field(107);
  const std::vector<std::string> names{"twisted_cubic", "conic",       "skew_line_01", "skew_line_23",
                                       "generic_quartic_curve", "p2_identity", "line_s_t_sum"};
  int pairs = 0;
  for (const auto& a : names) {
    for (const auto& b : names) {
      const Variety x = load(f, a), y = load(f, b);
      if (x.ambient_dim() != y.ambient_dim()) continue;
      ++pairs;
      std::optional<Variety> prod;
      try {
        prod = hadamard_param_product(x, y, SeedStream(0));
      } catch (const Error& e) {
        if (e.code() != Errc::EmptyProduct) throw;
      }
      for (std::uint64_t s = 0; s < 8; ++s) {
        SeedStream rx = SeedStream(s).split(0), ry = SeedStream(s).split(1);
        const auto px = sample_params(x, rx), py = sample_params(y, ry);
        const std::vector<Sample> samples{Sample{tangent_frame(x, px), px}, Sample{tangent_frame(y, py), py}};
        const std::size_t stacked = rank(f, stacked_frame(f, samples));
        if (!prod) {
          c.expect(stacked == 0, a + " * " + b + ": empty product with nonzero frame");
          continue;
        }
        std::vector<FieldElem> joint = px;
        joint.insert(joint.end(), py.begin(), py.end());
        const auto& comps = prod->as_param().components;
        Matrix values(comps.size(), 1);
        for (std::size_t i = 0; i < comps.size(); ++i) values(i, 0) = evaluate(f, comps[i], joint);
        const std::size_t direct = rank(f, jacobian(f, comps, joint).hconcat(values));
        c.expect(stacked == direct, a + " * " + b + " seed " + std::to_string(s));
      }
    }
  }
  c.expect(pairs == 25, "expected 25 catalogue pairs, saw " + std::to_string(pairs));
  return c;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Check determinism() {
  Check c;
  const auto dir = std::filesystem::temp_directory_path() / "had_acceptance";
  std::filesystem::create_directories(dir);
  const std::vector<std::vector<std::string>> commands{
      {"dim", "catalogue:skew_line_01", "catalogue:skew_line_23"},
      {"twist", "catalogue:skew_line_01", "catalogue:skew_line_23", "--mode", "twist_all", "--trials", "20"},
      {"twist", "catalogue:twisted_cubic", "catalogue:twisted_cubic", "--mode", "fix_last", "--trials", "20"},
      {"dim", "catalogue:twisted_cubic", "catalogue:twisted_cubic", "--trials", "8", "--seed", "1"},
      {"oracle", "catalogue:twisted_cubic", "catalogue:twisted_cubic", "--q", "101"},
      {"binomial", "catalogue:generic_quartic_curve", "--max-degree", "3"},
      {"power", "catalogue:generic_quartic_curve", "--k", "2"},
      {"power", "catalogue:generic_quartic_curve", "--k", "3"},
      {"oracle", "catalogue:generic_quartic_curve", "catalogue:generic_quartic_curve", "--q", "101"},
      {"counts", "--d", "4", "--up-to", "64"},
      {"binomial", "catalogue:conic", "--max-degree", "2"},
      {"binomial", "catalogue:fermat_cubic", "--max-degree", "4"},
      {"binomial", "catalogue:line_s_t_sum", "--max-degree", "3"}};
  for (const auto& cmd : commands) {
    std::string first;
    for (int run = 0; run < 2; ++run) {
      std::vector<std::string> args = cmd;
      const auto path = dir / ("report" + std::to_string(run) + ".json");
      args.insert(args.end(), {"--json", path.string()});
      std::ostringstream out, err;
      const int code = cli::run(args, out, err);
      c.expect(code == cli::kExitOk || code == cli::kExitNegative, cmd.front() + ": " + err.str());
      if (run == 0) {
        first = slurp(path);
      } else {
        c.expect(!first.empty() && first == slurp(path), cmd.front() + " report differs between runs");
      }
    }
  }
  std::filesystem::remove_all(dir);
  return c;
}

Check full_suite(double own_seconds, double& total) {
  Check c;
  total = own_seconds;
  std::istringstream list(HAD_SUITE_BINARIES);
  for (std::string exe; std::getline(list, exe, '|');) {
    if (exe.empty()) continue;
    const auto start = Clock::now();
    const std::string command = "\"" + exe + "\" > /dev/null 2>&1";
    const int status = std::system(command.c_str());
    total += seconds_since(start);
    c.expect(status == 0, std::filesystem::path(exe).filename().string() + " failed");
  }
  return c;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<Check()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "hadamard algebra on 1000 random points", 1.0, algebra},
      {2, "skew coordinate lines: EMPTY, then 20/20 at dimension 2 after twist_all", 1.0, degenerate_pair},
      {3, "twisted cubic pair: fix_last 20/20 at 2, untwisted DEFECT(1), oracle count 102", 5.0,
       twisted_cubic_harness},
      {4, "generic quartic: no binomial up to 3, powers of dimension 2 and 3, oracle windows", 60.0, quartic_powers},
      {5, "surface parameter counts: (28, 34) at d = 4, holds for 4 <= d <= 64", 1.0, surface_counts},
      {6, "binomial search: conic found and verified, Fermat cubic and line not found", 10.0, binomials},
      {7, "stacked frame rank equals product Jacobian rank on every catalogue pair", 0.0, cross_route},
      {8, "byte-identical JSON reports on rerun", 0.0, determinism},
  };

  bool all = true;
  const auto suite_start = Clock::now();
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Check result;
    try {
      result = c.run();
    } catch (const std::exception& e) {
      result.ok = false;
      result.detail = std::string("exception: ") + e.what();
    }
    const double elapsed = seconds_since(start);
    if (c.limit > 0 && elapsed >= c.limit) {
      result.expect(false, "took " + std::to_string(elapsed) + " s");
    }
    all = all && result.ok;
    std::printf("%s criterion %d: %s (%.3f s)%s%s\n", result.ok ? "PASS" : "FAIL", c.id, c.name, elapsed,
                result.ok ? "" : " -- ", result.detail.c_str());
  }

  double total = 0;
  Check suite = full_suite(seconds_since(suite_start), total);
  suite.expect(total < 120.0, "took " + std::to_string(total) + " s");
  all = all && suite.ok;
  std::printf("%s criterion 9: full suite single-threaded under 120 s (%.3f s)%s%s\n", suite.ok ? "PASS" : "FAIL",
              total, suite.ok ? "" : " -- ", suite.detail.c_str());
  return all ? 0 : 1;
}
