#include "had/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>

#include "had/binomial.hpp"
#include "had/counts.hpp"
#include "had/error.hpp"
#include "had/hadamard.hpp"
#include "had/oracle.hpp"

namespace had::cli {

using json = nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;

struct Globals {
  std::uint64_t seed = 0;
  unsigned prime_bits = 62;
  int trials = 8;
  std::string json_path;
  std::uint64_t q = 101;
  unsigned threads = 1;
};

struct Input {
  std::string ref;
  VarietySpec spec;
};

std::vector<Input> load_inputs(const std::vector<std::string>& refs) {
  std::vector<Input> inputs;
  for (const auto& r : refs) inputs.push_back(Input{r, resolve_variety(r)});
  return inputs;
}

std::vector<Variety> instantiate_all(const PrimeField& field, const std::vector<Input>& inputs) {
  std::vector<Variety> out;
  for (const auto& in : inputs) out.push_back(instantiate(field, in.spec));
  return out;
}

json point_json(const ProjectivePoint& p) {
  json coords = json::array();
  for (auto c : p.coords()) coords.push_back(c.value);
  return coords;
}

json inputs_json(const std::vector<Input>& inputs) {
  json arr = json::array();
  for (const auto& in : inputs) {
    arr.push_back({{"name", in.spec.name}, {"source", in.ref}, {"description", write_variety_spec(in.spec)}});
  }
  return arr;
}

json report_header(const std::string& command, const Globals& g, std::uint64_t prime, const std::vector<Input>& inputs) {
  return json{{"schema_version", kSchemaVersion},
              {"command", command},
              {"seed", g.seed},
              {"prime", prime},
              {"prime_bits", g.prime_bits},
              {"trial_count", g.trials},
              {"inputs", inputs_json(inputs)}};
}

json trials_json(const DimensionReport& r) {
  json arr = json::array();
  for (std::size_t i = 0; i < r.trials.size(); ++i) {
    const auto& t = r.trials[i];
    json points = json::array();
    for (const auto& p : t.points) points.push_back(point_json(p));
    arr.push_back({{"index", i}, {"seed", t.seed}, {"points", points}, {"rank", t.rank}, {"degenerate", t.degenerate}});
  }
  return arr;
}

json dimension_result(const DimensionReport& r) {
  return json{{"expected", r.expected},
              {"observed", r.observed},
              {"factor_dims", r.factor_dims},
              {"report_prime", r.prime},
              {"primes_tried", r.primes_tried},
              {"observed_per_prime", r.observed_per_prime}};
}

void write_json(const Globals& g, const json& report) {
  if (g.json_path.empty()) return;
  std::ofstream file(g.json_path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(Errc::InvalidArgument, "cannot write JSON report to " + g.json_path);
  file << report.dump(2) << '\n';
}

void table_row(std::ostream& out, const std::string& key, const std::string& value) {
  out << std::left << std::setw(22) << key << value << '\n';
}

std::string join_names(const std::vector<Input>& inputs) {
  std::string s;
  for (const auto& in : inputs) s += (s.empty() ? "" : " * ") + in.spec.name;
  return s;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : ", ") + std::to_string(x);
  return s;
}

int print_dimension(std::ostream& out, const std::string& what, const DimensionReport& r) {
  table_row(out, "product", what);
  table_row(out, "factor dims", join_ints(r.factor_dims));
  table_row(out, "expected", std::to_string(r.expected));
  table_row(out, "observed", std::to_string(r.observed));
  table_row(out, "verdict", r.verdict.to_string());
  table_row(out, "prime", std::to_string(r.prime));
  if (r.primes_tried.size() > 1) table_row(out, "primes tried", std::to_string(r.primes_tried.size()));
  out << std::right << std::setw(6) << "trial" << std::setw(8) << "rank" << std::setw(12) << "degenerate" << '\n';
  for (std::size_t i = 0; i < r.trials.size(); ++i) {
    out << std::setw(6) << i << std::setw(8) << r.trials[i].rank << std::setw(12)
        << (r.trials[i].degenerate ? "yes" : "no") << '\n';
  }
  out << std::left;
  return r.verdict.kind == VerdictKind::Match ? kExitOk : kExitNegative;
}

DimOptions dim_options(const Globals& g) {
  DimOptions opts;
  opts.trials = g.trials;
  opts.seed = g.seed;
  opts.threads = g.threads;
  return opts;
}

int run_dimension(const std::string& command, const Globals& g, const std::vector<Input>& inputs,
                  const std::function<DimensionReport(const std::vector<Variety>&, const DimOptions&)>& op,
                  const std::string& label, std::ostream& out, const std::string& note = {}) {
  const DimOptions opts = dim_options(g);
  const DimensionReport r = run_hedged(
      [&](const PrimeField& field) { return op(instantiate_all(field, inputs), opts); }, g.seed, g.prime_bits);
  json report = report_header(command, g, session_prime(g.seed, g.prime_bits), inputs);
  report["trials"] = trials_json(r);
  report["verdict"] = r.verdict.to_string();
  report["result"] = dimension_result(r);
  if (!note.empty()) report["result"]["note"] = note;
  write_json(g, report);
  const int code = print_dimension(out, label, r);
  if (!note.empty()) out << "note: " << note << '\n';
  return code;
}

int cmd_twist(const Globals& g, const std::vector<Input>& inputs, TwistMode mode, std::ostream& out) {
  const std::uint64_t prime = session_prime(g.seed, g.prime_bits);
  const PrimeField field(prime);
  const auto factors = instantiate_all(field, inputs);
  TwistConfig cfg;
  cfg.mode = mode;
  cfg.trials = g.trials;
  cfg.seed = g.seed;
  cfg.threads = g.threads;
  const TwistResult result = twist_experiment(factors, cfg);

  json trials = json::array();
  for (std::size_t i = 0; i < result.reports.size(); ++i) {
    const auto& r = result.reports[i];
    json points = json::array();
    for (const auto& p : r.trials.front().points) points.push_back(point_json(p));
    trials.push_back({{"index", i},
                      {"seed", r.trials.front().seed},
                      {"points", points},
                      {"rank", r.trials.front().rank},
                      {"degenerate", r.trials.front().degenerate},
                      {"observed", r.observed},
                      {"verdict", r.verdict.to_string()}});
  }
  const bool all = result.successes == static_cast<int>(result.reports.size());
  json report = report_header("twist", g, prime, inputs);
  report["trials"] = trials;
  report["verdict"] = all ? "MATCH" : "PARTIAL";
  report["result"] = {{"mode", to_string(mode)},
                      {"expected", result.expected},
                      {"successes", result.successes},
                      {"trials", result.reports.size()}};
  write_json(g, report);

  table_row(out, "product", join_names(inputs));
  table_row(out, "mode", to_string(mode));
  table_row(out, "expected", std::to_string(result.expected));
  table_row(out, "successes", std::to_string(result.successes) + "/" + std::to_string(result.reports.size()));
  out << std::right << std::setw(6) << "trial" << std::setw(10) << "observed" << std::setw(14) << "verdict" << '\n';
  for (std::size_t i = 0; i < result.reports.size(); ++i) {
    out << std::setw(6) << i << std::setw(10) << result.reports[i].observed << std::setw(14)
        << result.reports[i].verdict.to_string() << '\n';
  }
  out << std::left;
  return all ? kExitOk : kExitNegative;
}

int cmd_binomial(const Globals& g, const Input& input, int max_degree, std::optional<int> samples,
                 const std::string& expect, std::ostream& out) {
  const std::uint64_t prime = session_prime(g.seed, g.prime_bits);
  const PrimeField field(prime);
  const Variety y = instantiate(field, input.spec);
  const BinomialResult r = binomial_containment(y, max_degree, samples, SeedStream(g.seed).split(stream::kBinomial));
  const std::string verdict = r.witness ? "FOUND" : "NOT_FOUND_UP_TO(" + std::to_string(max_degree) + ")";

  json result{{"max_degree", r.max_degree}, {"samples", r.samples}, {"verification_samples", r.verification_samples}};
  if (r.witness) {
    result["witness"] = {{"a", r.witness->a},
                         {"b", r.witness->b},
                         {"lambda", r.witness->lambda.value},
                         {"degree", r.witness->degree()},
                         {"text", format_witness(field, *r.witness)},
                         {"note", "lambda is a residue modulo the working prime"}};
  } else {
    result["witness"] = nullptr;
  }
  json report = report_header("binomial", g, prime, {input});
  report["trials"] = json::array();
  report["verdict"] = verdict;
  report["result"] = result;
  write_json(g, report);

  table_row(out, "variety", input.spec.name);
  table_row(out, "max degree", std::to_string(max_degree));
  table_row(out, "samples", std::to_string(r.samples));
  if (r.witness) {
    table_row(out, "result", "Found " + format_witness(field, *r.witness));
  } else {
    table_row(out, "result", "NotFoundUpTo(" + std::to_string(max_degree) + ")");
  }
  const bool wanted = expect == "found" ? r.witness.has_value() : !r.witness.has_value();
  return wanted ? kExitOk : kExitNegative;
}

int cmd_counts(const Globals& g, int d, std::optional<int> up_to, std::ostream& out) {
  const int last = up_to.value_or(d);
  json trials = json::array();
  bool all_hold = true;
  for (int k = d; k <= last; ++k) {
    const ParamCountReport r = surface_parameter_counts(k);
    all_hold = all_hold && r.holds;
    trials.push_back({{"d", r.d},
                      {"dim_family", r.dim_family},
                      {"dim_ambient", r.dim_ambient},
                      {"margin", r.margin},
                      {"holds", r.holds}});
    out << r.summary() << '\n';
  }
  json report = report_header("counts", g, 0, {});
  report["trials"] = trials;
  report["verdict"] = all_hold ? "HOLDS" : "FAILS";
  report["result"] = {{"d_first", d},
                      {"d_last", last},
                      {"family_formula",
                       "two planes (3 + 3) plus two plane curves of degree d, each 2 * (binom(d+2,2) - 1) in "
                       "total; for d = 4 the second curve costs dim PGL(3) = 8"},
                      {"note",
                       "a per-curve count of binom(d+2,2) - 2 does not reproduce the total 6 + (d+2)(d+1) - 2; "
                       "binom(d+2,2) - 1 per curve does, and the total is what is used"}};
  write_json(g, report);
  return all_hold ? kExitOk : kExitNegative;
}

int cmd_sample(const Globals& g, const Input& input, int count, std::ostream& out) {
  const std::uint64_t prime = session_prime(g.seed, g.prime_bits);
  const PrimeField field(prime);
  const Variety x = instantiate(field, input.spec);
  const SeedStream root = SeedStream(g.seed).split(stream::kSample);
  json trials = json::array();
  table_row(out, "variety", x.name());
  table_row(out, "prime", std::to_string(prime));
  for (int i = 0; i < count; ++i) {
    const ProjectivePoint p = sample_point(x, root.split(static_cast<std::uint64_t>(i)));
    trials.push_back({{"index", i}, {"points", json::array({point_json(p)})}});
    std::string text = "[";
    for (std::size_t c = 0; c < p.size(); ++c) text += (c ? ":" : "") + std::to_string(p[c].value);
    out << text << "]\n";
  }
  json report = report_header("sample", g, prime, {input});
  report["trials"] = trials;
  report["verdict"] = "OK";
  report["result"] = {{"count", count}};
  write_json(g, report);
  return kExitOk;
}

int cmd_oracle(const Globals& g, const std::vector<Input>& inputs, const std::string& route,
               std::optional<int> expect_dim, std::ostream& out) {
  const PrimeField field(g.q);
  const auto factors = instantiate_all(field, inputs);
  PointCount pc;
  if (factors.size() == 1) {
    pc = point_count_dim(factors.front());
  } else if (route == "product") {
    pc = point_count_product(factors);
  } else {
    Variety acc = factors.front();
    const SeedStream rng = SeedStream(g.seed).split(stream::kCheck);
    for (std::size_t j = 1; j < factors.size(); ++j) acc = hadamard_param_product(acc, factors[j], rng.split(j));
    pc = point_count_dim(acc);
  }
  const int claimed = expect_dim.value_or(pc.dim_estimate);
  const bool in_window = within_window(pc.count, pc.q, claimed);
  const bool ok = in_window && (!expect_dim || *expect_dim == pc.dim_estimate);

  json report = report_header("oracle", g, g.q, inputs);
  report["trials"] = json::array();
  report["verdict"] = ok ? "MATCH" : "MISMATCH";
  report["result"] = {{"q", pc.q},
                      {"route", factors.size() == 1 ? "param" : route},
                      {"tuples", pc.tuples},
                      {"count", pc.count},
                      {"dim_estimate", pc.dim_estimate},
                      {"claimed_dim", claimed},
                      {"within_window", in_window}};
  write_json(g, report);

  table_row(out, "variety", join_names(inputs));
  table_row(out, "q", std::to_string(pc.q));
  table_row(out, "tuples", std::to_string(pc.tuples));
  table_row(out, "count", std::to_string(pc.count));
  table_row(out, "dim estimate", std::to_string(pc.dim_estimate));
  table_row(out, "within window", in_window ? "yes" : "no");
  return ok ? kExitOk : kExitNegative;
}

int cmd_catalogue(const Globals& g, std::ostream& out) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(catalogue_dir())) {
    if (entry.path().extension() == ".var") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<Input> inputs;
  out << std::left << std::setw(24) << "name" << std::setw(4) << "n" << std::setw(10) << "kind" << "polys" << '\n';
  for (const auto& f : files) {
    const VarietySpec spec = load_variety_file(f);
    inputs.push_back(Input{"catalogue:" + f.stem().string(), spec});
    out << std::setw(24) << spec.name << std::setw(4) << spec.n << std::setw(10)
        << (spec.kind == VarietyKind::Param ? "param" : "implicit") << spec.polys.size() << '\n';
  }
  json report = report_header("catalogue", g, 0, inputs);
  report["trials"] = json::array();
  report["verdict"] = "OK";
  report["result"] = {{"entries", inputs.size()}};
  write_json(g, report);
  return kExitOk;
}

}  // namespace

std::filesystem::path catalogue_dir() {
  if (const char* env = std::getenv("HAD_CATALOGUE"); env != nullptr && *env != '\0') return env;
  return HAD_CATALOGUE_DIR;
}

VarietySpec resolve_variety(const std::string& ref) {
  constexpr std::string_view kPrefix = "catalogue:";
  if (ref.starts_with(kPrefix)) {
    const std::string name = ref.substr(kPrefix.size());
    const auto path = catalogue_dir() / (name + ".var");
    if (!std::filesystem::exists(path)) throw Error(Errc::InvalidArgument, "no catalogue entry named '" + name + "'");
    return load_variety_file(path);
  }
  return load_variety_file(ref);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dimensions of Hadamard products of projective varieties over prime fields", "had"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "Master seed (default 0)");
  app.add_option("--prime-bits", g.prime_bits, "Bit length of the working prime")->check(CLI::Range(3u, 62u));
  app.add_option("--trials", g.trials, "Random trials per computation")->check(CLI::Range(1, 1000000));
  app.add_option("--json", g.json_path, "Write the machine-readable report to this path");
  app.add_option("--q", g.q, "Small prime for the point-count oracle");
  app.add_option("--threads", g.threads, "Worker threads for independent trials")->check(CLI::Range(1u, 256u));

  std::vector<std::string> refs;
  auto* dim = app.add_subcommand("dim", "Dimension of X * Y from the Terracini-type frame");
  dim->add_option("varieties", refs, "Two varieties")->required()->expected(2);

  auto* multi = app.add_subcommand("multi", "Dimension of X_1 * ... * X_k");
  multi->add_option("varieties", refs, "One or more varieties")->required()->expected(1, 64);

  std::string mode_text = "fix_last";
  auto* twist = app.add_subcommand("twist", "Random projective twists of the factors");
  twist->add_option("varieties", refs, "Two or more varieties")->required()->expected(2, 64);
  twist->add_option("--mode", mode_text, "none | fix_last | twist_all")
      ->check(CLI::IsMember({"none", "fix_last", "twist_all"}));

  int k = 2;
  auto* power = app.add_subcommand("power", "Dimension of the k-fold Hadamard power Y * ... * Y");
  power->add_option("variety", refs, "Variety")->required()->expected(1);
  power->add_option("--k", k, "Number of factors")->check(CLI::Range(1, 64));

  int max_degree = 3;
  std::optional<int> samples;
  std::string expect = "found";
  auto* binomial = app.add_subcommand("binomial", "Search for a binomial hypersurface containing Y");
  binomial->add_option("variety", refs, "Variety")->required()->expected(1);
  binomial->add_option("--max-degree", max_degree, "Largest binomial degree")->check(CLI::Range(1, 12));
  binomial->add_option("--samples", samples, "Sample points per degree")->check(CLI::Range(1, 4096));
  binomial->add_option("--expect", expect, "found | none: which outcome exits 0")
      ->check(CLI::IsMember({"found", "none"}));

  int d = 4;
  std::optional<int> up_to;
  auto* counts = app.add_subcommand("counts", "Parameter counts for surfaces as products of curves");
  counts->add_option("--d", d, "Surface degree");
  counts->add_option("--up-to", up_to, "Check every degree from --d to this one");

  int sample_count = 4;
  auto* sample = app.add_subcommand("sample", "Random points of a variety");
  sample->add_option("variety", refs, "Variety")->required()->expected(1);
  sample->add_option("--count", sample_count, "Number of points")->check(CLI::Range(1, 100000));

  std::string route = "product";
  std::optional<int> expect_dim;
  auto* oracle = app.add_subcommand("oracle", "Exhaustive point count over F_q");
  oracle->add_option("varieties", refs, "One variety, or several for their Hadamard product")
      ->required()
      ->expected(1, 8);
  oracle->add_option("--route", route, "product | param: how a product of several factors is enumerated")
      ->check(CLI::IsMember({"product", "param"}));
  oracle->add_option("--expect-dim", expect_dim, "Dimension the count must support");

  auto* catalogue = app.add_subcommand("catalogue", "List the shipped varieties");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*dim) {
      const auto inputs = load_inputs(refs);
      return run_dimension("dim", g, inputs,
                           [](const std::vector<Variety>& f, const DimOptions& o) { return terracini_dim(f[0], f[1], o); },
                           join_names(inputs), out);
    }
    if (*multi) {
      const auto inputs = load_inputs(refs);
      return run_dimension("multi", g, inputs,
                           [](const std::vector<Variety>& f, const DimOptions& o) { return multi_dim(f, o); },
                           join_names(inputs), out);
    }
    if (*power) {
      const auto inputs = load_inputs(refs);
      return run_dimension("power", g, inputs,
                           [k](const std::vector<Variety>& f, const DimOptions& o) { return hadamard_power(f[0], k, o); },
                           inputs.front().spec.name + "^" + std::to_string(k), out,
                           "Hadamard power Y^k with independent points per copy, read as the k-th Hadamard "
                           "secant product; expected dimension min{n, k dim Y}");
    }
    if (*twist) return cmd_twist(g, load_inputs(refs), *parse_twist_mode(mode_text), out);
    if (*binomial) return cmd_binomial(g, load_inputs(refs).front(), max_degree, samples, expect, out);
    if (*counts) return cmd_counts(g, d, up_to, out);
    if (*sample) return cmd_sample(g, load_inputs(refs).front(), sample_count, out);
    if (*oracle) return cmd_oracle(g, load_inputs(refs), route, expect_dim, out);
    if (*catalogue) return cmd_catalogue(g, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace had::cli
