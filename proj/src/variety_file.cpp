#include <charconv>
#include <fstream>
#include <sstream>

#include "had/error.hpp"
#include "had/variety.hpp"

namespace had {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == ',')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != ',') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

template <class Int>
Int to_int(std::string_view word, std::size_t line) {
  Int value{};
  const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc{} || ptr != word.data() + word.size()) {
    throw Error(Errc::FormatError, "line " + std::to_string(line) + ": expected an integer, got '" + std::string(word) + "'");
  }
  return value;
}

}  // namespace

VarietySpec parse_variety_spec(std::string_view text) {
  VarietySpec spec;
  bool have_name = false, have_n = false, have_kind = false, have_params = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const std::string_view line = strip(raw);
    if (line.empty() || line.front() == '#') continue;

    const std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw Error(Errc::FormatError, "line " + std::to_string(line_no) + ": expected 'key: value'");
    }
    const std::string_view key = strip(line.substr(0, colon));
    const std::string_view value = strip(line.substr(colon + 1));
    auto once = [&](bool& seen) {
      if (seen) throw Error(Errc::FormatError, "line " + std::to_string(line_no) + ": duplicate key '" + std::string(key) + "'");
      seen = true;
    };

    if (key == "name") {
      once(have_name);
      spec.name = std::string(value);
    } else if (key == "note") {
      if (!spec.note.empty()) spec.note += '\n';
      spec.note += std::string(value);
    } else if (key == "n") {
      once(have_n);
      spec.n = to_int<std::size_t>(value, line_no);
    } else if (key == "kind") {
      once(have_kind);
      if (value == "param") {
        spec.kind = VarietyKind::Param;
      } else if (value == "implicit") {
        spec.kind = VarietyKind::Implicit;
      } else {
        throw Error(Errc::FormatError, "line " + std::to_string(line_no) + ": kind must be param or implicit");
      }
    } else if (key == "params") {
      once(have_params);
      for (auto w : words(value)) spec.params.emplace_back(w);
    } else if (key == "groups") {
      for (auto w : words(value)) spec.groups.push_back(to_int<std::size_t>(w, line_no));
    } else if (key == "poly") {
      spec.polys.emplace_back(value);
    } else if (key == "declared_dim") {
      spec.declared_dim = to_int<int>(value, line_no);
    } else if (key == "known_point") {
      std::vector<std::int64_t> coords;
      for (auto w : words(value)) coords.push_back(to_int<std::int64_t>(w, line_no));
      spec.known_point = std::move(coords);
    } else {
      throw Error(Errc::FormatError, "line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
    }
  }
  if (!have_name || !have_n || !have_kind) throw Error(Errc::FormatError, "missing one of name, n, kind");
  if (spec.polys.empty()) throw Error(Errc::FormatError, spec.name + ": no poly lines");
  if (spec.kind == VarietyKind::Param) {
    if (!have_params) throw Error(Errc::FormatError, spec.name + ": param variety needs a params line");
    if (spec.declared_dim || spec.known_point) {
      throw Error(Errc::FormatError, spec.name + ": declared_dim and known_point apply to implicit varieties only");
    }
  } else {
    if (have_params || !spec.groups.empty()) throw Error(Errc::FormatError, spec.name + ": implicit variety takes no params");
    if (!spec.declared_dim) {
      if (spec.polys.size() != 1) throw Error(Errc::FormatError, spec.name + ": declared_dim required for several generators");
    }
  }
  return spec;
}

std::string write_variety_spec(const VarietySpec& spec) {
  std::ostringstream out;
  out << "name: " << spec.name << '\n';
  if (!spec.note.empty()) {
    std::istringstream notes(spec.note);
    for (std::string line; std::getline(notes, line);) out << "note: " << line << '\n';
  }
  out << "n: " << spec.n << '\n';
  out << "kind: " << (spec.kind == VarietyKind::Param ? "param" : "implicit") << '\n';
  if (spec.kind == VarietyKind::Param) {
    out << "params:";
    for (const auto& p : spec.params) out << ' ' << p;
    out << '\n';
    if (spec.groups.size() > 1) {
      out << "groups:";
      for (auto g : spec.groups) out << ' ' << g;
      out << '\n';
    }
  }
  for (const auto& p : spec.polys) out << "poly: " << p << '\n';
  if (spec.declared_dim) out << "declared_dim: " << *spec.declared_dim << '\n';
  if (spec.known_point) {
    out << "known_point:";
    for (auto c : *spec.known_point) out << ' ' << c;
    out << '\n';
  }
  return out.str();
}

VarietySpec load_variety_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::FormatError, "cannot open variety file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_variety_spec(buffer.str());
}

Variety instantiate(const PrimeField& field, const VarietySpec& spec) {
  if (spec.kind == VarietyKind::Param) {
    std::vector<MultiPoly> comps;
    comps.reserve(spec.polys.size());
    for (const auto& text : spec.polys) comps.push_back(parse(field, text, spec.params));
    return Variety::param(field, spec.name, spec.n, spec.params, spec.groups, std::move(comps));
  }
  const auto names = default_variable_names(spec.n + 1);
  std::vector<MultiPoly> gens;
  gens.reserve(spec.polys.size());
  for (const auto& text : spec.polys) gens.push_back(parse(field, text, names));
  std::optional<ProjectivePoint> known;
  if (spec.known_point) {
    std::vector<FieldElem> coords;
    for (auto c : *spec.known_point) coords.push_back(field.from_int(c));
    known = ProjectivePoint::normalized(field, std::move(coords));
  }
  const int dim = spec.declared_dim.value_or(static_cast<int>(spec.n) - 1);
  return Variety::implicit(field, spec.name, spec.n, std::move(gens), dim, std::move(known));
}

}  // namespace had
