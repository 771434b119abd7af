#include <algorithm>
#include <cctype>
#include <numeric>
#include <string>

#include "had/error.hpp"
#include "had/poly.hpp"

namespace had {

namespace {

class Parser {
 public:
  Parser(const PrimeField& field, std::string_view text, std::span<const std::string> names)
      : field_(field), text_(text), names_(names) {}

  MultiPoly run() {
    skip_space();
    if (pos_ == text_.size()) throw SyntaxError(pos_, "empty expression");
    MultiPoly result = expr();
    skip_space();
    if (pos_ != text_.size()) throw SyntaxError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return result;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly acc = term();
    for (;;) {
      if (accept('+')) {
        acc = add(field_, acc, term());
      } else if (accept('-')) {
        acc = sub(field_, acc, term());
      } else {
        return acc;
      }
    }
  }

  MultiPoly term() {
    MultiPoly acc = unary();
    while (accept('*')) acc = mul(field_, acc, unary());
    return acc;
  }

  MultiPoly unary() {
    if (accept('-')) return scale(field_, unary(), field_.neg(field_.one()));
    if (accept('+')) return unary();
    return power();
  }

  MultiPoly power() {
    MultiPoly base = atom();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      std::uint64_t e = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        e = e * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
        if (e > 1'000'000) throw SyntaxError(start, "exponent too large");
        ++pos_;
      }
      if (pos_ == start) throw SyntaxError(pos_, "expected exponent after '^'");
      base = pow(field_, base, static_cast<std::uint32_t>(e));
    }
    return base;
  }

  MultiPoly atom() {
    skip_space();
    if (pos_ == text_.size()) throw SyntaxError(pos_, "unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!accept(')')) throw SyntaxError(pos_, "expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      FieldElem value = field_.zero();
      const FieldElem ten = field_.from_uint(10);
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        value = field_.add(field_.mul(value, ten), field_.from_uint(static_cast<std::uint64_t>(text_[pos_] - '0')));
        ++pos_;
      }
      return MultiPoly::constant(field_, names_.size(), value);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      const auto it = std::find(names_.begin(), names_.end(), name);
      if (it == names_.end()) {
        throw Error(Errc::UnknownVariable,
                    "'" + std::string(name) + "' at position " + std::to_string(start));
      }
      return MultiPoly::variable(names_.size(), static_cast<std::size_t>(it - names_.begin()));
    }
    throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
  }

  const PrimeField& field_;
  std::string_view text_;
  std::span<const std::string> names_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::string> default_variable_names(std::size_t count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 0; i < count; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

MultiPoly parse(const PrimeField& field, std::string_view text, std::span<const std::string> names) {
  return Parser(field, text, names).run();
}

std::int64_t signed_value(const PrimeField& field, FieldElem c) {
  const std::uint64_t p = field.modulus();
  if (c.value <= p / 2) return static_cast<std::int64_t>(c.value);
  return -static_cast<std::int64_t>(p - c.value);
}

std::string format_monomial(const Exponent& e, std::span<const std::string> names) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

std::string format(const PrimeField& field, const MultiPoly& f, std::span<const std::string> names) {
  if (names.size() != f.nvars()) throw Error(Errc::ArityMismatch, "variable name count differs from variable count");
  if (f.is_zero()) return "0";

  std::vector<const Term*> order;
  for (const auto& t : f.terms()) order.push_back(&t);
  auto degree = [](const Term* t) { return std::accumulate(t->exponent.begin(), t->exponent.end(), 0u); };
  std::sort(order.begin(), order.end(), [&](const Term* a, const Term* b) {
    const auto da = degree(a), db = degree(b);
    if (da != db) return da > db;
    return a->exponent > b->exponent;
  });

  std::string out;
  for (const Term* t : order) {
    const std::int64_t c = signed_value(field, t->coeff);
    const bool negative = c < 0;
    const std::uint64_t magnitude = negative ? static_cast<std::uint64_t>(-(c + 1)) + 1 : static_cast<std::uint64_t>(c);
    const bool constant = degree(t) == 0;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (constant) {
      out += std::to_string(magnitude);
    } else {
      if (magnitude != 1) out += std::to_string(magnitude) + '*';
      out += format_monomial(t->exponent, names);
    }
  }
  return out;
}

}  // namespace had
