#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "ideal.hpp"
#include "monomial.hpp"
#include "ring.hpp"
#include "stabilization.hpp"

namespace bettistab {
namespace detail {

/// Recursive-descent parser for monomial and family-generator expressions.
///
///   monomial := factor ('*' factor)*
///   factor   := var ('^' exponent)?
///   exponent := nonneg-integer | '(' linear ')'
///   linear   := ['+'|'-'] term (('+'|'-') term)*
///   term     := integer ['n'] | 'n'
///
/// Whitespace is insignificant. The parameter symbol 'n' is only legal in
/// family mode, where exponents become linear functions of n.
class ExpressionParser {
public:
  ExpressionParser(std::string_view text, const RingPtr& ring, bool family_mode)
      : text_(text), ring_(ring), family_(family_mode) {}

  std::vector<std::vector<LinearExponent>> parse_generator_list() {
    std::vector<std::vector<LinearExponent>> gens;
    gens.push_back(parse_monomial_body());
    skip_ws();
    while (!at_end()) {
      expect(',');
      gens.push_back(parse_monomial_body());
      skip_ws();
    }
    return gens;
  }

  std::vector<LinearExponent> parse_single() {
    auto exps = parse_monomial_body();
    skip_ws();
    if (!at_end()) fail("unexpected trailing input");
    return exps;
  }

private:
  std::vector<LinearExponent> parse_monomial_body() {
    std::vector<LinearExponent> exps(ring_->num_vars());
    parse_factor(exps);
    while (true) {
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        parse_factor(exps);
      } else {
        break;
      }
    }
    return exps;
  }

  void parse_factor(std::vector<LinearExponent>& exps) {
    skip_ws();
    const std::size_t start = pos_;
    if (at_end() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
      fail("expected variable name");
    std::string name;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
      name += text_[pos_++];

    const std::size_t v = ring_->index_of(name);
    if (v == RingContext::npos) fail_at("unknown variable '" + name + "'", start);

    LinearExponent e{0, 1};
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      e = parse_exponent();
    }
    exps[v].slope += e.slope;
    exps[v].offset += e.offset;
    if (exps[v].slope > kMaxExponent || exps[v].offset > kMaxExponent)
      fail_at("exponent exceeds 2^32", start);
  }

  LinearExponent parse_exponent() {
    skip_ws();
    if (at_end()) fail("expected exponent");
    if (peek() == '(') {
      ++pos_;
      LinearExponent e = parse_linear();
      skip_ws();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) return {0, parse_integer()};
    fail("malformed exponent");
    return {};
  }

  LinearExponent parse_linear() {
    LinearExponent acc{0, 0};
    bool first = true;
    while (true) {
      skip_ws();
      std::int64_t sign = 1;
      if (!at_end() && (peek() == '+' || peek() == '-')) {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        break;
      }
      const std::size_t start = pos_;
      std::int64_t coefficient = 1;
      bool saw_digits = false;
      if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        coefficient = parse_integer();
        saw_digits = true;
      }
      skip_ws();
      if (!at_end() && peek() == 'n' && !is_ident_char(pos_ + 1)) {
        ++pos_;
        if (!family_) fail_at("parameter 'n' is not allowed outside family mode", start);
        acc.slope += sign * coefficient;
      } else {
        if (!saw_digits) fail("malformed exponent");
        acc.offset += sign * coefficient;
      }
      if (std::abs(acc.slope) > kMaxExponent || std::abs(acc.offset) > kMaxExponent)
        fail_at("exponent coefficient exceeds 2^32", start);
      first = false;
    }
    return acc;
  }

  std::int64_t parse_integer() {
    std::int64_t value = 0;
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected integer");
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > kMaxExponent) fail("integer literal exceeds 2^32");
      ++pos_;
    }
    return value;
  }

  bool is_ident_char(std::size_t at) const {
    if (at >= text_.size()) return false;
    const char c = text_[at];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  char peek() const { return text_[pos_]; }
  bool at_end() const { return pos_ >= text_.size(); }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  void expect(char c) {
    skip_ws();
    if (at_end() || peek() != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& message) const { fail_at(message, pos_); }
  [[noreturn]] void fail_at(const std::string& message, std::size_t at) const {
    throw parse_error(message, at + 1);
  }

  std::string_view text_;
  RingPtr ring_;
  bool family_;
  std::size_t pos_ = 0;
};

inline bool valid_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

}  // namespace detail

/// Parses a comma-separated variable list, e.g. "x1, x2, x3".
inline RingPtr parse_ring(std::string_view text, bool family_mode = false) {
  std::vector<std::string> names;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view raw = text.substr(pos, comma - pos);
    std::size_t lead = 0;
    while (lead < raw.size() && std::isspace(static_cast<unsigned char>(raw[lead]))) ++lead;
    std::size_t trail = raw.size();
    while (trail > lead && std::isspace(static_cast<unsigned char>(raw[trail - 1]))) --trail;
    std::string name(raw.substr(lead, trail - lead));
    if (!detail::valid_identifier(name))
      throw parse_error("invalid variable name '" + name + "'", pos + lead + 1);
    if (family_mode && name == "n")
      throw parse_error("'n' is reserved for the family parameter", pos + lead + 1);
    names.push_back(std::move(name));
    if (comma == text.size()) break;
    pos = comma + 1;
  }
  return make_ring(std::move(names));
}

/// Parses one monomial expression; repeated variables accumulate additively.
inline Monomial parse_monomial(std::string_view text, const RingPtr& ring) {
  detail::ExpressionParser parser(text, ring, /*family_mode=*/false);
  const auto linear = parser.parse_single();
  std::vector<exp_t> exps(linear.size());
  for (std::size_t v = 0; v < linear.size(); ++v) exps[v] = linear[v].offset;
  return Monomial(ring, std::move(exps));
}

/// Parses a comma-separated generator list into a monomial ideal.
inline MonomialIdeal parse_ideal(std::string_view text, const RingPtr& ring) {
  detail::ExpressionParser parser(text, ring, /*family_mode=*/false);
  const auto rows = parser.parse_generator_list();
  std::vector<Monomial> gens;
  gens.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<exp_t> exps(row.size());
    for (std::size_t v = 0; v < row.size(); ++v) exps[v] = row[v].offset;
    gens.emplace_back(ring, std::move(exps));
  }
  return MonomialIdeal::from_generators(std::move(gens));
}

/// Parses a generator list whose exponents may be linear in 'n'.
inline LinearExponentFamily parse_family(std::string_view text, const RingPtr& ring,
                                         std::int64_t n_min = 1) {
  detail::ExpressionParser parser(text, ring, /*family_mode=*/true);
  return LinearExponentFamily(ring, parser.parse_generator_list(), n_min);
}

}  // namespace bettistab
