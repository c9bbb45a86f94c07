#include "wittkit/poly_format.hpp"

#include <cctype>
#include <limits>

#include "wittkit/error.hpp"

namespace wittkit {

namespace {

class Parser {
public:
  Parser(const PolyRing& ring, std::string_view text, const std::string& where)
      : ring_(ring), text_(text), where_(where) {}

  Polynomial run() {
    std::vector<Term> terms;
    skip_space();
    if (pos_ == text_.size()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    for (;;) {
      Term t = term();
      if (negative) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      skip_space();
      if (pos_ == text_.size()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      negative = peek() == '-';
      ++pos_;
    }
    return ring_.from_terms(std::move(terms));
  }

private:
  char peek() const { return text_[pos_]; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, where_, pos_ + 1); }

  mpz_class integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Term term() {
    skip_space();
    if (pos_ == text_.size()) fail("expected a term");
    Term t{ring_.unit_exponents(), Coeff(1)};
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      mpz_class num = integer();
      mpz_class den = 1;
      skip_space();
      if (pos_ < text_.size() && peek() == '/') {
        ++pos_;
        skip_space();
        const std::size_t at = pos_;
        den = integer();
        if (den == 0) {
          pos_ = at;
          fail("zero denominator");
        }
        if (ring_.field().is_prime_field() && den % ring_.field().spec().p == 0) {
          pos_ = at;
          fail("denominator divisible by the characteristic");
        }
      }
      t.coeff = Coeff(num, den);
      t.coeff.canonicalize();
      skip_space();
      if (pos_ == text_.size() || peek() != '*') return t;
      ++pos_;
    }
    for (;;) {
      factor(t.exponents);
      skip_space();
      if (pos_ == text_.size() || peek() != '*') return t;
      ++pos_;
    }
  }

  void factor(Exponents& e) {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ == text_.size() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) {
      fail("expected a variable");
    }
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    const std::string_view name = text_.substr(start, pos_ - start);
    std::size_t index = ring_.nvars();
    for (std::size_t k = 0; k < ring_.nvars(); ++k) {
      if (ring_.vars()[k] == name) index = k;
    }
    if (index == ring_.nvars()) {
      pos_ = start;
      fail("unknown variable '" + std::string(name) + "'");
    }
    std::uint64_t power = 1;
    skip_space();
    if (pos_ < text_.size() && peek() == '^') {
      ++pos_;
      skip_space();
      const std::size_t at = pos_;
      mpz_class k = integer();
      if (k > std::numeric_limits<std::uint32_t>::max()) {
        pos_ = at;
        fail("exponent too large");
      }
      power = k.get_ui();
    }
    const std::uint64_t total = e[index] + power;
    if (total > std::numeric_limits<std::uint32_t>::max()) fail("exponent too large");
    e[index] = static_cast<std::uint32_t>(total);
  }

  const PolyRing& ring_;
  std::string_view text_;
  const std::string& where_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const PolyRing& ring, std::string_view text, const std::string& where) {
  return Parser(ring, text, where).run();
}

std::string format_coeff(const Coeff& c) { return c.get_str(); }

std::string format_polynomial(const PolyRing& ring, const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& t : f.terms()) {
    Coeff c = t.coeff;
    if (sgn(c) < 0) {
      out += '-';
      c = -c;
    } else if (!out.empty()) {
      out += '+';
    }
    const bool constant = is_one(t.exponents);
    if (constant) {
      out += format_coeff(c);
      continue;
    }
    if (c != 1) out += format_coeff(c) + '*';
    bool first = true;
    for (std::size_t k = 0; k < ring.nvars(); ++k) {
      if (t.exponents[k] == 0) continue;
      if (!first) out += '*';
      first = false;
      out += ring.vars()[k];
      if (t.exponents[k] > 1) out += '^' + std::to_string(t.exponents[k]);
    }
  }
  return out;
}

}  // namespace wittkit
