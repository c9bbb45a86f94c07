#include "wittkit/polynomial.hpp"

#include <algorithm>
#include <set>

#include "wittkit/error.hpp"

namespace wittkit {

PolyRing::PolyRing(Field field, std::vector<std::string> vars, MonomialOrder order)
    : field_(std::move(field)), vars_(std::move(vars)), order_(order) {
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.empty()) throw PreconditionViolation("empty variable name");
    if (!seen.insert(v).second) throw PreconditionViolation("duplicate variable name '" + v + "'");
  }
}

Polynomial PolyRing::constant(const Coeff& c) const {
  Coeff n = field_.normalize(c);
  if (Field::is_zero(n)) return {};
  return Polynomial({Term{unit_exponents(), std::move(n)}});
}

Polynomial PolyRing::variable(std::size_t index) const {
  Exponents e = unit_exponents();
  e.at(index) = 1;
  return Polynomial({Term{std::move(e), Coeff(1)}});
}

Polynomial PolyRing::monomial(Exponents e, const Coeff& c) const {
  Coeff n = field_.normalize(c);
  if (Field::is_zero(n)) return {};
  return Polynomial({Term{std::move(e), std::move(n)}});
}

Polynomial PolyRing::from_terms(std::vector<Term> terms) const {
  std::sort(terms.begin(), terms.end(),
            [this](const Term& a, const Term& b) { return compare(a.exponents, b.exponents) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    Coeff c = field_.normalize(t.coeff);
    if (!out.empty() && out.back().exponents == t.exponents) {
      out.back().coeff = field_.add(out.back().coeff, c);
    } else {
      if (!out.empty() && Field::is_zero(out.back().coeff)) out.pop_back();
      out.push_back(Term{std::move(t.exponents), std::move(c)});
    }
  }
  if (!out.empty() && Field::is_zero(out.back().coeff)) out.pop_back();
  return Polynomial(std::move(out));
}

Polynomial PolyRing::add(const Polynomial& f, const Polynomial& g) const {
  const auto& a = f.terms_;
  const auto& b = g.terms_;
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const int c = compare(a[i].exponents, b[j].exponents);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
    } else {
      Coeff s = field_.add(a[i].coeff, b[j].coeff);
      if (!Field::is_zero(s)) out.push_back(Term{a[i].exponents, std::move(s)});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
  out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
  return Polynomial(std::move(out));
}

Polynomial PolyRing::neg(const Polynomial& f) const {
  std::vector<Term> out = f.terms_;
  for (auto& t : out) t.coeff = field_.neg(t.coeff);
  return Polynomial(std::move(out));
}

Polynomial PolyRing::sub(const Polynomial& f, const Polynomial& g) const { return add(f, neg(g)); }

Polynomial PolyRing::scale(const Polynomial& f, const Coeff& c) const {
  if (Field::is_zero(c)) return {};
  std::vector<Term> out = f.terms_;
  for (auto& t : out) t.coeff = field_.mul(t.coeff, c);
  return Polynomial(std::move(out));
}

Polynomial PolyRing::mul_term(const Polynomial& f, const Exponents& e, const Coeff& c) const {
  if (Field::is_zero(c)) return {};
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms_) out.push_back(Term{multiply(t.exponents, e), field_.mul(t.coeff, c)});
  // multiplication by a monomial preserves any monomial order
  return Polynomial(std::move(out));
}

Polynomial PolyRing::sub_mul_term(const Polynomial& f, const Exponents& e, const Coeff& c,
                                  const Polynomial& g) const {
  return add(f, mul_term(g, e, field_.neg(c)));
}

Polynomial PolyRing::mul(const Polynomial& f, const Polynomial& g) const {
  if (f.is_zero() || g.is_zero()) return {};
  if (f.size() < g.size()) return mul(g, f);
  Polynomial acc;
  for (const auto& t : g.terms_) acc = add(acc, mul_term(f, t.exponents, t.coeff));
  return acc;
}

Polynomial PolyRing::pow(const Polynomial& f, unsigned k) const {
  Polynomial result = one();
  Polynomial base = f;
  while (k != 0) {
    if (k & 1u) result = mul(result, base);
    k >>= 1;
    if (k != 0) base = mul(base, base);
  }
  return result;
}

Polynomial PolyRing::make_monic(const Polynomial& f) const {
  if (f.is_zero() || Field::is_one(f.leading_coeff())) return f;
  return scale(f, field_.inv(f.leading_coeff()));
}

std::uint64_t PolyRing::degree(const Polynomial& f) const {
  std::uint64_t d = 0;
  for (const auto& t : f.terms_) d = std::max(d, total_degree(t.exponents));
  return d;
}

}  // namespace wittkit
