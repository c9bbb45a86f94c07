#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wittkit/field.hpp"
#include "wittkit/monomial.hpp"

namespace wittkit {

struct Term {
  Exponents exponents;
  Coeff coeff;

  bool operator==(const Term& other) const {
    return exponents == other.exponents && coeff == other.coeff;
  }
};

/// Sparse polynomial: nonzero terms, strictly descending in the monomial
/// order of the PolyRing that built it. Arithmetic lives on PolyRing.
class Polynomial {
public:
  Polynomial() = default;

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const Term& leading() const { return terms_.front(); }
  const Exponents& leading_monomial() const { return terms_.front().exponents; }
  const Coeff& leading_coeff() const { return terms_.front().coeff; }

  /// True for the zero polynomial and nonzero constants.
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && is_one(terms_[0].exponents)); }
  /// Constant coefficient of a constant polynomial (0 for zero).
  Coeff constant_value() const { return terms_.empty() ? Coeff(0) : terms_[0].coeff; }

  bool operator==(const Polynomial& other) const { return terms_ == other.terms_; }

private:
  friend class PolyRing;
  explicit Polynomial(std::vector<Term> terms) : terms_(std::move(terms)) {}

  std::vector<Term> terms_;
};

/// k[x_1..x_n] with a fixed monomial order: the context every polynomial
/// operation runs in.
class PolyRing {
public:
  PolyRing(Field field, std::vector<std::string> vars, MonomialOrder order);

  const Field& field() const noexcept { return field_; }
  const std::vector<std::string>& vars() const noexcept { return vars_; }
  std::size_t nvars() const noexcept { return vars_.size(); }
  MonomialOrder order() const noexcept { return order_; }

  int compare(const Exponents& a, const Exponents& b) const { return compare_monomials(a, b, order_); }

  Polynomial zero() const { return {}; }
  Polynomial one() const { return constant(Coeff(1)); }
  Polynomial constant(const Coeff& c) const;
  Polynomial variable(std::size_t index) const;
  Polynomial monomial(Exponents e, const Coeff& c) const;
  /// Sorts, merges duplicates, normalizes coefficients and drops zeros.
  Polynomial from_terms(std::vector<Term> terms) const;

  Polynomial add(const Polynomial& f, const Polynomial& g) const;
  Polynomial sub(const Polynomial& f, const Polynomial& g) const;
  Polynomial neg(const Polynomial& f) const;
  Polynomial mul(const Polynomial& f, const Polynomial& g) const;
  Polynomial scale(const Polynomial& f, const Coeff& c) const;
  /// f * c * x^e
  Polynomial mul_term(const Polynomial& f, const Exponents& e, const Coeff& c) const;
  /// f - c * x^e * g, the reduction step.
  Polynomial sub_mul_term(const Polynomial& f, const Exponents& e, const Coeff& c,
                          const Polynomial& g) const;
  Polynomial pow(const Polynomial& f, unsigned k) const;
  Polynomial make_monic(const Polynomial& f) const;

  /// Total degree; 0 for constants and for zero.
  std::uint64_t degree(const Polynomial& f) const;

  Exponents unit_exponents() const { return Exponents(vars_.size(), 0); }

private:
  Field field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

}  // namespace wittkit
