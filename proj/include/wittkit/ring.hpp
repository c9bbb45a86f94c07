#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wittkit/groebner.hpp"
#include "wittkit/polynomial.hpp"

namespace wittkit {

/// R = k[vars] / (relations). Relations are kept as text so that the spec
/// is exactly what a ring document says.
struct RingSpec {
  FieldSpec field;
  std::vector<std::string> vars;
  MonomialOrder order = MonomialOrder::grevlex;
  std::vector<std::string> relations;

  bool operator==(const RingSpec&) const = default;
};

class Ring;
class RingElement;
using RingPtr = std::shared_ptr<const Ring>;

/// A validated ring with its reduced Gröbner basis computed once. Shared,
/// immutable and safe to read concurrently.
class Ring : public std::enable_shared_from_this<Ring> {
public:
  /// Throws ParseError for bad relations, PreconditionViolation for a bad
  /// field, duplicate variables or the zero ring, BudgetExceeded if the
  /// basis cannot be computed within `budget`.
  static RingPtr create(RingSpec spec, const Budget& budget = {});

  const RingSpec& spec() const noexcept { return spec_; }
  const PolyRing& poly() const noexcept { return poly_; }
  const Field& field() const noexcept { return poly_.field(); }
  const GroebnerBasis& ideal_basis() const noexcept { return basis_; }
  const Budget& budget() const noexcept { return budget_; }

  bool same_as(const Ring& other) const { return this == &other || spec_ == other.spec_; }

  RingElement element(const Polynomial& p) const;
  RingElement parse(const std::string& text, const std::string& where = {}) const;
  RingElement zero() const;
  RingElement one() const;
  RingElement constant(const Coeff& c) const;
  RingElement integer(long value) const;
  RingElement variable(const std::string& name) const;

  std::string describe() const;

private:
  Ring(RingSpec spec, PolyRing poly, const Budget& budget);

  RingSpec spec_;
  PolyRing poly_;
  Budget budget_;
  GroebnerBasis basis_;
};

/// Residue class in normal form modulo the ring's Gröbner basis. A
/// default-constructed element is detached and only good for assignment.
class RingElement {
public:
  RingElement() = default;

  const RingPtr& ring() const noexcept { return ring_; }
  const Polynomial& value() const noexcept { return value_; }

  bool is_zero() const noexcept { return value_.is_zero(); }
  bool is_one() const { return value_.is_constant() && !value_.is_zero() && Field::is_one(value_.constant_value()); }
  /// True when the value lies in the coefficient field.
  bool is_constant() const noexcept { return value_.is_constant(); }
  Coeff constant_value() const { return value_.constant_value(); }

  RingElement operator+(const RingElement& other) const;
  RingElement operator-(const RingElement& other) const;
  RingElement operator*(const RingElement& other) const;
  RingElement operator-() const;
  RingElement& operator+=(const RingElement& other) { return *this = *this + other; }
  RingElement& operator-=(const RingElement& other) { return *this = *this - other; }
  RingElement& operator*=(const RingElement& other) { return *this = *this * other; }
  RingElement pow(unsigned k) const;
  RingElement scaled(const Coeff& c) const;

  /// Same ring and same normal form.
  bool operator==(const RingElement& other) const;

  std::string to_string() const;

private:
  friend class Ring;
  RingElement(RingPtr ring, Polynomial value) : ring_(std::move(ring)), value_(std::move(value)) {}
  const Ring& common(const RingElement& other) const;

  RingPtr ring_;
  Polynomial value_;
};

/// Bézout witness: c with sum c_i * gens_i = 1, or nullopt when the gens do
/// not generate the unit ideal. Every returned witness is re-expanded and
/// checked. Throws PreconditionViolation on an empty list.
std::optional<std::vector<RingElement>> lift_one(const std::vector<RingElement>& gens);

/// u with e*u = 1, or nullopt.
std::optional<RingElement> invert_unit(const RingElement& e);

}  // namespace wittkit
