#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace wittkit {

enum class FieldKind { rationals, prime_field };

/// Coefficient field of a ring: Q, or F_p with p prime and p not in {2, 3}.
struct FieldSpec {
  FieldKind kind = FieldKind::rationals;
  std::uint64_t p = 0;  // prime modulus, prime_field only

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::uint64_t p) { return {FieldKind::prime_field, p}; }

  bool operator==(const FieldSpec&) const = default;
};

using Coeff = mpq_class;

/// Exact coefficient arithmetic. Over Q values are reduced fractions; over
/// F_p they are integers in [0, p).
class Field {
public:
  /// Throws PreconditionViolation unless the spec is valid.
  explicit Field(FieldSpec spec);

  const FieldSpec& spec() const noexcept { return spec_; }
  bool is_prime_field() const noexcept { return spec_.kind == FieldKind::prime_field; }

  /// Maps an arbitrary rational to its canonical representative. Over F_p a
  /// denominator divisible by p is a PreconditionViolation.
  Coeff normalize(const mpq_class& value) const;
  Coeff from_integer(long value) const { return normalize(mpq_class(value)); }

  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff sub(const Coeff& a, const Coeff& b) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  Coeff neg(const Coeff& a) const;
  /// Throws NotInvertible on zero.
  Coeff inv(const Coeff& a) const;
  Coeff div(const Coeff& a, const Coeff& b) const { return mul(a, inv(b)); }

  static bool is_zero(const Coeff& a) { return sgn(a) == 0; }
  static bool is_one(const Coeff& a) { return a == 1; }

  std::string describe() const;

private:
  mpz_class reduce(const mpz_class& value) const;

  FieldSpec spec_;
  mpz_class modulus_;
};

bool is_prime_number(std::uint64_t n);

}  // namespace wittkit
