#include "wittkit/field.hpp"

#include "wittkit/error.hpp"

namespace wittkit {

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  mpz_class z(std::to_string(n));
  return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

Field::Field(FieldSpec spec) : spec_(spec) {
  if (spec_.kind == FieldKind::prime_field) {
    if (!is_prime_number(spec_.p))
      throw PreconditionViolation("field modulus " + std::to_string(spec_.p) + " is not prime");
    if (spec_.p == 2 || spec_.p == 3)
      throw PreconditionViolation("characteristic 2 and 3 are not supported");
    modulus_ = mpz_class(std::to_string(spec_.p));
  } else {
    spec_.p = 0;
  }
}

mpz_class Field::reduce(const mpz_class& value) const {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), modulus_.get_mpz_t());
  return r;
}

Coeff Field::normalize(const mpq_class& value) const {
  if (!is_prime_field()) {
    Coeff out(value);
    out.canonicalize();
    return out;
  }
  const mpz_class num = reduce(value.get_num());
  const mpz_class den = reduce(value.get_den());
  if (den == 0) throw PreconditionViolation("denominator vanishes modulo " + std::to_string(spec_.p));
  mpz_class den_inv;
  mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), modulus_.get_mpz_t());
  return Coeff(reduce(num * den_inv));
}

Coeff Field::add(const Coeff& a, const Coeff& b) const {
  if (!is_prime_field()) return Coeff(a + b);
  mpz_class s = a.get_num() + b.get_num();
  if (s >= modulus_) s -= modulus_;
  return Coeff(s);
}

Coeff Field::sub(const Coeff& a, const Coeff& b) const {
  if (!is_prime_field()) return Coeff(a - b);
  mpz_class s = a.get_num() - b.get_num();
  if (s < 0) s += modulus_;
  return Coeff(s);
}

Coeff Field::mul(const Coeff& a, const Coeff& b) const {
  if (!is_prime_field()) return Coeff(a * b);
  return Coeff(reduce(a.get_num() * b.get_num()));
}

Coeff Field::neg(const Coeff& a) const {
  if (!is_prime_field()) return Coeff(-a);
  if (a == 0) return a;
  return Coeff(modulus_ - a.get_num());
}

Coeff Field::inv(const Coeff& a) const {
  if (is_zero(a)) throw NotInvertible("division by zero coefficient");
  if (!is_prime_field()) return Coeff(1 / a);
  mpz_class r;
  mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), modulus_.get_mpz_t());
  return Coeff(r);
}

std::string Field::describe() const {
  if (!is_prime_field()) return "QQ";
  return "GF(" + std::to_string(spec_.p) + ")";
}

}  // namespace wittkit
