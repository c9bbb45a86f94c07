#include <doctest.h>

#include "wittkit/error.hpp"
#include "wittkit/field.hpp"

using namespace wittkit;

TEST_CASE("prime field arithmetic uses representatives 0..p-1") {
  const Field f(FieldSpec::prime(13));
  CHECK(f.from_integer(-1) == 12);
  CHECK(f.from_integer(27) == 1);
  CHECK(f.inv(Coeff(5)) == 8);
  CHECK(f.mul(Coeff(5), Coeff(8)) == 1);
  CHECK(f.normalize(mpq_class(1, 2)) == 7);
  CHECK(f.div(Coeff(1), Coeff(5)) == 8);
  CHECK(f.neg(Coeff(0)) == 0);
  CHECK_THROWS_AS(f.inv(Coeff(0)), NotInvertible);
  CHECK_THROWS_AS(f.normalize(mpq_class(1, 13)), PreconditionViolation);
}

TEST_CASE("rational arithmetic is exact") {
  const Field q(FieldSpec::rationals());
  CHECK(q.add(mpq_class(1, 3), mpq_class(1, 6)) == mpq_class(1, 2));
  CHECK(q.inv(mpq_class(-2, 7)) == mpq_class(-7, 2));
  mpq_class big("123456789012345678901234567890/7");
  CHECK(q.mul(big, q.inv(big)) == 1);
  CHECK(q.describe() == "QQ");
}

TEST_CASE("field specs exclude characteristics 2 and 3 and composites") {
  CHECK_THROWS_AS(Field(FieldSpec::prime(2)), PreconditionViolation);
  CHECK_THROWS_AS(Field(FieldSpec::prime(3)), PreconditionViolation);
  CHECK_THROWS_AS(Field(FieldSpec::prime(9)), PreconditionViolation);
  CHECK_THROWS_AS(Field(FieldSpec::prime(1)), PreconditionViolation);
  CHECK_NOTHROW(Field(FieldSpec::prime(5)));
  CHECK(Field(FieldSpec::prime(7)).describe() == "GF(7)");
  CHECK(is_prime_number(1000003));
  CHECK_FALSE(is_prime_number(1000001));
}
