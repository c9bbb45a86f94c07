#include <doctest.h>

#include "support/generators.hpp"
#include "wittkit/error.hpp"
#include "wittkit/poly_format.hpp"

using namespace wittkit;
using namespace wk_test;

namespace {

PolyRing xyz(MonomialOrder order = MonomialOrder::grevlex, FieldSpec f = FieldSpec::rationals()) {
  return PolyRing(Field(f), {"x", "y", "z"}, order);
}

std::string roundtrip(const PolyRing& r, const std::string& s) { return format_polynomial(r, parse_polynomial(r, s)); }

}  // namespace

TEST_CASE("canonical text") {
  const PolyRing r = xyz();
  CHECK(roundtrip(r, "x^2*y-3/2*x+1") == "x^2*y-3/2*x+1");
  CHECK(roundtrip(r, " x ^ 2 * y - 3 / 2 * x + 1 ") == "x^2*y-3/2*x+1");
  CHECK(roundtrip(r, "1 + x") == "x+1");
  CHECK(roundtrip(r, "x - x") == "0");
  CHECK(roundtrip(r, "-x") == "-x");
  CHECK(roundtrip(r, "2*x*x") == "2*x^2");
  CHECK(roundtrip(r, "4/6") == "2/3");
  CHECK(roundtrip(r, "0") == "0");
  CHECK(roundtrip(r, "-1") == "-1");
  const PolyRing f7 = xyz(MonomialOrder::grevlex, FieldSpec::prime(7));
  CHECK(roundtrip(f7, "-x") == "6*x");
  CHECK(roundtrip(f7, "1/2*y") == "4*y");
  CHECK(roundtrip(f7, "7*x+y") == "y");
}

TEST_CASE("monomial orders") {
  CHECK(roundtrip(xyz(MonomialOrder::grevlex), "x^2*z+x*y^2") == "x*y^2+x^2*z");
  CHECK(roundtrip(xyz(MonomialOrder::lex), "x*y^2+x^2*z") == "x^2*z+x*y^2");
  CHECK(roundtrip(xyz(MonomialOrder::grevlex), "x+y^2") == "y^2+x");
  CHECK(roundtrip(xyz(MonomialOrder::lex), "x+y^2") == "x+y^2");
}

TEST_CASE("parse errors carry the column") {
  const PolyRing r = xyz();
  auto column_of = [&](const std::string& s) -> std::size_t {
    try {
      parse_polynomial(r, s);
    } catch (const ParseError& e) {
      return e.column();
    }
    return 0;
  };
  CHECK(column_of("x^^2") == 3);
  CHECK(column_of("x+w") == 3);
  CHECK(column_of("x+") == 3);
  CHECK(column_of("") == 1);
  CHECK(column_of("2*") == 3);
  CHECK(column_of("x y") == 3);
  CHECK(column_of("1/0") == 3);
  CHECK_THROWS_AS(parse_polynomial(xyz(MonomialOrder::grevlex, FieldSpec::prime(5)), "1/5"), ParseError);
}

TEST_CASE("arithmetic") {
  const PolyRing r = xyz();
  auto p = [&](const char* s) { return parse_polynomial(r, s); };
  CHECK(r.mul(p("x+y"), p("x-y")) == p("x^2-y^2"));
  CHECK(r.add(p("x+1"), p("-x")) == p("1"));
  CHECK(r.pow(p("x+1"), 3) == p("x^3+3*x^2+3*x+1"));
  CHECK(r.make_monic(p("2*x+1")) == p("x+1/2"));
  CHECK(r.degree(p("x^2*y+z")) == 3);
  CHECK(r.degree(r.zero()) == 0);
}

TEST_CASE("property: text round trip of random polynomials") {
  Rng rng(11);
  for (auto order : {MonomialOrder::grevlex, MonomialOrder::lex}) {
    for (auto field : {FieldSpec::rationals(), FieldSpec::prime(11)}) {
      const RingPtr ring = make_ring(field, {"x", "y", "z"}, {}, order);
      for (int k = 0; k < 100; ++k) {
        const RingElement f = random_element(rng, ring, 4, 6, 9);
        CHECK(parse_polynomial(ring->poly(), f.to_string()) == f.value());
      }
    }
  }
}

TEST_CASE("property: ring axioms on random polynomials") {
  Rng rng(12);
  const RingPtr ring = qq({"x", "y"});
  const PolyRing& r = ring->poly();
  for (int k = 0; k < 100; ++k) {
    const Polynomial a = random_element(rng, ring, 3, 4).value();
    const Polynomial b = random_element(rng, ring, 3, 4).value();
    const Polynomial c = random_element(rng, ring, 3, 4).value();
    CHECK(r.mul(a, b) == r.mul(b, a));
    CHECK(r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c)));
    CHECK(r.mul(r.mul(a, b), c) == r.mul(a, r.mul(b, c)));
    CHECK(r.sub(a, a).is_zero());
  }
}
