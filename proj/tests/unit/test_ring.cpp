#include <doctest.h>

#include <algorithm>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "wittkit/error.hpp"

using namespace wittkit;
using namespace wk_test;

namespace {

std::vector<std::string> strings(const std::vector<RingElement>& v) {
  std::vector<std::string> out;
  for (const auto& e : v) out.push_back(e.to_string());
  return out;
}

}  // namespace

TEST_CASE("lift_one worked examples") {
  const RingPtr x = qq({"x"});
  auto a = lift_one(elems(x, {"x", "1-x"}));
  REQUIRE(a);
  CHECK(strings(*a) == std::vector<std::string>{"1", "1"});

  const RingPtr xy = qq({"x", "y"});
  CHECK_FALSE(lift_one(elems(xy, {"x", "y"})));
  auto b = lift_one(elems(xy, {"x", "y", "1-x-y"}));
  REQUIRE(b);
  CHECK(strings(*b) == std::vector<std::string>{"1", "1", "1"});
  CHECK_THROWS_AS(lift_one({}), PreconditionViolation);
}

TEST_CASE("invert_unit worked examples") {
  const RingPtr xy = qq({"x", "y"}, {"x*y-1"});
  CHECK(invert_unit(xy->one())->to_string() == "1");
  CHECK(invert_unit(xy->parse("x"))->to_string() == "y");
  CHECK(invert_unit(xy->parse("-2*x^2"))->to_string() == "-1/2*y^2");
  CHECK_FALSE(invert_unit(qq({"x"})->parse("x")));
  CHECK_FALSE(invert_unit(xy->zero()));
  CHECK(invert_unit(fp(13)->integer(5))->to_string() == "8");
}

TEST_CASE("ring validation") {
  CHECK_THROWS_AS(qq({"x"}, {"x", "x-1"}), PreconditionViolation);
  CHECK_THROWS_AS(qq({"x", "x"}), PreconditionViolation);
  CHECK_THROWS_AS(qq({"x"}, {"y"}), ParseError);
  CHECK_THROWS_AS(fp(3, {"x"}), PreconditionViolation);
  const RingPtr r = qq({"x", "y"}, {"x^2-1", "x*y-1"}, MonomialOrder::lex);
  CHECK(r->describe() == "QQ[x,y]/(y^2-1,x-y)");
  CHECK(r->parse("x^3*y").to_string() == "1");
}

TEST_CASE("elements of different rings do not mix") {
  const RingPtr a = qq({"x"});
  const RingPtr b = fp(5, {"x"});
  CHECK_THROWS_AS(a->one() + b->one(), RingMismatch);
  CHECK_THROWS_AS(lift_one({a->one(), b->one()}), RingMismatch);
  const RingPtr a2 = qq({"x"});
  CHECK(a->parse("x") == a2->parse("x"));
}

TEST_CASE("arithmetic in a quotient with zero divisors") {
  const RingPtr r = qq({"x", "y"}, {"x*y"});
  CHECK((r->parse("x") * r->parse("y")).is_zero());
  CHECK((r->parse("x+y").pow(2)).to_string() == "x^2+y^2");
  CHECK_FALSE(invert_unit(r->parse("x+y")));
  CHECK_FALSE(invert_unit(r->parse("x+1")));
  auto u = invert_unit(r->parse("x*y+1"));
  REQUIRE(u);
  CHECK(u->is_one());
}

TEST_CASE("property: lift soundness on random generators") {
  Rng rng(31);
  const std::vector<RingPtr> rings{qq({"x", "y"}), fp(7, {"x", "y"}, {"x^2-y"}), qq({"x", "y"}, {"x*y-1"}),
                                   fp(5, {"x", "y", "z"}, {"x*y*z-1"})};
  int successes = 0;
  for (const auto& ring : rings) {
    for (int k = 0; k < 30; ++k) {
      std::vector<RingElement> gens;
      const long count = rng.range(1, 3);
      for (long c = 0; c < count; ++c) gens.push_back(random_element(rng, ring, 2, 3, 4));
      if (std::all_of(gens.begin(), gens.end(), [](const RingElement& e) { return e.is_zero(); })) continue;
      auto w = lift_one(gens);
      if (!w) continue;
      ++successes;
      RingElement sum = ring->zero();
      for (std::size_t i = 0; i < gens.size(); ++i) sum += (*w)[i] * gens[i];
      CHECK(sum.is_one());
    }
  }
  CHECK(successes > 10);
}

TEST_CASE("property: membership agrees with a truncated linear-algebra oracle") {
  Rng rng(32);
  int agreements = 0;
  for (int k = 0; k < 40; ++k) {
    const FieldSpec field = k % 2 ? FieldSpec::prime(5) : FieldSpec::rationals();
    const PolyRing base(Field(field), {"x", "y"}, MonomialOrder::grevlex);
    auto linear = [&] {
      return base.from_terms({Term{{1, 0}, Coeff(rng.range(-2, 2))}, Term{{0, 1}, Coeff(rng.range(-2, 2))},
                              Term{{0, 0}, Coeff(rng.range(-2, 2))}});
    };
    auto monomial = [&] {
      const auto i = static_cast<std::uint32_t>(rng.range(0, 2));
      const auto j = static_cast<std::uint32_t>(rng.range(0, 2 - static_cast<long>(i)));
      return base.monomial({i, j}, Coeff(rng.range(1, 3)));
    };
    std::vector<std::string> relations;
    if (rng.coin()) relations.push_back(format_polynomial(base, rng.coin() ? linear() : monomial()));
    if (!relations.empty() && relations[0] == "0") relations.clear();
    if (!relations.empty() && parse_polynomial(base, relations[0]).is_constant()) relations.clear();
    const RingPtr ring = make_ring(field, {"x", "y"}, relations);
    std::vector<Polynomial> gens;
    const long count = rng.range(1, 3);
    for (long c = 0; c < count; ++c) gens.push_back(rng.coin() ? linear() : monomial());
    std::vector<RingElement> elements;
    for (const auto& g : gens) elements.push_back(ring->element(g));
    if (std::all_of(elements.begin(), elements.end(), [](const RingElement& e) { return e.is_zero(); })) continue;
    std::vector<Polynomial> all = gens;
    for (const auto& r : relations) all.push_back(parse_polynomial(base, r));
    const bool oracle = truncated_membership_of_one(base, all, 9);
    CHECK(lift_one(elements).has_value() == oracle);
    ++agreements;
  }
  CHECK(agreements > 20);
}
