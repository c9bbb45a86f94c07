#include <doctest.h>

#include "support/generators.hpp"
#include "wittkit/elementary.hpp"
#include "wittkit/error.hpp"

using namespace wittkit;
using namespace wk_test;

TEST_CASE("words evaluate left to right") {
  const RingPtr r = qq({"x"});
  ElementaryWord w(r, 2);
  w.push(0, 1, r->parse("x"));
  w.push(1, 0, r->integer(1));
  CHECK(w.evaluate() == mat(r, {{"x+1", "x"}, {"1", "1"}}));
  CHECK(w.inverse().evaluate() * w.evaluate() == Mat::identity(r, 2));
  w.push(0, 1, r->zero());
  CHECK(w.letters().size() == 2);
  CHECK_THROWS_AS(w.push(1, 1, r->one()), PreconditionViolation);
  CHECK_THROWS_AS(w.push(0, 2, r->one()), PreconditionViolation);
  const Mat big = w.embedded(1, 4).evaluate();
  CHECK(big == perp(perp(Mat::identity(r, 1), w.evaluate()), Mat::identity(r, 1)));
}

TEST_CASE("property: letter-wise actions agree with explicit products") {
  Rng rng(51);
  const RingPtr r = qq({"x", "y"});
  for (int k = 0; k < 30; ++k) {
    const std::size_t n = 2 + rng.index(4);
    ElementaryWord w(r, n);
    for (int l = 0; l < 6; ++l) {
      const std::size_t i = rng.index(n);
      std::size_t j = rng.index(n - 1);
      if (j >= i) ++j;
      w.push(i, j, random_element(rng, r, 1, 2));
    }
    const Mat e = w.evaluate();
    CHECK(det(e).is_one());
    const Mat g = random_alternating(r, n, [&] { return random_element(rng, r, 1, 2); });
    const Mat m = random_matrix(r, n, n, [&] { return random_element(rng, r, 1, 2); });
    CHECK(apply_congruence(w, g) == congruence(e, g));
    CHECK(right_multiply(m, w) == m * e);
    CHECK(left_multiply(w, m) == e * m);
  }
}

TEST_CASE("property: special linear matrices over a field factor into transvections") {
  Rng rng(52);
  for (auto p : {5u, 7u, 13u}) {
    const RingPtr r = fp(p);
    for (int k = 0; k < 20; ++k) {
      const std::size_t n = 1 + rng.index(5);
      const Mat m = random_special_linear_constant(rng, r, n);
      CHECK(factor_special_linear(m).evaluate() == m);
    }
  }
  const RingPtr q = qq();
  CHECK(factor_special_linear(mat(q, {{"2", "0"}, {"0", "1/2"}})).evaluate() == mat(q, {{"2", "0"}, {"0", "1/2"}}));
  CHECK(factor_special_linear(mat(q, {{"0", "-1"}, {"1", "0"}})).evaluate() == mat(q, {{"0", "-1"}, {"1", "0"}}));
  CHECK_THROWS_AS(factor_special_linear(mat(q, {{"2", "0"}, {"0", "1"}})), PreconditionViolation);
  CHECK_THROWS_AS(factor_special_linear(mat(qq({"x"}), {{"x"}})), PreconditionViolation);
}
