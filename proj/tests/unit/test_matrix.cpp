#include <doctest.h>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "wittkit/error.hpp"

using namespace wittkit;
using namespace wk_test;

TEST_CASE("perp and the standard forms") {
  const RingPtr r = qq();
  const Mat psi2 = make_standard(r, StandardKind::psi, 1);
  CHECK(psi2 == mat(r, {{"0", "1"}, {"-1", "0"}}));
  CHECK(make_standard(r, StandardKind::sigma, 1) == mat(r, {{"0", "1"}, {"1", "0"}}));
  CHECK(perp(psi2, psi2) == make_standard(r, StandardKind::psi, 2));
  CHECK(perp(psi2, perp(psi2, psi2)) == make_standard(r, StandardKind::psi, 3));
  CHECK(perp(Mat::identity(r, 2), Mat::identity(r, 3)) == Mat::identity(r, 5));
  CHECK_THROWS_AS(make_standard(r, StandardKind::psi, 0), PreconditionViolation);
  CHECK_THROWS_AS(perp(psi2, make_standard(fp(5), StandardKind::psi, 1)), RingMismatch);
}

TEST_CASE("property: perp is associative") {
  Rng rng(41);
  const RingPtr r = qq({"x"});
  for (int k = 0; k < 20; ++k) {
    auto gen = [&] { return random_element(rng, r, 2, 2); };
    const std::size_t a = 1 + rng.index(2), b = 1 + rng.index(2), c = 1 + rng.index(2);
    const Mat ma = random_matrix(r, a, a, gen), mb = random_matrix(r, b, b, gen), mc = random_matrix(r, c, c, gen);
    CHECK(perp(perp(ma, mb), mc) == perp(ma, perp(mb, mc)));
  }
}

TEST_CASE("division-free determinant") {
  const RingPtr r = qq({"x", "y"});
  CHECK(det(make_standard(r, StandardKind::psi, 1)).to_string() == "1");
  CHECK(det(make_standard(r, StandardKind::sigma, 1)).to_string() == "-1");
  CHECK(det(mat(r, {{"1", "x"}, {"y", "1"}})).to_string() == "-x*y+1");
  for (std::size_t k = 1; k <= 4; ++k) {
    CHECK(det(make_standard(r, StandardKind::psi, k)).is_one());
    CHECK(det(make_standard(r, StandardKind::sigma, k)) == r->integer(k % 2 ? -1 : 1));
  }
  const Mat m = mat(r, {{"x", "1", "0"}, {"2", "y", "x"}, {"1", "1", "1"}});
  const auto c = charpoly(m);
  REQUIRE(c.size() == 4);
  CHECK(c[1] == -(r->parse("x+y+1")));
}

TEST_CASE("property: determinant matches Laplace expansion") {
  Rng rng(42);
  const std::vector<RingPtr> rings{qq({"x"}, {"x^2-2"}), fp(5, {"x", "y"}), qq({"x", "y"}, {"x*y"})};
  for (const auto& r : rings) {
    for (int k = 0; k < 20; ++k) {
      const std::size_t n = 1 + rng.index(5);
      const Mat m = random_matrix(r, n, n, [&] { return random_element(rng, r, 2, 2, 3); });
      CHECK(det(m) == laplace_det(m));
    }
  }
}

TEST_CASE("Pfaffian") {
  const RingPtr q = qq();
  CHECK(pfaffian(make_standard(q, StandardKind::psi, 1)).to_string() == "1");
  CHECK(pfaffian(make_standard(q, StandardKind::psi, 2)).to_string() == "1");
  const Mat g = mat(q, {{"0", "2", "3", "5"}, {"-2", "0", "7", "11"}, {"-3", "-7", "0", "13"}, {"-5", "-11", "-13", "0"}});
  CHECK(pfaffian(g).to_string() == "28");
  CHECK(pfaffian(Mat(q, 0, 0)).is_one());
  CHECK_THROWS_AS(pfaffian(mat(q, {{"0", "1"}, {"1", "0"}})), NotAlternating);
  CHECK_THROWS_AS(pfaffian(Mat(q, 3, 3)), NotAlternating);
  CHECK_THROWS_AS(pfaffian(mat(q, {{"1", "1"}, {"-1", "0"}})), NotAlternating);
}

TEST_CASE("property: Pfaffian laws") {
  Rng rng(43);
  const std::vector<RingPtr> rings{fp(5), qq({"x"}, {"x^2-2"}), qq({"a", "b"})};
  for (const auto& r : rings) {
    for (int k = 0; k < 15; ++k) {
      auto gen = [&] { return random_element(rng, r, 1, 2, 4); };
      const std::size_t n = 2 * (1 + rng.index(3));
      const Mat g = random_alternating(r, n, gen);
      const Mat g2 = random_alternating(r, 2 * (1 + rng.index(2)), gen);
      const Mat e = random_matrix(r, n, n, gen);
      CHECK(pfaffian(g) == matching_pfaffian(g));
      CHECK(pfaffian(g) * pfaffian(g) == det(g));
      CHECK(pfaffian(congruence(e, g)) == det(e) * pfaffian(g));
      CHECK(pfaffian(perp(g, g2)) == pfaffian(g) * pfaffian(g2));
    }
  }
}

TEST_CASE("adjugate inverse") {
  const RingPtr q = qq({"x"});
  CHECK(*adjugate_inverse(make_standard(q, StandardKind::psi, 1)) == mat(q, {{"0", "-1"}, {"1", "0"}}));
  CHECK(*adjugate_inverse(Mat::identity(q, 3)) == Mat::identity(q, 3));
  CHECK_FALSE(adjugate_inverse(mat(q, {{"1", "x"}, {"0", "0"}})));
  CHECK_FALSE(adjugate_inverse(mat(q, {{"x", "0"}, {"0", "1"}})));
  const RingPtr u = qq({"x", "y"}, {"x*y-1"});
  const Mat m = mat(u, {{"x", "1"}, {"0", "1"}});
  CHECK(*adjugate_inverse(m) == mat(u, {{"y", "-y"}, {"0", "1"}}));
}

TEST_CASE("property: adjugate inverse is a two-sided inverse") {
  Rng rng(44);
  const RingPtr r = fp(7, {"x"});
  for (int k = 0; k < 20; ++k) {
    const std::size_t n = 1 + rng.index(4);
    Mat m = random_special_linear_constant(rng, r, n);
    // unipotent perturbation keeps the determinant a unit
    Mat u = Mat::identity(r, n);
    if (n > 1) u.set(0, n - 1, random_element(rng, r, 2, 2));
    m = m * u;
    const auto inv = adjugate_inverse(m);
    REQUIRE(inv);
    CHECK(m * *inv == Mat::identity(r, n));
    CHECK(*inv * m == Mat::identity(r, n));
    CHECK(adjugate(m) * m == Mat::identity(r, n).scaled(det(m)));
  }
}

TEST_CASE("congruence") {
  const RingPtr q = qq();
  const Mat psi2 = make_standard(q, StandardKind::psi, 1);
  CHECK(congruence(Mat::identity(q, 2), psi2) == psi2);
  CHECK(congruence(make_standard(q, StandardKind::sigma, 1), psi2) == mat(q, {{"0", "-1"}, {"1", "0"}}));
  CHECK_THROWS_AS(congruence(Mat::identity(q, 3), psi2), SizeMismatch);
  Rng rng(45);
  const RingPtr f5 = fp(5);
  for (int k = 0; k < 20; ++k) {
    const Mat g = random_alternating(f5, 4, [&] { return random_constant(rng, f5); });
    const Mat e = random_matrix(f5, 4, 4, [&] { return random_constant(rng, f5); });
    CHECK(is_alternating(congruence(e, g)));
    CHECK(pfaffian(congruence(e, g)) == det(e) * pfaffian(g));
  }
}

TEST_CASE("AltMat validation") {
  const RingPtr q = qq({"x"});
  CHECK_NOTHROW(AltMat(make_standard(q, StandardKind::psi, 2)));
  CHECK_THROWS_AS(AltMat(mat(q, {{"0", "x"}, {"-x", "0"}})), NotInvertible);
  CHECK_THROWS_AS(AltMat(mat(q, {{"0", "1"}, {"1", "0"}})), NotAlternating);
  CHECK_THROWS_AS(AltMat(mat(q, {{"1", "1"}, {"-1", "0"}})), NotAlternating);
  CHECK_THROWS_AS(AltMat(mat(q, {{"0"}})), NotAlternating);
  const RingPtr u = qq({"x", "y"}, {"x*y-1"});
  CHECK(AltMat(mat(u, {{"0", "x"}, {"-x", "0"}})).pf().to_string() == "x");
}
