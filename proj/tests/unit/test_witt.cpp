#include <doctest.h>

#include "support/generators.hpp"
#include "wittkit/error.hpp"
#include "wittkit/witt.hpp"

using namespace wittkit;
using namespace wk_test;

namespace {

Mat psi(const RingPtr& r, std::size_t k) { return make_standard(r, StandardKind::psi, k); }

Mat g28(const RingPtr& q) {
  return mat(q, {{"0", "2", "3", "5"}, {"-2", "0", "7", "11"}, {"-3", "-7", "0", "13"}, {"-5", "-11", "-13", "0"}});
}

}  // namespace

TEST_CASE("stabilization") {
  const RingPtr q = qq();
  const WittRep p2(psi(q, 1));
  CHECK(stabilize(p2, 0).mat() == p2.mat());
  CHECK(stabilize(p2, 1).mat() == psi(q, 2));
  const WittRep g(g28(q));
  CHECK(verify_equiv(g, stabilize(g, 1), identity_cert(q, 4, 6)).accepted);
  CHECK(verify_equiv(g, stabilize(g, 1), identity_cert(q, 4, 6, 3)).accepted);
}

TEST_CASE("group law and inverse") {
  const RingPtr q = qq();
  const WittRep p2(psi(q, 1));
  CHECK(witt_sum(p2, p2).mat() == psi(q, 2));
  const WittRep g(g28(q));
  CHECK(witt_sum(g, p2).pf() == g.pf() * p2.pf());
  CHECK(witt_neg(p2).mat() == psi(q, 1));
  CHECK(witt_neg(witt_neg(g)).mat() == g.mat());
  CHECK(witt_neg(g).pf().to_string() == "1/28");
  CHECK_THROWS_AS(witt_sum(p2, WittRep(psi(fp(5), 1))), RingMismatch);
}

TEST_CASE("property: neutrality and inverse Pfaffian") {
  Rng rng(61);
  const RingPtr r = qq({"x", "y"}, {"x*y-1"});
  for (int k = 0; k < 20; ++k) {
    const std::size_t n = 2 * (1 + rng.index(2));
    const Mat base = perp(mat(r, {{"0", "x"}, {"-x", "0"}}), psi(r, n / 2));
    ElementaryWord w(r, n + 2);
    for (int l = 0; l < 3; ++l) {
      const std::size_t i = rng.index(n + 2);
      w.push(i, (i + 1 + rng.index(n + 1)) % (n + 2), random_element(rng, r, 1, 2));
    }
    const WittRep rep(apply_congruence(w, base));
    CHECK(verify_equiv(witt_sum(rep, WittRep(psi(r, 1))), stabilize(rep, 1), identity_cert(r, rep.size() + 2, rep.size() + 2)).accepted);
    CHECK(witt_neg(rep).pf() * rep.pf() == r->one());
  }
}

TEST_CASE("verify_equiv") {
  const RingPtr r = qq({"x"});
  const Mat g = perp(psi(r, 1), psi(r, 1));
  CHECK(verify_equiv(g, g, identity_cert(r, 4, 4)).accepted);
  ElementaryWord four(r, 4);
  four.push(0, 2, r->parse("x"));
  four.push(3, 1, r->parse("x^2-1"));
  const Mat moved = apply_congruence(four, g);
  const EquivCert good{0, 4, 4, four.embedded(0, 8)};
  CHECK(verify_equiv(moved, g, good).accepted);
  ElementaryWord tampered(r, 4);
  tampered.push(0, 2, r->parse("x+1"));
  tampered.push(3, 1, r->parse("x^2-1"));
  const Verdict bad = verify_equiv(moved, g, EquivCert{0, 4, 4, tampered.embedded(0, 8)});
  CHECK_FALSE(bad.accepted);
  REQUIRE(bad.mismatch);
  CHECK(bad.mismatch->first < 4);
  CHECK_THROWS_AS(verify_equiv(moved, g, EquivCert{0, 4, 4, four}), SizeMismatch);
  CHECK_THROWS_AS(verify_equiv(moved, g, EquivCert{0, 2, 4, ElementaryWord(r, 6)}), SizeMismatch);
}

TEST_CASE("eta") {
  const RingPtr q = qq({"x", "y"}, {"x*y-1"});
  CHECK(eta(Mat::identity(q, 2)).mat() == psi(q, 1));
  CHECK(eta(mat(q, {{"x", "0"}, {"0", "y"}})).mat() == psi(q, 1));
  const WittRep odd = eta(mat(q, {{"x"}}));
  CHECK(odd.mat() == mat(q, {{"0", "x"}, {"-x", "0"}}));
  CHECK(odd.pf().to_string() == "x");
  CHECK_THROWS_AS(eta(mat(q, {{"x+1"}})), NotInvertible);
}

TEST_CASE("property: Pf(eta(G)) = det(G)") {
  Rng rng(62);
  const RingPtr r = fp(7, {"x"});
  for (int k = 0; k < 25; ++k) {
    const std::size_t n = 1 + rng.index(5);
    Mat g = random_invertible_constant(rng, r, n);
    if (n > 1) {
      Mat u = Mat::identity(r, n);
      u.set(n - 1, 0, random_element(rng, r, 2, 2));
      g = g * u;
    }
    const WittRep e = eta(g);
    CHECK(e.pf() == det(g));
  }
}

TEST_CASE("Whitehead factorization") {
  const RingPtr f5 = fp(5);
  CHECK(whitehead_factor(Mat::identity(f5, 2)).evaluate() == Mat::identity(f5, 4));
  CHECK(whitehead_factor(mat(f5, {{"2"}})).evaluate() == mat(f5, {{"2", "0"}, {"0", "3"}}));
  Rng rng(63);
  for (int k = 0; k < 20; ++k) {
    const Mat a = random_special_linear_constant(rng, f5, 2);
    CHECK(whitehead_factor(a).evaluate() == perp(a, *adjugate_inverse(a)));
  }
  const RingPtr u = qq({"x", "y"}, {"x*y-1"});
  const Mat a = mat(u, {{"x", "1"}, {"0", "1"}});
  CHECK(whitehead_factor(a).evaluate() == perp(a, *adjugate_inverse(a)));
  CHECK_THROWS_AS(whitehead_factor(mat(u, {{"x+1"}})), NotInvertible);
}

TEST_CASE("eta product certificates") {
  const RingPtr q = qq();
  const Mat i2 = Mat::identity(q, 2);
  const EquivCert id = eta_product_cert(i2, i2);
  CHECK(id.word.evaluate() == Mat::identity(q, 8));
  auto check = [](const Mat& a, const Mat& b) {
    const RingPtr& r = a.ring();
    const Mat lhs = eta(perp(a * b, Mat::identity(r, a.rows()))).mat();
    const Mat rhs = eta(perp(a, b)).mat();
    return verify_equiv(lhs, rhs, eta_product_cert(a, b)).accepted;
  };
  CHECK(check(i2, i2));
  CHECK(check(mat(q, {{"2", "0"}, {"0", "3"}}), mat(q, {{"5", "0"}, {"0", "7"}})));
  Rng rng(64);
  const RingPtr f5 = fp(5);
  for (int k = 0; k < 20; ++k) {
    CHECK(check(random_invertible_constant(rng, f5, 2), random_invertible_constant(rng, f5, 2)));
  }
  const RingPtr u = qq({"x", "y"}, {"x*y-1"});
  CHECK(check(mat(u, {{"x", "1"}, {"0", "1"}}), mat(u, {{"1", "0"}, {"x^2", "y"}})));
  CHECK(check(mat(u, {{"x"}}), mat(u, {{"3*y"}})));
}

TEST_CASE("symplectic reduction") {
  const RingPtr f5 = fp(5);
  const SymplecticReduction p4 = symplectic_reduce(psi(f5, 2));
  CHECK(p4.word.empty());
  CHECK(p4.canonical == psi(f5, 2));
  const SymplecticReduction two = symplectic_reduce(mat(f5, {{"0", "2"}, {"-2", "0"}}));
  CHECK(two.canonical == mat(f5, {{"0", "2"}, {"-2", "0"}}));
  Rng rng(65);
  for (int k = 0; k < 30; ++k) {
    const std::size_t n = 2 * (1 + rng.index(3));
    const Mat g = random_invertible_alternating_constant(rng, f5, n);
    const SymplecticReduction red = symplectic_reduce(g);
    CHECK(congruence(red.word.evaluate(), g) == red.canonical);
    CHECK(det(red.word.evaluate()).is_one());
    Mat expect = mat(f5, {{"0", pfaffian(g).to_string()}, {(-pfaffian(g)).to_string(), "0"}});
    if (n > 2) expect = perp(expect, psi(f5, n / 2 - 1));
    CHECK(red.canonical == expect);
    if (pfaffian(g).is_one()) CHECK(red.canonical == psi(f5, n / 2));
  }
  CHECK_THROWS_AS(symplectic_reduce(mat(qq({"x"}), {{"0", "x"}, {"-x", "0"}})), PreconditionViolation);
  CHECK_THROWS_AS(symplectic_reduce(mat(f5, {{"0", "0"}, {"0", "0"}})), NotInvertible);
}

TEST_CASE("property: field certificates for the inverse law and commutativity") {
  Rng rng(66);
  for (auto p : {5u, 7u}) {
    const RingPtr r = fp(p);
    for (int k = 0; k < 15; ++k) {
      const Mat g = normalize_pfaffian(random_invertible_alternating_constant(rng, r, 2 * (1 + rng.index(2))));
      const Mat h = random_invertible_alternating_constant(rng, r, 2 * (1 + rng.index(2)));
      const Mat sum = perp(g, witt_neg(WittRep(g)).mat());
      const auto inverse = field_equiv_cert(sum, psi(r, 1));
      REQUIRE(inverse);
      CHECK(verify_equiv(sum, psi(r, 1), *inverse).accepted);
      CHECK(verify_equiv(perp(g, h), perp(h, g), swap_cert(g, h)).accepted);
      const auto comm = field_equiv_cert(perp(g, h), perp(h, g));
      REQUIRE(comm);
      CHECK(verify_equiv(perp(g, h), perp(h, g), *comm).accepted);
    }
  }
  const RingPtr f5 = fp(5);
  CHECK_FALSE(field_equiv_cert(mat(f5, {{"0", "2"}, {"-2", "0"}}), psi(f5, 1)));
}

TEST_CASE("swap certificates work over any ring") {
  const RingPtr u = qq({"x", "y"}, {"x*y-1"});
  const Mat a = mat(u, {{"0", "x"}, {"-x", "0"}});
  const Mat b = perp(mat(u, {{"0", "y^2"}, {"-y^2", "0"}}), psi(u, 1));
  CHECK(verify_equiv(perp(a, b), perp(b, a), swap_cert(a, b)).accepted);
  CHECK_FALSE(verify_equiv(perp(a, b), perp(a, b), swap_cert(a, b)).accepted);
}

TEST_CASE("property: conjugating a certificate by an invertible matrix keeps it valid") {
  Rng rng(67);
  const RingPtr r = fp(7);
  for (int k = 0; k < 15; ++k) {
    const Mat g = random_invertible_alternating_constant(rng, r, 4);
    ElementaryWord e(r, 4);
    for (int l = 0; l < 4; ++l) {
      const std::size_t i = rng.index(4);
      e.push(i, (i + 1 + rng.index(3)) % 4, random_constant(rng, r));
    }
    const Mat g2 = apply_congruence(e, g);
    const Mat m = random_invertible_constant(rng, r, 4);
    const Mat minv = *adjugate_inverse(m);
    const Mat conj = minv * e.evaluate() * m;
    CHECK(det(conj).is_one());
    const Mat h = congruence(m, g);
    const Mat h2 = congruence(m, g2);
    const EquivCert cert{0, 4, 4, factor_special_linear(conj).embedded(0, 8)};
    CHECK(verify_equiv(h2, h, cert).accepted);
  }
}
