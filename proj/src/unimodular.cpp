#include "wittkit/unimodular.hpp"

#include "wittkit/error.hpp"

namespace wittkit {

namespace {

RingElement dot(const std::vector<RingElement>& a, const std::vector<RingElement>& b) {
  RingElement sum = a.front().ring()->zero();
  for (std::size_t k = 0; k < a.size(); ++k) sum += a[k] * b[k];
  return sum;
}

}  // namespace

UmRow::UmRow(std::vector<RingElement> a, std::vector<RingElement> w) : a_(std::move(a)), w_(std::move(w)) {
  if (a_.empty()) throw PreconditionViolation("empty row");
  if (a_.size() != w_.size()) throw PreconditionViolation("row and witness lengths differ");
  for (const auto& e : a_) {
    if (!e.ring() || !e.ring()->same_as(*a_.front().ring())) throw RingMismatch();
  }
  for (const auto& e : w_) {
    if (!e.ring() || !e.ring()->same_as(*a_.front().ring())) throw RingMismatch();
  }
  if (!dot(a_, w_).is_one()) throw PreconditionViolation("witness does not give 1");
}

std::optional<UmRow> certify_row(const std::vector<RingElement>& a) {
  auto w = lift_one(a);
  if (!w) return std::nullopt;
  return UmRow(a, std::move(*w));
}

UmRow act_row(const UmRow& row, const Mat& m) {
  const std::size_t n = row.size();
  if (!m.is_square() || m.rows() != n) throw SizeMismatch("matrix does not act on rows of this length");
  auto inv = adjugate_inverse(m);
  if (!inv) throw NotInvertible("acting matrix is not invertible");
  std::vector<RingElement> a(n, row.ring()->zero());
  std::vector<RingElement> w(n, row.ring()->zero());
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      a[j] += row.row()[i] * m.at(i, j);
      w[j] += inv->at(j, i) * row.witness()[i];
    }
  }
  return UmRow(std::move(a), std::move(w));
}

WittRep vaserstein(const UmRow& row) {
  if (row.size() != 3) throw SizeMismatch("the Vaserstein matrix needs a row of length 3");
  const auto& v = row.row();
  const auto& w = row.witness();
  const RingElement z = row.ring()->zero();
  return WittRep(Mat::from_rows(row.ring(), {
                                                {z, -v[0], -v[1], -v[2]},
                                                {v[0], z, -w[2], w[1]},
                                                {v[1], w[2], z, -w[0]},
                                                {v[2], -w[1], w[0], z},
                                            }));
}

Mat koszul_homotopy(const UmRow& row, const std::vector<RingElement>& s) {
  const std::size_t n = row.size();
  if (s.size() != n) throw SizeMismatch("syzygy length differs from the row");
  if (!dot(s, row.row()).is_zero()) throw PreconditionViolation("vector is not a syzygy of the row");
  Mat m(row.ring(), n, n);
  const auto& w = row.witness();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) m.set(i, j, s[i] * w[j] - s[j] * w[i]);
    }
  }
  return m;
}

Mat swan_towber_complete(const UmRow& row) {
  if (row.size() != 3) throw SizeMismatch("completion needs a row of length 3");
  const RingElement& a = row.row()[0];
  const RingElement& b = row.row()[1];
  const RingElement& c = row.row()[2];
  const RingElement& p = row.witness()[0];
  const RingElement& q = row.witness()[1];
  const RingElement& r = row.witness()[2];
  const RingElement two = row.ring()->integer(2);
  Mat m = Mat::from_rows(row.ring(), {
                                         {a * a, b, c},
                                         {two * a * r - b, r * r, -p - q * r},
                                         {-c - two * a * q, p - q * r, q * q},
                                     });
  if (!det(m).is_one()) throw Error("internal: completion determinant is not 1");
  return m;
}

ElementaryCompletion elementary_completion(const UmRow& row) {
  const std::size_t n = row.size();
  std::size_t z = n;
  for (std::size_t k = 0; k < n; ++k) {
    if (row.row()[k].is_zero()) {
      z = k;
      break;
    }
  }
  if (z == n) throw PreconditionViolation("row has no zero entry");
  const RingPtr& ring = row.ring();
  std::vector<RingElement> v = row.row();
  ElementaryWord word(ring, n);
  auto act = [&](std::size_t i, std::size_t j, const RingElement& r) {
    v[j] += r * v[i];
    word.push(i, j, r);
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (i != z) act(i, z, row.witness()[i]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (i != z) act(z, i, -v[i]);
  }
  if (z != 0) {
    act(z, 0, ring->one());
    act(0, z, -ring->one());
  }
  Mat completion = word.inverse().evaluate();
  for (std::size_t j = 0; j < n; ++j) {
    if (!(completion.at(0, j) == row.row()[j])) throw Error("internal: completion first row mismatch");
  }
  return {std::move(word), std::move(completion)};
}

Mat assemble(const std::vector<Mat>& side) {
  if (side.empty()) throw PreconditionViolation("empty side of a relation");
  Mat out = side.front();
  for (std::size_t k = 1; k < side.size(); ++k) out = perp(out, side[k]);
  return out;
}

Verdict verify_relation(const Relation& rel) {
  const Mat lhs = assemble(rel.lhs);
  const Mat rhs = assemble(rel.rhs);
  if (!is_alternating(lhs) || !is_alternating(rhs)) return Verdict::reject("a side is not alternating");
  return verify_equiv(lhs, rhs, rel.cert);
}

NamedRelation equivariance_relation(const UmRow& row, const ElementaryWord& m) {
  if (row.size() != 3 || m.size() != 3) throw SizeMismatch("equivariance concerns rows of length 3");
  const UmRow moved = act_row(row, m.evaluate());
  Relation rel{{vaserstein(moved).mat()}, {vaserstein(row).mat()}, EquivCert{0, 4, 4, m.embedded(1, 8)}};
  return NamedRelation{"equivariance", std::move(rel)};
}

std::optional<RingElement> sqrt_minus_one(const RingPtr& ring) {
  const Field& f = ring->field();
  if (!f.is_prime_field()) return std::nullopt;
  const std::uint64_t p = f.spec().p;
  if (p % 4 != 1) return std::nullopt;
  // a square root of -1 is g^((p-1)/4) for any non-residue g
  const mpz_class modulus(std::to_string(p));
  for (unsigned long g = 2; g < p; ++g) {
    mpz_class x;
    const mpz_class base(g);
    mpz_powm_ui(x.get_mpz_t(), base.get_mpz_t(), (p - 1) / 4, modulus.get_mpz_t());
    if ((x * x + 1) % modulus == 0) return ring->constant(Coeff(x));
  }
  return std::nullopt;
}

std::vector<NamedRelation> lemma_chain(const UmRow& row, const RingElement& t, const RingElement& d) {
  if (row.size() != 3) throw SizeMismatch("the lemma concerns rows of length 3");
  for (const auto& e : row.row()) {
    if (!e.is_constant()) throw PreconditionViolation("field-level certificates need constant rows");
  }
  if (!sqrt_minus_one(row.ring())) throw PreconditionViolation("-1 is not a square in " + row.ring()->field().describe());
  const RingElement& a = row.row()[0];
  const RingElement& b = row.row()[1];
  const RingElement& c = row.row()[2];
  const RingElement& ap = row.witness()[0];
  const RingPtr& ring = row.ring();

  auto v = [&](const RingElement& x, const RingElement& y, const RingElement& z) {
    auto r = certify_row({x, y, z});
    if (!r) throw PreconditionViolation("row (" + x.to_string() + "," + y.to_string() + "," + z.to_string() +
                                        ") is not unimodular");
    return vaserstein(*r).mat();
  };
  auto relate = [&](std::string name, std::vector<Mat> lhs, std::vector<Mat> rhs) {
    const Mat l = assemble(lhs);
    const Mat r = assemble(rhs);
    auto cert = field_equiv_cert(l, r);
    if (!cert) throw PreconditionViolation("no field certificate for " + name);
    return NamedRelation{std::move(name), Relation{std::move(lhs), std::move(rhs), std::move(*cert)}};
  };

  const Mat va = vaserstein(row).mat();
  const RingElement one_at = ring->one() + a * t;
  std::vector<NamedRelation> out;
  out.push_back(relate("negation", {witt_neg(vaserstein(row)).mat()}, {v(-ap, b, c)}));
  out.push_back(relate("scaling", {v(one_at, b, c)}, {v(one_at, b * t * t, c)}));
  out.push_back(relate("sign", {va}, {v(-a, b, c)}));
  out.push_back(relate("product", {va, v(d * d, b, c)}, {v(a * d * d, b, c)}));
  out.push_back(relate("doubling", {v(a * a, b, c)}, {va, va}));
  return out;
}

}  // namespace wittkit
