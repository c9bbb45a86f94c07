#include "wittkit/witt.hpp"

#include "wittkit/error.hpp"

namespace wittkit {

Mat pad_psi(const Mat& g, std::size_t s) {
  if (s == 0) return g;
  return perp(g, make_standard(g.ring(), StandardKind::psi, s));
}

WittRep stabilize(const WittRep& g, std::size_t s) { return WittRep(pad_psi(g.mat(), s)); }

WittRep witt_sum(const WittRep& a, const WittRep& b) { return WittRep(perp(a.mat(), b.mat())); }

WittRep witt_neg(const WittRep& g) {
  const Mat sigma = make_standard(g.ring(), StandardKind::sigma, g.size() / 2);
  auto inv = adjugate_inverse(g.mat());
  if (!inv) throw NotInvertible("representative is not invertible");
  return WittRep(sigma * *inv * sigma);
}

EquivCert identity_cert(const RingPtr& ring, std::size_t lhs_size, std::size_t rhs_size, std::size_t t) {
  return EquivCert{t, lhs_size, rhs_size, ElementaryWord(ring, lhs_size + rhs_size + 2 * t)};
}

Verdict verify_equiv(const Mat& g, const Mat& g2, const EquivCert& cert) {
  if (!g.ring()->same_as(*g2.ring()) || !g.ring()->same_as(*cert.word.ring())) throw RingMismatch();
  if (!g.is_square() || !g2.is_square() || g.rows() % 2 || g2.rows() % 2) {
    throw SizeMismatch("representatives must be square of even size");
  }
  if (cert.lhs_size != g.rows() || cert.rhs_size != g2.rows()) {
    throw SizeMismatch("certificate sizes " + std::to_string(cert.lhs_size) + "/" + std::to_string(cert.rhs_size) +
                       " do not match representatives " + std::to_string(g.rows()) + "/" +
                       std::to_string(g2.rows()));
  }
  if (cert.word.size() != cert.ambient()) {
    throw SizeMismatch("word size " + std::to_string(cert.word.size()) + " differs from " +
                       std::to_string(cert.ambient()));
  }
  const Mat lhs = pad_psi(g, g2.rows() / 2 + cert.t);
  const Mat rhs = apply_congruence(cert.word, pad_psi(g2, g.rows() / 2 + cert.t));
  if (auto at = lhs.first_difference(rhs)) {
    return Verdict::reject("entry (" + std::to_string(at->first + 1) + "," + std::to_string(at->second + 1) +
                               ") differs: " + lhs.at(at->first, at->second).to_string() + " vs " +
                               rhs.at(at->first, at->second).to_string(),
                           at);
  }
  return Verdict::accept();
}

WittRep eta(const Mat& g) {
  if (!g.is_square() || g.rows() == 0) throw SizeMismatch("eta needs a nonempty square matrix");
  if (!invert_unit(det(g))) throw NotInvertible("determinant " + det(g).to_string() + " is not a unit");
  const Mat h = g.rows() % 2 == 0 ? g : perp(g, Mat::identity(g.ring(), 1));
  return WittRep(congruence(h, make_standard(g.ring(), StandardKind::psi, h.rows() / 2)));
}

namespace {

void push_upper(ElementaryWord& w, const Mat& b) {
  const std::size_t n = b.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w.push(i, n + j, b.at(i, j));
  }
}

void push_lower(ElementaryWord& w, const Mat& c) {
  const std::size_t n = c.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w.push(n + i, j, c.at(i, j));
  }
}

}  // namespace

ElementaryWord whitehead_factor(const Mat& a) {
  if (!a.is_square()) throw SizeMismatch("whitehead_factor needs a square matrix");
  auto inv = adjugate_inverse(a);
  if (!inv) throw NotInvertible("matrix is not invertible");
  const std::size_t n = a.rows();
  const RingPtr& ring = a.ring();
  const Mat id = Mat::identity(ring, n);
  ElementaryWord w(ring, 2 * n);
  push_upper(w, a);
  push_lower(w, -*inv);
  push_upper(w, a);
  push_upper(w, -id);
  push_lower(w, id);
  push_upper(w, -id);
  return w;
}

EquivCert eta_product_cert(const Mat& a, const Mat& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) throw SizeMismatch("A and B must share a size");
  if (!a.ring()->same_as(*b.ring())) throw RingMismatch();
  if (!invert_unit(det(a))) throw NotInvertible("A is not invertible");
  const std::size_t size = 2 * a.rows();
  return EquivCert{0, size, size, whitehead_factor(b).embedded(0, 2 * size)};
}

namespace {

class Reducer {
public:
  explicit Reducer(Mat g) : g_(std::move(g)), word_(g_.ring(), g_.rows()) {}

  void apply(std::size_t i, std::size_t j, const RingElement& r) {
    if (r.is_zero()) return;
    ElementaryWord one(g_.ring(), g_.rows());
    one.push(i, j, r);
    g_ = apply_congruence(one, g_);
    word_.push(i, j, r);
  }

  /// Congruence by diag(u at i, u⁻¹ at j) as w_ij(u) w_ij(-1).
  void scale(std::size_t i, std::size_t j, const Coeff& u) {
    const RingPtr& ring = g_.ring();
    const Field& f = ring->field();
    for (const Coeff& v : {u, Coeff(-1)}) {
      const RingElement e = ring->constant(v);
      const RingElement back = ring->constant(f.neg(f.inv(f.normalize(v))));
      apply(i, j, e);
      apply(j, i, back);
      apply(i, j, e);
    }
  }

  SymplecticReduction run() {
    const std::size_t n = g_.rows();
    const RingPtr& ring = g_.ring();
    const Field& f = ring->field();
    for (std::size_t a = 0; a < n; a += 2) {
      const std::size_t b = a + 1;
      if (g_.at(a, b).is_zero()) {
        std::size_t j = b + 1;
        while (j < n && g_.at(a, j).is_zero()) ++j;
        if (j == n) throw NotInvertible("alternating matrix is singular");
        apply(j, b, ring->one());
      }
      if (a > 0 && !g_.at(a, b).is_one()) scale(a, 0, f.inv(g_.at(a, b).constant_value()));
      const Coeff d = g_.at(a, b).constant_value();
      for (std::size_t j = b + 1; j < n; ++j) {
        const Coeff ga = g_.at(a, j).constant_value();
        const Coeff gb = g_.at(b, j).constant_value();
        apply(b, j, ring->constant(f.neg(f.div(ga, d))));
        apply(a, j, ring->constant(f.div(gb, d)));
      }
    }
    return SymplecticReduction{word_, g_};
  }

private:
  Mat g_;
  ElementaryWord word_;
};

}  // namespace

SymplecticReduction symplectic_reduce(const Mat& g) {
  if (!g.is_constant()) throw PreconditionViolation("symplectic reduction needs constant entries");
  const AltMat checked(g);
  return Reducer(g).run();
}

std::optional<EquivCert> field_equiv_cert(const Mat& g, const Mat& g2) {
  const Mat lhs = pad_psi(g, g2.rows() / 2);
  const Mat rhs = pad_psi(g2, g.rows() / 2);
  const SymplecticReduction left = symplectic_reduce(lhs);
  const SymplecticReduction right = symplectic_reduce(rhs);
  if (left.canonical.first_difference(right.canonical)) return std::nullopt;
  ElementaryWord word = right.word;
  word.append(left.word.inverse());
  return EquivCert{0, g.rows(), g2.rows(), std::move(word)};
}

EquivCert swap_cert(const Mat& a, const Mat& b) {
  if (!a.ring()->same_as(*b.ring())) throw RingMismatch();
  const std::size_t p = a.rows();
  const std::size_t q = b.rows();
  if (!a.is_square() || !b.is_square() || p % 2 || q % 2) throw SizeMismatch("swap needs even square blocks");
  const std::size_t n = 2 * (p + q);
  const RingPtr& ring = a.ring();
  Mat perm(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t target = i < p ? q + i : (i < p + q ? i - p : i);
    perm.set(target, i, ring->one());
  }
  return EquivCert{0, p + q, p + q, factor_special_linear(perm)};
}

}  // namespace wittkit
