#include "wittkit/elementary.hpp"

#include <algorithm>

#include "wittkit/error.hpp"

namespace wittkit {

ElementaryWord::ElementaryWord(RingPtr ring, std::size_t n) : ring_(std::move(ring)), n_(n) {
  if (!ring_) throw PreconditionViolation("elementary word without a ring");
}

void ElementaryWord::push(std::size_t i, std::size_t j, const RingElement& r) {
  if (i == j) throw PreconditionViolation("transvection with i == j");
  if (i >= n_ || j >= n_) throw PreconditionViolation("transvection index out of range");
  if (!r.ring() || !r.ring()->same_as(*ring_)) throw RingMismatch();
  if (r.is_zero()) return;
  letters_.push_back(Transvection{i, j, r});
}

void ElementaryWord::append(const ElementaryWord& other) {
  if (other.n_ != n_) throw SizeMismatch("appending words of different sizes");
  for (const auto& t : other.letters_) push(t.i, t.j, t.r);
}

Mat ElementaryWord::evaluate() const { return right_multiply(Mat::identity(ring_, n_), *this); }

ElementaryWord ElementaryWord::inverse() const {
  ElementaryWord out(ring_, n_);
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push(it->i, it->j, -it->r);
  return out;
}

ElementaryWord ElementaryWord::embedded(std::size_t offset, std::size_t total) const {
  if (offset + n_ > total) throw SizeMismatch("embedding exceeds the ambient size");
  ElementaryWord out(ring_, total);
  for (const auto& t : letters_) out.push(t.i + offset, t.j + offset, t.r);
  return out;
}

namespace {

void add_col(Mat& m, std::size_t to, std::size_t from, const RingElement& r) {
  for (std::size_t k = 0; k < m.rows(); ++k) {
    if (!m.at(k, from).is_zero()) m.set(k, to, m.at(k, to) + r * m.at(k, from));
  }
}

void add_row(Mat& m, std::size_t to, std::size_t from, const RingElement& r) {
  for (std::size_t k = 0; k < m.cols(); ++k) {
    if (!m.at(from, k).is_zero()) m.set(to, k, m.at(to, k) + r * m.at(from, k));
  }
}

}  // namespace

Mat apply_congruence(const ElementaryWord& e, const Mat& g) {
  if (!g.is_square() || g.rows() != e.size()) throw SizeMismatch("word and matrix sizes differ");
  Mat out = g;
  for (const auto& t : e.letters()) {
    add_col(out, t.j, t.i, t.r);
    add_row(out, t.j, t.i, t.r);
  }
  return out;
}

Mat right_multiply(const Mat& m, const ElementaryWord& e) {
  if (m.cols() != e.size()) throw SizeMismatch("word and matrix sizes differ");
  Mat out = m;
  for (const auto& t : e.letters()) add_col(out, t.j, t.i, t.r);
  return out;
}

Mat left_multiply(const ElementaryWord& e, const Mat& m) {
  if (m.rows() != e.size()) throw SizeMismatch("word and matrix sizes differ");
  Mat out = m;
  const auto& w = e.letters();
  for (auto it = w.rbegin(); it != w.rend(); ++it) add_row(out, it->i, it->j, it->r);
  return out;
}

ElementaryWord factor_special_linear(const Mat& m) {
  if (!m.is_square()) throw SizeMismatch("factoring a non-square matrix");
  if (!m.is_constant()) throw PreconditionViolation("factorization needs constant entries");
  const RingPtr& ring = m.ring();
  const Field& field = ring->field();
  const std::size_t n = m.rows();
  Mat a = m;
  ElementaryWord ops(ring, n);  // row operations, in the order applied
  auto op = [&](std::size_t i, std::size_t j, const RingElement& r) {
    if (r.is_zero()) return;
    add_row(a, i, j, r);
    ops.push(i, j, r);
  };
  for (std::size_t c = 0; c < n; ++c) {
    if (a.at(c, c).is_zero()) {
      for (std::size_t r = c + 1; r < n; ++r) {
        if (!a.at(r, c).is_zero()) {
          op(c, r, ring->one());
          break;
        }
      }
      if (a.at(c, c).is_zero()) throw PreconditionViolation("matrix is singular");
    }
    if (!a.at(c, c).is_one() && c + 1 < n) {
      if (a.at(c + 1, c).is_zero()) op(c + 1, c, ring->one());
      const Coeff lead = a.at(c, c).constant_value();
      const Coeff below = a.at(c + 1, c).constant_value();
      op(c, c + 1, ring->constant(field.div(field.sub(Coeff(1), lead), below)));
    }
    if (!a.at(c, c).is_one()) throw PreconditionViolation("determinant is not 1");
    for (std::size_t r = 0; r < n; ++r) {
      if (r != c && !a.at(r, c).is_zero()) op(r, c, -a.at(r, c));
    }
  }
  // ops·M = I, so M is the product of the inverse letters in applied order
  ElementaryWord out(ring, n);
  for (const auto& t : ops.letters()) out.push(t.i, t.j, -t.r);
  return out;
}

}  // namespace wittkit
