#include "wittkit/matrix.hpp"

#include <unordered_map>

#include "wittkit/error.hpp"

namespace wittkit {

Mat::Mat(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
  if (!ring_) throw PreconditionViolation("matrix without a ring");
  entries_.assign(rows * cols, ring_->zero());
}

Mat Mat::identity(RingPtr ring, std::size_t n) {
  Mat m(std::move(ring), n, n);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = m.ring_->one();
  return m;
}

Mat Mat::from_rows(RingPtr ring, const std::vector<std::vector<RingElement>>& rows) {
  const std::size_t nc = rows.empty() ? 0 : rows.front().size();
  Mat m(std::move(ring), rows.size(), nc);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != nc) throw SizeMismatch("ragged matrix rows");
    for (std::size_t j = 0; j < nc; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

void Mat::check_ring(const RingElement& e) const {
  if (!e.ring() || !e.ring()->same_as(*ring_)) throw RingMismatch();
}

void Mat::set(std::size_t i, std::size_t j, RingElement value) {
  check_ring(value);
  entries_.at(i * cols_ + j) = std::move(value);
}

Mat Mat::operator*(const Mat& other) const {
  if (!ring_->same_as(*other.ring_)) throw RingMismatch();
  if (cols_ != other.rows_) throw SizeMismatch("matrix product shape mismatch");
  Mat out(ring_, rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const RingElement& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        const RingElement& b = other.at(k, j);
        if (b.is_zero()) continue;
        out.entries_[i * out.cols_ + j] += a * b;
      }
    }
  }
  return out;
}

Mat Mat::operator+(const Mat& other) const {
  if (!ring_->same_as(*other.ring_)) throw RingMismatch();
  if (rows_ != other.rows_ || cols_ != other.cols_) throw SizeMismatch("matrix sum shape mismatch");
  Mat out(*this);
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] += other.entries_[k];
  return out;
}

Mat Mat::operator-(const Mat& other) const { return *this + (-other); }

Mat Mat::operator-() const {
  Mat out(*this);
  for (auto& e : out.entries_) e = -e;
  return out;
}

Mat Mat::scaled(const RingElement& s) const {
  Mat out(*this);
  for (auto& e : out.entries_) e = s * e;
  return out;
}

Mat Mat::transpose() const {
  Mat out(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.entries_[j * rows_ + i] = at(i, j);
  }
  return out;
}

bool Mat::operator==(const Mat& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

std::optional<std::pair<std::size_t, std::size_t>> Mat::first_difference(const Mat& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw SizeMismatch("compared matrices differ in shape");
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!(at(i, j) == other.at(i, j))) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

bool Mat::is_constant() const {
  for (const auto& e : entries_) {
    if (!e.is_constant()) return false;
  }
  return true;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw SizeMismatch("block out of range");
  Mat out(ring_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) out.entries_[i * nc + j] = at(r0 + i, c0 + j);
  }
  return out;
}

Mat perp(const Mat& m, const Mat& n) {
  if (!m.ring()->same_as(*n.ring())) throw RingMismatch();
  if (!m.is_square() || !n.is_square()) throw SizeMismatch("perp needs square matrices");
  const std::size_t a = m.rows();
  Mat out(m.ring(), a + n.rows(), a + n.rows());
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < a; ++j) out.set(i, j, m.at(i, j));
  }
  for (std::size_t i = 0; i < n.rows(); ++i) {
    for (std::size_t j = 0; j < n.rows(); ++j) out.set(a + i, a + j, n.at(i, j));
  }
  return out;
}

Mat make_standard(const RingPtr& ring, StandardKind kind, std::size_t r) {
  if (r == 0) throw PreconditionViolation("standard forms need r >= 1");
  Mat out(ring, 2 * r, 2 * r);
  for (std::size_t k = 0; k < r; ++k) {
    out.set(2 * k, 2 * k + 1, ring->one());
    out.set(2 * k + 1, 2 * k, kind == StandardKind::psi ? -ring->one() : ring->one());
  }
  return out;
}

std::vector<RingElement> charpoly(const Mat& m) {
  if (!m.is_square()) throw SizeMismatch("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  const RingPtr& ring = m.ring();
  std::vector<RingElement> coeffs{ring->one()};
  // grow from the trailing 0x0 block outwards: A_k = [[a, R], [C, A_{k+1}]]
  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t k = n - 1 - step;
    const std::size_t size = step;  // size of A_{k+1}
    std::vector<RingElement> t{ring->one(), -m.at(k, k)};
    std::vector<RingElement> col(size);
    for (std::size_t i = 0; i < size; ++i) col[i] = m.at(k + 1 + i, k);
    while (t.size() < size + 2) {
      RingElement dot = ring->zero();
      for (std::size_t i = 0; i < size; ++i) dot += m.at(k, k + 1 + i) * col[i];
      t.push_back(-dot);
      std::vector<RingElement> next(size, ring->zero());
      for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) next[i] += m.at(k + 1 + i, k + 1 + j) * col[j];
      }
      col = std::move(next);
    }
    std::vector<RingElement> grown(size + 2, ring->zero());
    for (std::size_t r = 0; r < size + 2; ++r) {
      for (std::size_t j = 0; j <= r && j < coeffs.size(); ++j) {
        if (r - j < t.size()) grown[r] += t[r - j] * coeffs[j];
      }
    }
    coeffs = std::move(grown);
  }
  return coeffs;
}

RingElement det(const Mat& m) {
  if (!m.is_square()) throw SizeMismatch("determinant of a non-square matrix");
  std::vector<RingElement> c = charpoly(m);
  RingElement last = c.back();
  return m.rows() % 2 == 0 ? last : -last;
}

Mat adjugate(const Mat& m) {
  if (!m.is_square()) throw SizeMismatch("adjugate of a non-square matrix");
  const std::size_t n = m.rows();
  const RingPtr& ring = m.ring();
  if (n == 0) return m;
  const std::vector<RingElement> c = charpoly(m);
  Mat b = Mat::identity(ring, n);
  for (std::size_t i = 1; i < n; ++i) b = b * m + Mat::identity(ring, n).scaled(c[i]);
  return n % 2 == 1 ? b : -b;
}

std::optional<Mat> adjugate_inverse(const Mat& m) {
  if (!m.is_square()) throw SizeMismatch("inverse of a non-square matrix");
  auto u = invert_unit(det(m));
  if (!u) return std::nullopt;
  return adjugate(m).scaled(*u);
}

bool is_alternating(const Mat& m) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!m.at(i, i).is_zero()) return false;
    for (std::size_t j = i + 1; j < m.rows(); ++j) {
      if (!(m.at(j, i) == -m.at(i, j))) return false;
    }
  }
  return true;
}

RingElement pfaffian(const Mat& m) {
  if (!is_alternating(m)) throw NotAlternating("Pfaffian of a non-alternating matrix");
  const std::size_t n = m.rows();
  if (n % 2 != 0) throw NotAlternating("Pfaffian of an odd-sized matrix");
  if (n > 30) throw SizeMismatch("Pfaffian size limit exceeded");
  const RingPtr& ring = m.ring();
  std::unordered_map<std::uint32_t, RingElement> memo;
  auto pf = [&](auto&& self, std::uint32_t mask) -> RingElement {
    if (mask == 0) return ring->one();
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    std::size_t i = 0;
    while (!(mask & (1u << i))) ++i;
    RingElement total = ring->zero();
    bool positive = true;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!(mask & (1u << j))) continue;
      const RingElement& a = m.at(i, j);
      if (!a.is_zero()) {
        RingElement term = a * self(self, mask & ~(1u << i) & ~(1u << j));
        total = positive ? total + term : total - term;
      }
      positive = !positive;
    }
    memo.emplace(mask, total);
    return total;
  };
  return pf(pf, n == 0 ? 0u : static_cast<std::uint32_t>((1ull << n) - 1));
}

Mat congruence(const Mat& e, const Mat& g) {
  if (!e.is_square() || !g.is_square() || e.rows() != g.rows()) {
    throw SizeMismatch("congruence needs square matrices of one size");
  }
  return e.transpose() * g * e;
}

AltMat::AltMat(Mat m) : mat_(std::move(m)) {
  if (mat_.rows() % 2 != 0) throw NotAlternating("alternating representative of odd size");
  pf_ = pfaffian(mat_);
  if (!invert_unit(pf_)) throw NotInvertible("Pfaffian " + pf_.to_string() + " is not a unit");
}

}  // namespace wittkit
