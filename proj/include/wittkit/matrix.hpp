#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "wittkit/ring.hpp"

namespace wittkit {

/// Dense matrix of ring elements, row-major, entries kept in normal form.
class Mat {
public:
  Mat(RingPtr ring, std::size_t rows, std::size_t cols);

  static Mat identity(RingPtr ring, std::size_t n);
  /// Throws SizeMismatch for ragged input and RingMismatch for foreign entries.
  static Mat from_rows(RingPtr ring, const std::vector<std::vector<RingElement>>& rows);

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const RingElement& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, RingElement value);

  Mat operator*(const Mat& other) const;
  Mat operator+(const Mat& other) const;
  Mat operator-(const Mat& other) const;
  Mat operator-() const;
  Mat scaled(const RingElement& s) const;
  Mat transpose() const;

  bool operator==(const Mat& other) const;
  /// First (row, col) where the matrices differ, row-major; nullopt if equal.
  /// Throws SizeMismatch when the shapes differ.
  std::optional<std::pair<std::size_t, std::size_t>> first_difference(const Mat& other) const;

  /// All entries lie in the coefficient field.
  bool is_constant() const;

  /// Sub-matrix of rows [r0, r0+nr) and columns [c0, c0+nc).
  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

private:
  void check_ring(const RingElement& e) const;

  RingPtr ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<RingElement> entries_;
};

/// Block diagonal sum M ⊥ N of two square matrices.
Mat perp(const Mat& m, const Mat& n);

enum class StandardKind { psi, sigma };

/// psi: ψ_{2r} = ψ2 ⊥ ... ⊥ ψ2. sigma: σ_r = σ1 ⊥ ... ⊥ σ1. Both 2r x 2r.
Mat make_standard(const RingPtr& ring, StandardKind kind, std::size_t r);

/// Coefficients c_0 = 1, c_1, ..., c_n of det(λI - M) = Σ c_k λ^(n-k),
/// computed without division (Berkowitz).
std::vector<RingElement> charpoly(const Mat& m);

/// Division-free determinant.
RingElement det(const Mat& m);

/// Adjugate by Cayley-Hamilton on the Berkowitz coefficients.
Mat adjugate(const Mat& m);

/// Inverse when det(m) is a unit, nullopt otherwise.
std::optional<Mat> adjugate_inverse(const Mat& m);

/// Square, zero diagonal and Mᵗ = -M.
bool is_alternating(const Mat& m);

/// Pfaffian by first-row expansion, Pf(ψ2) = 1. Throws NotAlternating for
/// non-alternating or odd-sized input.
RingElement pfaffian(const Mat& m);

/// Eᵗ G E. Throws SizeMismatch.
Mat congruence(const Mat& e, const Mat& g);

/// Invertible alternating matrix of even size.
class AltMat {
public:
  /// Throws NotAlternating, or NotInvertible when the Pfaffian is not a unit.
  explicit AltMat(Mat m);

  const Mat& mat() const noexcept { return mat_; }
  const RingElement& pf() const noexcept { return pf_; }
  std::size_t size() const noexcept { return mat_.rows(); }
  const RingPtr& ring() const noexcept { return mat_.ring(); }

private:
  Mat mat_;
  RingElement pf_;
};

}  // namespace wittkit
