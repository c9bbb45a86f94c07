#pragma once

#include <cstddef>
#include <vector>

#include "wittkit/matrix.hpp"

namespace wittkit {

/// e_ij(r) = I + r·E_ij with i != j, indices 0-based.
struct Transvection {
  std::size_t i;
  std::size_t j;
  RingElement r;

  bool operator==(const Transvection&) const = default;
};

/// Ordered product e_1 e_2 ... e_k of transvections of one ambient size.
class ElementaryWord {
public:
  ElementaryWord(RingPtr ring, std::size_t n);

  static ElementaryWord identity(RingPtr ring, std::size_t n) { return {std::move(ring), n}; }

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t size() const noexcept { return n_; }
  const std::vector<Transvection>& letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }

  /// Appends e_ij(r); zero scalars are dropped. Throws PreconditionViolation
  /// for i == j or out-of-range indices.
  void push(std::size_t i, std::size_t j, const RingElement& r);
  /// Appends another word of the same size.
  void append(const ElementaryWord& other);

  Mat evaluate() const;
  ElementaryWord inverse() const;
  /// The same word acting on indices [offset, offset + n) of a size `total` space.
  ElementaryWord embedded(std::size_t offset, std::size_t total) const;

  bool operator==(const ElementaryWord& other) const { return n_ == other.n_ && letters_ == other.letters_; }

private:
  RingPtr ring_;
  std::size_t n_;
  std::vector<Transvection> letters_;
};

/// Eᵗ G E computed letter by letter, never forming E.
Mat apply_congruence(const ElementaryWord& e, const Mat& g);
/// M·E
Mat right_multiply(const Mat& m, const ElementaryWord& e);
/// E·M
Mat left_multiply(const ElementaryWord& e, const Mat& m);

/// Writes a constant determinant-1 matrix over the coefficient field as a
/// transvection word by Gaussian elimination. Throws PreconditionViolation
/// for non-constant entries or det != 1.
ElementaryWord factor_special_linear(const Mat& m);

}  // namespace wittkit
