#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wittkit/matrix.hpp"
#include "wittkit/poly_format.hpp"

namespace wk_test {

using namespace wittkit;

/// Laplace expansion along the first row.
inline RingElement laplace_det(const Mat& m) {
  const std::size_t n = m.rows();
  if (n == 0) return m.ring()->one();
  if (n == 1) return m.at(0, 0);
  RingElement total = m.ring()->zero();
  for (std::size_t j = 0; j < n; ++j) {
    if (m.at(0, j).is_zero()) continue;
    Mat minor(m.ring(), n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t k = 0, c = 0; k < n; ++k) {
        if (k != j) minor.set(i - 1, c++, m.at(i, k));
      }
    }
    RingElement term = m.at(0, j) * laplace_det(minor);
    total = j % 2 == 0 ? total + term : total - term;
  }
  return total;
}

/// Sum over perfect matchings of {0..n-1}, each signed by its crossing number.
inline RingElement matching_pfaffian(const Mat& m) {
  const std::size_t n = m.rows();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<bool> used(n, false);
  RingElement total = m.ring()->zero();
  auto crossings = [&] {
    std::size_t c = 0;
    for (std::size_t a = 0; a < pairs.size(); ++a) {
      for (std::size_t b = 0; b < pairs.size(); ++b) {
        const auto [i, j] = pairs[a];
        const auto [k, l] = pairs[b];
        if (i < k && k < j && j < l) ++c;
      }
    }
    return c;
  };
  auto rec = [&](auto&& self) -> void {
    std::size_t i = 0;
    while (i < n && used[i]) ++i;
    if (i == n) {
      RingElement term = m.ring()->one();
      for (const auto& [a, b] : pairs) term *= m.at(a, b);
      total = crossings() % 2 == 0 ? total + term : total - term;
      return;
    }
    used[i] = true;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (used[j]) continue;
      used[j] = true;
      pairs.emplace_back(i, j);
      self(self);
      pairs.pop_back();
      used[j] = false;
    }
    used[i] = false;
  };
  rec(rec);
  return total;
}

/// Solvability of A·x = b over the coefficient field by Gaussian elimination.
inline bool linear_system_solvable(const Field& f, std::vector<std::vector<Coeff>> a, std::vector<Coeff> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && Field::is_zero(a[piv][c])) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    std::swap(b[piv], b[r]);
    const Coeff inv = f.inv(a[r][c]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || Field::is_zero(a[i][c])) continue;
      const Coeff factor = f.mul(a[i][c], inv);
      for (std::size_t k = c; k < cols; ++k) a[i][k] = f.sub(a[i][k], f.mul(factor, a[r][k]));
      b[i] = f.sub(b[i], f.mul(factor, b[r]));
    }
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (!Field::is_zero(b[i])) return false;
  }
  return true;
}

/// Whether 1 = Σ c_k g_k with every c_k of total degree <= bound, decided by
/// linear algebra on coefficient vectors over the polynomial ring.
inline bool truncated_membership_of_one(const PolyRing& ring, const std::vector<Polynomial>& gens, unsigned bound) {
  const std::size_t n = ring.nvars();
  std::vector<Exponents> monos;
  Exponents e(n, 0);
  auto enumerate = [&](auto&& self, std::size_t var, unsigned left) -> void {
    if (var == n) {
      monos.push_back(e);
      return;
    }
    for (unsigned d = 0; d <= left; ++d) {
      e[var] = d;
      self(self, var + 1, left - d);
    }
    e[var] = 0;
  };
  enumerate(enumerate, 0, bound);
  // columns: (generator, cofactor monomial); rows: product monomials
  std::vector<Exponents> row_keys;
  auto row_of = [&](const Exponents& m) {
    for (std::size_t k = 0; k < row_keys.size(); ++k) {
      if (row_keys[k] == m) return k;
    }
    row_keys.push_back(m);
    return row_keys.size() - 1;
  };
  row_of(Exponents(n, 0));
  std::vector<std::vector<std::pair<std::size_t, Coeff>>> columns;
  for (const auto& g : gens) {
    for (const auto& m : monos) {
      std::vector<std::pair<std::size_t, Coeff>> col;
      for (const auto& t : g.terms()) col.emplace_back(row_of(multiply(t.exponents, m)), t.coeff);
      columns.push_back(std::move(col));
    }
  }
  std::vector<std::vector<Coeff>> a(row_keys.size(), std::vector<Coeff>(columns.size(), Coeff(0)));
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (const auto& [r, v] : columns[c]) a[r][c] = v;
  }
  std::vector<Coeff> b(row_keys.size(), Coeff(0));
  b[0] = 1;
  return linear_system_solvable(ring.field(), std::move(a), std::move(b));
}

}  // namespace wk_test
