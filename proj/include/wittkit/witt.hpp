#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include "wittkit/elementary.hpp"
#include "wittkit/matrix.hpp"

namespace wittkit {

/// Representative of a class in W'_E(R); in W_E(R) exactly when Pf = 1.
using WittRep = AltMat;

/// Witness for G ~ G': with 2m = lhs_size, 2n = rhs_size,
/// G ⊥ ψ_{2n+2t} = Eᵗ (G' ⊥ ψ_{2m+2t}) E, E of size 2m + 2n + 2t.
struct EquivCert {
  std::size_t t = 0;
  std::size_t lhs_size = 0;
  std::size_t rhs_size = 0;
  ElementaryWord word;

  std::size_t ambient() const noexcept { return lhs_size + rhs_size + 2 * t; }
};

struct Verdict {
  bool accepted = false;
  std::string reason;
  std::optional<std::pair<std::size_t, std::size_t>> mismatch;  // 0-based

  static Verdict accept() { return {true, {}, std::nullopt}; }
  static Verdict reject(std::string why, std::optional<std::pair<std::size_t, std::size_t>> at = std::nullopt) {
    return {false, std::move(why), at};
  }
};

/// G ⊥ ψ_{2s} as a plain matrix; s = 0 returns G.
Mat pad_psi(const Mat& g, std::size_t s);

WittRep stabilize(const WittRep& g, std::size_t s);
WittRep witt_sum(const WittRep& a, const WittRep& b);
/// σ_r G⁻¹ σ_r
WittRep witt_neg(const WittRep& g);

/// The certificate with E = identity.
EquivCert identity_cert(const RingPtr& ring, std::size_t lhs_size, std::size_t rhs_size, std::size_t t = 0);

/// Throws RingMismatch, SizeMismatch for an incoherent certificate.
Verdict verify_equiv(const Mat& g, const Mat& g2, const EquivCert& cert);
inline Verdict verify_equiv(const WittRep& g, const WittRep& g2, const EquivCert& cert) {
  return verify_equiv(g.mat(), g2.mat(), cert);
}

/// GᵗψG for even size, (G⊥1)ᵗψ(G⊥1) for odd size. Throws NotInvertible when
/// det(G) is not a unit.
WittRep eta(const Mat& g);

/// Word of size 2n evaluating to diag(A, A⁻¹):
/// [[I,A],[0,I]] [[I,0],[-A⁻¹,I]] [[I,A],[0,I]] [[0,-I],[I,0]], with the last
/// factor written as [[I,-I],[0,I]] [[I,0],[I,I]] [[I,-I],[0,I]]. Throws
/// NotInvertible.
ElementaryWord whitehead_factor(const Mat& a);

/// Certificate (t = 0) for eta(AB ⊥ I) ~ eta(A ⊥ B): E = whitehead_factor(B) ⊥ I.
EquivCert eta_product_cert(const Mat& a, const Mat& b);

struct SymplecticReduction {
  ElementaryWord word;
  Mat canonical;  // [[0,Pf],[-Pf,0]] ⊥ ψ
};

/// Congruence reduction of a constant invertible alternating matrix:
/// Eᵗ G E = canonical. Throws PreconditionViolation for non-constant
/// entries, NotAlternating, NotInvertible.
SymplecticReduction symplectic_reduce(const Mat& g);

/// Certificate for G ~ G' when both have constant entries, nullopt when the
/// Pfaffians differ (then no certificate exists).
std::optional<EquivCert> field_equiv_cert(const Mat& g, const Mat& g2);

/// Certificate for a ⊥ b ~ b ⊥ a built from the block-swap permutation.
/// Works over any ring.
EquivCert swap_cert(const Mat& a, const Mat& b);

}  // namespace wittkit
