#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wittkit/elementary.hpp"
#include "wittkit/witt.hpp"

namespace wittkit {

/// Unimodular row with a Bézout witness: Σ a_i w_i = 1 exactly.
class UmRow {
public:
  /// Throws PreconditionViolation unless the witness checks out.
  UmRow(std::vector<RingElement> a, std::vector<RingElement> w);

  const std::vector<RingElement>& row() const noexcept { return a_; }
  const std::vector<RingElement>& witness() const noexcept { return w_; }
  std::size_t size() const noexcept { return a_.size(); }
  const RingPtr& ring() const noexcept { return a_.front().ring(); }

private:
  std::vector<RingElement> a_;
  std::vector<RingElement> w_;
};

/// nullopt means not unimodular.
std::optional<UmRow> certify_row(const std::vector<RingElement>& a);

/// row·M with witness M⁻¹w. Throws NotInvertible, SizeMismatch.
UmRow act_row(const UmRow& row, const Mat& m);

/// The 4x4 Vaserstein matrix of a length-3 row with witness (a',b',c').
WittRep vaserstein(const UmRow& row);

/// M_ij = s_i w_j - s_j w_i, so that M·a = s. Throws PreconditionViolation
/// unless Σ s_i a_i = 0.
Mat koszul_homotopy(const UmRow& row, const std::vector<RingElement>& s);

/// 3x3 matrix with first row (a², b, c) and determinant 1. With witness
/// (p, q, r):
///   [ a²        b       c      ]
///   [ 2ar - b   r²      -p - qr ]
///   [ -c - 2aq  p - qr  q²     ]
/// The determinant is (ap + bq + cr)²; every call re-checks it.
Mat swan_towber_complete(const UmRow& row);

struct ElementaryCompletion {
  ElementaryWord word;  // row·word = e_1
  Mat completion;       // word⁻¹ evaluated: elementary, first row = row
};

/// For a witnessed row with a zero entry. Throws PreconditionViolation when
/// no entry is zero.
ElementaryCompletion elementary_completion(const UmRow& row);

/// Formal ⊥-sums on both sides and the certificate relating them.
struct Relation {
  std::vector<Mat> lhs;
  std::vector<Mat> rhs;
  EquivCert cert;
};

Mat assemble(const std::vector<Mat>& side);
Verdict verify_relation(const Relation& rel);

struct NamedRelation {
  std::string name;
  Relation relation;
};

/// V(row·M) ~ V(row) for M given as a word of size 3: the literal identity
/// (1 ⊥ M)ᵗ V(v) (1 ⊥ M) = V(vM) with witness M⁻¹w, certified by
/// E = (1 ⊥ M) ⊥ I_4.
NamedRelation equivariance_relation(const UmRow& row, const ElementaryWord& m);

/// A square root of -1 in the coefficient field of `ring`, if one exists
/// among constants. Over Q there is none.
std::optional<RingElement> sqrt_minus_one(const RingPtr& ring);

/// The relation chain ending in V(a²,b,c) ~ V(a,b,c) ⊥ V(a,b,c), for a
/// constant row, with field-level certificates. `t` and `d` parametrize the
/// ingredient relations and must keep the rows involved unimodular. Throws
/// PreconditionViolation when -1 is not a square or a row degenerates.
std::vector<NamedRelation> lemma_chain(const UmRow& row, const RingElement& t, const RingElement& d);

}  // namespace wittkit
