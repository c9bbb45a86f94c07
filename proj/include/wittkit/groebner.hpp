#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wittkit/polynomial.hpp"

namespace wittkit {

/// Caps on Gröbner work. Hitting any of them throws BudgetExceeded.
struct Budget {
  std::uint64_t max_steps = 20000;             // S-pairs processed
  std::uint64_t max_degree = 48;               // total degree of pair lcms and basis elements
  std::uint64_t max_transcript_terms = 2000000;  // cofactor terms held by the extended run

  static Budget defaults() { return {}; }
};

/// Reduced Gröbner basis: monic generators, no term of one divisible by the
/// leading monomial of another, sorted by ascending leading monomial.
struct GroebnerBasis {
  std::vector<Polynomial> generators;
  MonomialOrder order = MonomialOrder::grevlex;

  bool is_unit_ideal() const { return generators.size() == 1 && generators[0].is_constant(); }
  bool is_zero_ideal() const { return generators.empty(); }
};

GroebnerBasis buchberger(const PolyRing& ring, const std::vector<Polynomial>& gens,
                         const Budget& budget = {}, bool chain_criterion = true);

/// Which generator to use when several leading monomials divide the current
/// term. The result is the same for every choice; the knob exists so that
/// confluence can be tested.
enum class ReductionStrategy { first_divisor, last_divisor, random_divisor };

Polynomial normal_form(const PolyRing& ring, const Polynomial& f, const GroebnerBasis& gb,
                       ReductionStrategy strategy = ReductionStrategy::first_divisor,
                       std::uint64_t seed = 0);

/// Extended completion of `relations` (a reduced basis of I) together with
/// `gens`. Returns c with sum c_i * gens_i - 1 in I, each c_i in normal form
/// modulo `relations`, or nullopt when 1 is not in I + (gens).
std::optional<std::vector<Polynomial>> lift_one_cofactors(const PolyRing& ring,
                                                          const GroebnerBasis& relations,
                                                          const std::vector<Polynomial>& gens,
                                                          const Budget& budget = {});

}  // namespace wittkit
