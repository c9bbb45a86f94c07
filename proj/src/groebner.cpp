#include "wittkit/groebner.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <utility>

#include "wittkit/error.hpp"

namespace wittkit {

namespace {

struct Entry {
  Polynomial poly;
  std::vector<Polynomial> cofactors;  // empty unless tracking
};

struct Pair {
  std::size_t i;
  std::size_t j;
  Exponents lcm;
};

class Completion {
public:
  Completion(const PolyRing& ring, const Budget& budget, bool chain, bool tracking,
             const GroebnerBasis* relations)
      : ring_(ring), budget_(budget), chain_(chain), tracking_(tracking), relations_(relations) {}

  std::vector<Entry>& basis() { return basis_; }

  /// Appends an element made monic and queues its pairs with all earlier ones.
  void add(Entry e) {
    normalize_entry(e);
    const std::size_t k = basis_.size();
    basis_.push_back(std::move(e));
    check_degree(basis_[k].poly);
    for (std::size_t i = 0; i < k; ++i) queue(i, k);
  }

  void add_relation(Polynomial p) {
    Entry e{std::move(p), {}};
    if (tracking_) e.cofactors.assign(ngens_, Polynomial());
    normalize_entry(e);
    basis_.push_back(std::move(e));
  }

  void set_generator_count(std::size_t n) { ngens_ = n; }

  /// Runs pairs to exhaustion. With tracking, stops early and returns the
  /// index of the first constant element.
  std::optional<std::size_t> run() {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (!basis_[k].poly.is_zero() && basis_[k].poly.is_constant()) return k;
    }
    std::uint64_t steps = 0;
    while (!pairs_.empty()) {
      auto it = std::min_element(pairs_.begin(), pairs_.end(), [this](const Pair& a, const Pair& b) {
        const int c = ring_.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        return std::make_pair(a.j, a.i) < std::make_pair(b.j, b.i);
      });
      Pair pair = *it;
      pairs_.erase(it);
      done_.insert({pair.i, pair.j});
      if (chain_ && chain_skip(pair)) continue;
      if (++steps > budget_.max_steps) throw BudgetExceeded("Groebner step budget exhausted");
      Entry s = spoly(pair);
      reduce(s);
      if (s.poly.is_zero()) continue;
      add(std::move(s));
      if (basis_.back().poly.is_constant()) return basis_.size() - 1;
    }
    return std::nullopt;
  }

  void reduce(Entry& e) const {
    Polynomial done;
    Polynomial rest = std::move(e.poly);
    std::vector<Term> kept;
    while (!rest.is_zero()) {
      const Term& lt = rest.leading();
      const Entry* by = nullptr;
      for (const auto& b : basis_) {
        if (!b.poly.is_zero() && divides(b.poly.leading_monomial(), lt.exponents)) {
          by = &b;
          break;
        }
      }
      if (by == nullptr) {
        kept.push_back(lt);
        rest = ring_.sub(rest, ring_.monomial(lt.exponents, lt.coeff));
        continue;
      }
      const Exponents m = quotient(lt.exponents, by->poly.leading_monomial());
      const Coeff c = ring_.field().div(lt.coeff, by->poly.leading_coeff());
      rest = ring_.sub_mul_term(rest, m, c, by->poly);
      if (tracking_) {
        for (std::size_t k = 0; k < ngens_; ++k) {
          if (by->cofactors[k].is_zero()) continue;
          e.cofactors[k] = ring_.sub_mul_term(e.cofactors[k], m, c, by->cofactors[k]);
        }
      }
    }
    e.poly = ring_.from_terms(std::move(kept));
    if (tracking_) trim_cofactors(e);
  }

private:
  void queue(std::size_t i, std::size_t k) {
    const Exponents& a = basis_[i].poly.leading_monomial();
    const Exponents& b = basis_[k].poly.leading_monomial();
    if (coprime(a, b)) {
      done_.insert({i, k});
      return;
    }
    pairs_.push_back(Pair{i, k, lcm(a, b)});
  }

  bool treated(std::size_t a, std::size_t b) const {
    if (a > b) std::swap(a, b);
    return done_.count({a, b}) != 0;
  }

  bool chain_skip(const Pair& pair) const {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (k == pair.i || k == pair.j) continue;
      if (!divides(basis_[k].poly.leading_monomial(), pair.lcm)) continue;
      if (treated(pair.i, k) && treated(pair.j, k)) return true;
    }
    return false;
  }

  Entry spoly(const Pair& pair) const {
    const Entry& f = basis_[pair.i];
    const Entry& g = basis_[pair.j];
    const Exponents mf = quotient(pair.lcm, f.poly.leading_monomial());
    const Exponents mg = quotient(pair.lcm, g.poly.leading_monomial());
    // both are monic
    Entry s{ring_.sub(ring_.mul_term(f.poly, mf, Coeff(1)), ring_.mul_term(g.poly, mg, Coeff(1))), {}};
    if (tracking_) {
      s.cofactors.resize(ngens_);
      for (std::size_t k = 0; k < ngens_; ++k) {
        s.cofactors[k] = ring_.sub(ring_.mul_term(f.cofactors[k], mf, Coeff(1)),
                                   ring_.mul_term(g.cofactors[k], mg, Coeff(1)));
      }
    }
    return s;
  }

  void normalize_entry(Entry& e) const {
    if (e.poly.is_zero() || Field::is_one(e.poly.leading_coeff())) return;
    const Coeff inv = ring_.field().inv(e.poly.leading_coeff());
    e.poly = ring_.scale(e.poly, inv);
    for (auto& c : e.cofactors) c = ring_.scale(c, inv);
  }

  void trim_cofactors(Entry& e) const {
    std::uint64_t terms = 0;
    for (auto& c : e.cofactors) {
      if (relations_ != nullptr && !relations_->is_zero_ideal()) c = normal_form(ring_, c, *relations_);
      terms += c.size();
    }
    held_terms_ += terms;
    if (held_terms_ > budget_.max_transcript_terms) throw BudgetExceeded("cofactor transcript budget exhausted");
  }

  void check_degree(const Polynomial& p) const {
    if (ring_.degree(p) > budget_.max_degree) throw BudgetExceeded("Groebner degree budget exhausted");
  }

  const PolyRing& ring_;
  Budget budget_;
  bool chain_;
  bool tracking_;
  const GroebnerBasis* relations_;
  std::size_t ngens_ = 0;
  std::vector<Entry> basis_;
  std::vector<Pair> pairs_;
  std::set<std::pair<std::size_t, std::size_t>> done_;
  mutable std::uint64_t held_terms_ = 0;
};

GroebnerBasis interreduce(const PolyRing& ring, std::vector<Polynomial> polys) {
  std::vector<Polynomial> minimal;
  std::sort(polys.begin(), polys.end(), [&ring](const Polynomial& a, const Polynomial& b) {
    return ring.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  for (auto& p : polys) {
    bool redundant = false;
    for (const auto& q : minimal) {
      if (divides(q.leading_monomial(), p.leading_monomial())) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(ring.make_monic(p));
  }
  GroebnerBasis gb{{}, ring.order()};
  if (!minimal.empty() && minimal.front().is_constant()) {
    gb.generators.push_back(ring.one());
    return gb;
  }
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    GroebnerBasis others{{}, ring.order()};
    for (std::size_t l = 0; l < minimal.size(); ++l) {
      if (l != k) others.generators.push_back(minimal[l]);
    }
    gb.generators.push_back(normal_form(ring, minimal[k], others));
  }
  return gb;
}

}  // namespace

GroebnerBasis buchberger(const PolyRing& ring, const std::vector<Polynomial>& gens, const Budget& budget,
                         bool chain_criterion) {
  Completion run(ring, budget, chain_criterion, false, nullptr);
  for (const auto& g : gens) {
    Entry e{g, {}};
    run.reduce(e);
    if (!e.poly.is_zero()) run.add(std::move(e));
  }
  if (run.run()) {
    return GroebnerBasis{{ring.one()}, ring.order()};
  }
  std::vector<Polynomial> polys;
  for (auto& e : run.basis()) polys.push_back(std::move(e.poly));
  return interreduce(ring, std::move(polys));
}

Polynomial normal_form(const PolyRing& ring, const Polynomial& f, const GroebnerBasis& gb,
                       ReductionStrategy strategy, std::uint64_t seed) {
  if (gb.is_zero_ideal() || f.is_zero()) return f;
  std::mt19937_64 rng(seed);
  std::vector<Term> kept;
  std::vector<const Polynomial*> divisors;
  Polynomial rest = f;
  while (!rest.is_zero()) {
    const Term lt = rest.leading();
    divisors.clear();
    for (const auto& g : gb.generators) {
      if (divides(g.leading_monomial(), lt.exponents)) divisors.push_back(&g);
    }
    if (divisors.empty()) {
      kept.push_back(lt);
      rest = ring.sub(rest, ring.monomial(lt.exponents, lt.coeff));
      continue;
    }
    const Polynomial* g = divisors.front();
    if (strategy == ReductionStrategy::last_divisor) {
      g = divisors.back();
    } else if (strategy == ReductionStrategy::random_divisor) {
      g = divisors[std::uniform_int_distribution<std::size_t>(0, divisors.size() - 1)(rng)];
    }
    const Exponents m = quotient(lt.exponents, g->leading_monomial());
    const Coeff c = ring.field().div(lt.coeff, g->leading_coeff());
    rest = ring.sub_mul_term(rest, m, c, *g);
  }
  return ring.from_terms(std::move(kept));
}

std::optional<std::vector<Polynomial>> lift_one_cofactors(const PolyRing& ring, const GroebnerBasis& relations,
                                                          const std::vector<Polynomial>& gens,
                                                          const Budget& budget) {
  if (relations.is_unit_ideal()) throw PreconditionViolation("the zero ring has no lifting problem");
  const std::size_t n = gens.size();
  Completion run(ring, budget, true, true, &relations);
  run.set_generator_count(n);
  for (const auto& r : relations.generators) run.add_relation(r);
  for (std::size_t k = 0; k < n; ++k) {
    Entry e{normal_form(ring, gens[k], relations), std::vector<Polynomial>(n)};
    e.cofactors[k] = ring.one();
    if (e.poly.is_zero()) continue;
    // pairs among the relations reduce to zero and are never queued
    run.add(std::move(e));
  }
  const auto hit = run.run();
  if (!hit) return std::nullopt;
  const Entry& unit = run.basis()[*hit];
  const Coeff inv = ring.field().inv(unit.poly.constant_value());
  std::vector<Polynomial> out;
  out.reserve(n);
  for (const auto& c : unit.cofactors) out.push_back(normal_form(ring, ring.scale(c, inv), relations));
  return out;
}

}  // namespace wittkit
