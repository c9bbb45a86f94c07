#include "wittkit/ring.hpp"

#include "wittkit/error.hpp"
#include "wittkit/poly_format.hpp"

namespace wittkit {

Ring::Ring(RingSpec spec, PolyRing poly, const Budget& budget)
    : spec_(std::move(spec)), poly_(std::move(poly)), budget_(budget) {}

RingPtr Ring::create(RingSpec spec, const Budget& budget) {
  PolyRing poly(Field(spec.field), spec.vars, spec.order);
  std::vector<Polynomial> rels;
  for (std::size_t k = 0; k < spec.relations.size(); ++k) {
    rels.push_back(parse_polynomial(poly, spec.relations[k], "relations[" + std::to_string(k + 1) + "]"));
  }
  std::shared_ptr<Ring> ring(new Ring(std::move(spec), std::move(poly), budget));
  ring->basis_ = buchberger(ring->poly_, rels, budget);
  if (ring->basis_.is_unit_ideal()) throw PreconditionViolation("relations generate the unit ideal (zero ring)");
  return ring;
}

RingElement Ring::element(const Polynomial& p) const {
  return RingElement(shared_from_this(), normal_form(poly_, p, basis_));
}

RingElement Ring::parse(const std::string& text, const std::string& where) const {
  return element(parse_polynomial(poly_, text, where));
}

RingElement Ring::zero() const { return RingElement(shared_from_this(), Polynomial()); }
RingElement Ring::one() const { return element(poly_.one()); }
RingElement Ring::constant(const Coeff& c) const { return element(poly_.constant(c)); }
RingElement Ring::integer(long value) const { return constant(Coeff(value)); }

RingElement Ring::variable(const std::string& name) const {
  for (std::size_t k = 0; k < spec_.vars.size(); ++k) {
    if (spec_.vars[k] == name) return element(poly_.variable(k));
  }
  throw PreconditionViolation("unknown variable '" + name + "'");
}

std::string Ring::describe() const {
  std::string out = field().describe() + "[";
  for (std::size_t k = 0; k < spec_.vars.size(); ++k) out += (k ? "," : "") + spec_.vars[k];
  out += "]";
  if (!basis_.is_zero_ideal()) {
    out += "/(";
    for (std::size_t k = 0; k < basis_.generators.size(); ++k) {
      out += (k ? "," : "") + format_polynomial(poly_, basis_.generators[k]);
    }
    out += ")";
  }
  return out;
}

const Ring& RingElement::common(const RingElement& other) const {
  if (!ring_ || !other.ring_ || !ring_->same_as(*other.ring_)) throw RingMismatch();
  return *ring_;
}

RingElement RingElement::operator+(const RingElement& other) const {
  const Ring& r = common(other);
  // normal forms are closed under addition
  return RingElement(ring_, r.poly().add(value_, other.value_));
}

RingElement RingElement::operator-(const RingElement& other) const {
  const Ring& r = common(other);
  return RingElement(ring_, r.poly().sub(value_, other.value_));
}

RingElement RingElement::operator*(const RingElement& other) const {
  const Ring& r = common(other);
  if (value_.is_zero() || other.value_.is_zero()) return RingElement(ring_, Polynomial());
  if (value_.is_constant()) return RingElement(ring_, r.poly().scale(other.value_, value_.constant_value()));
  if (other.value_.is_constant()) return RingElement(ring_, r.poly().scale(value_, other.value_.constant_value()));
  return r.element(r.poly().mul(value_, other.value_));
}

RingElement RingElement::operator-() const {
  if (!ring_) throw RingMismatch();
  return RingElement(ring_, ring_->poly().neg(value_));
}

RingElement RingElement::pow(unsigned k) const {
  if (!ring_) throw RingMismatch();
  RingElement result = ring_->one();
  RingElement base = *this;
  while (k != 0) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k != 0) base = base * base;
  }
  return result;
}

RingElement RingElement::scaled(const Coeff& c) const {
  if (!ring_) throw RingMismatch();
  return RingElement(ring_, ring_->poly().scale(value_, ring_->field().normalize(c)));
}

bool RingElement::operator==(const RingElement& other) const {
  if (!ring_ || !other.ring_) return !ring_ && !other.ring_ && value_ == other.value_;
  return ring_->same_as(*other.ring_) && value_ == other.value_;
}

std::string RingElement::to_string() const {
  if (!ring_) return "0";
  return format_polynomial(ring_->poly(), value_);
}

std::optional<std::vector<RingElement>> lift_one(const std::vector<RingElement>& gens) {
  if (gens.empty()) throw PreconditionViolation("lift_one needs at least one generator");
  const RingPtr ring = gens.front().ring();
  if (!ring) throw RingMismatch();
  for (const auto& g : gens) {
    if (!g.ring() || !g.ring()->same_as(*ring)) throw RingMismatch();
  }
  std::vector<RingElement> out(gens.size(), ring->zero());
  bool found = false;
  for (std::size_t k = 0; k < gens.size() && !found; ++k) {
    if (gens[k].is_constant() && !gens[k].is_zero()) {
      out[k] = ring->constant(ring->field().inv(gens[k].constant_value()));
      found = true;
    }
  }
  if (!found) {
    std::vector<Polynomial> polys;
    for (const auto& g : gens) polys.push_back(g.value());
    auto cof = lift_one_cofactors(ring->poly(), ring->ideal_basis(), polys, ring->budget());
    if (!cof) return std::nullopt;
    for (std::size_t k = 0; k < gens.size(); ++k) out[k] = ring->element((*cof)[k]);
  }
  RingElement sum = ring->zero();
  for (std::size_t k = 0; k < gens.size(); ++k) sum += out[k] * gens[k];
  if (!sum.is_one()) throw Error("internal: Bezout witness failed re-expansion");
  return out;
}

std::optional<RingElement> invert_unit(const RingElement& e) {
  if (!e.ring()) throw RingMismatch();
  if (e.is_zero()) return std::nullopt;
  if (e.is_constant()) return e.ring()->constant(e.ring()->field().inv(e.constant_value()));
  auto w = lift_one({e});
  if (!w) return std::nullopt;
  return w->front();
}

}  // namespace wittkit
