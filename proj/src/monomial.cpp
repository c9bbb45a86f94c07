#include "wittkit/monomial.hpp"

#include <algorithm>
#include <cassert>

namespace wittkit {

std::string_view to_string(MonomialOrder order) {
  return order == MonomialOrder::lex ? "lex" : "grevlex";
}

std::uint64_t total_degree(const Exponents& e) {
  std::uint64_t d = 0;
  for (auto x : e) d += x;
  return d;
}

bool is_one(const Exponents& e) {
  return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
}

int compare_monomials(const Exponents& a, const Exponents& b, MonomialOrder order) {
  assert(a.size() == b.size());
  if (order == MonomialOrder::lex) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
  }
  const auto da = total_degree(a);
  const auto db = total_degree(b);
  if (da != db) return da > db ? 1 : -1;
  // equal degree: the smaller exponent in the last differing variable wins
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

Exponents multiply(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Exponents quotient(const Exponents& b, const Exponents& a) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    assert(a[i] <= b[i]);
    out[i] = b[i] - a[i];
  }
  return out;
}

Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

}  // namespace wittkit
