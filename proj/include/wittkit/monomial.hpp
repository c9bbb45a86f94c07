#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace wittkit {

enum class MonomialOrder { lex, grevlex };

std::string_view to_string(MonomialOrder order);

/// Exponent vector of a monomial, one entry per ring variable.
using Exponents = std::vector<std::uint32_t>;

/// Returns <0, 0, >0 as a is smaller than, equal to, or larger than b.
int compare_monomials(const Exponents& a, const Exponents& b, MonomialOrder order);

std::uint64_t total_degree(const Exponents& e);
bool is_one(const Exponents& e);

/// True when a divides b.
bool divides(const Exponents& a, const Exponents& b);
bool coprime(const Exponents& a, const Exponents& b);

Exponents multiply(const Exponents& a, const Exponents& b);
/// b / a; requires divides(a, b).
Exponents quotient(const Exponents& b, const Exponents& a);
Exponents lcm(const Exponents& a, const Exponents& b);

}  // namespace wittkit
