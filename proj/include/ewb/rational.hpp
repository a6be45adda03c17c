#ifndef EWB_RATIONAL_HPP
#define EWB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace ewb {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// p-adic valuation of a nonzero integer: largest e with p^e | n.
long padic_val(const Int& n, const Int& p);

/// p-adic valuation of a rational; nullopt encodes v(0) = infinity.
/// v(a/b) = v(a) - v(b) on the reduced fraction.
std::optional<long> padic_val(const Rat& q, const Int& p);

/// True when the reduced denominator is coprime to p (v_p(q) >= 0); 0 counts.
bool is_p_integer(const Rat& q, const Int& p);

/// Renders "num/den" ("num" when den == 1); parse_rational inverts it.
std::string rat_to_string(const Rat& q);
Rat parse_rational(const std::string& text);

} // namespace ewb

#endif
