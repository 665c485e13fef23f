#ifndef TORICSTAB_RATIONAL_HPP
#define TORICSTAB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace toric {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q" with q > 0 and gcd(p, q) = 1; the sign sits on p.
std::string fraction_string(const Rational& value);

// Accepts "p" or "p/q" with an optional leading sign. Throws ValidationError.
Rational parse_fraction(std::string_view text);

}  // namespace toric

#endif
