#ifndef NEWTHYPER_RATIONAL_HPP
#define NEWTHYPER_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace newthyper {

using Integer = boost::multiprecision::cpp_int;

// Exact scalar field. cpp_rational keeps the canonical form for us:
// positive denominator, gcd(|num|, den) = 1.
using Rational = boost::multiprecision::cpp_rational;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Accepts "p" or "p/q" with optional sign on p (and on q).
Rational rational_parse(std::string_view text);

// "p/q", or just "p" when the denominator is 1.
std::string rational_str(const Rational& r);

// q^n for integer n (negative exponents allowed, q != 0).
Rational rational_pow(const Rational& q, long n);

}  // namespace newthyper

#endif
