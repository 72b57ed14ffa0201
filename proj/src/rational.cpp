#include "newthyper/rational.hpp"

#include <cctype>

namespace newthyper {

namespace {

Integer parse_integer(std::string_view s, std::string_view whole) {
    if (s.empty())
        throw ParseError("malformed rational: '" + std::string(whole) + "'");
    std::size_t i = 0;
    if (s[0] == '+' || s[0] == '-') i = 1;
    if (i == s.size())
        throw ParseError("malformed rational: '" + std::string(whole) + "'");
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            throw ParseError("malformed rational: '" + std::string(whole) + "'");
    // cpp_int does not accept a leading '+'
    Integer v{std::string(s.substr(i))};
    return s[0] == '-' ? Integer(-v) : v;
}

}  // namespace

Rational rational_parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text, text));
    }
    Integer num = parse_integer(text.substr(0, slash), text);
    Integer den = parse_integer(text.substr(slash + 1), text);
    if (den == 0)
        throw ParseError("zero denominator in rational: '" + std::string(text) + "'");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

std::string rational_str(const Rational& r) {
    const Integer& den = boost::multiprecision::denominator(r);
    std::string s = boost::multiprecision::numerator(r).str();
    if (den != 1) {
        s += '/';
        s += den.str();
    }
    return s;
}

Rational rational_pow(const Rational& q, long n) {
    if (n == 0) return Rational(1);
    if (q == 0) {
        if (n < 0) throw std::domain_error("rational_pow: zero base with negative exponent");
        return Rational(0);
    }
    Rational base = q;
    unsigned long e;
    if (n < 0) {
        base = Rational(1) / q;
        e = static_cast<unsigned long>(-n);
    } else {
        e = static_cast<unsigned long>(n);
    }
    Rational acc(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

}  // namespace newthyper
