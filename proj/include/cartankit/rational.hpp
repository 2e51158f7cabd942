#ifndef CARTANKIT_RATIONAL_HPP
#define CARTANKIT_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>

namespace cartankit {

// Exact arbitrary-precision rational. Canonical form (gcd-reduced, positive
// denominator, zero as 0/1) is maintained by the backend after every operation.
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

// Textual form is "p/q", with "/q" omitted when q == 1.
inline std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

// The backend two-argument constructor rejects negative denominators, so
// normalize the sign here.
inline Rational make_rational(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) { num = -num; den = -den; }
    return Rational(num, den);
}

inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (text.empty() || slash == 0 || slash == text.size() - 1)
            throw std::invalid_argument("empty part");
        if (slash == std::string::npos) return Rational(Integer(text));
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        if (den < 0) { num = -num; den = -den; }
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: '" + text + "'");
    }
}

// True iff the backend representation satisfies the canonical-form contract.
inline bool is_canonical(const Rational& r) {
    if (denominator(r) <= 0) return false;
    if (numerator(r) == 0) return denominator(r) == 1;
    return boost::multiprecision::gcd(Integer(boost::multiprecision::abs(numerator(r))),
                                      denominator(r)) == 1;
}

} // namespace cartankit

#endif
