#pragma once

#include <cctype>
#include <string>
#include <gmpxx.h>

#include "reebhom/errors.hpp"

namespace reebhom {

// Exact arbitrary-precision rational, kept canonical (den > 0, gcd = 1).
// All arithmetic in the library goes through this type; no floating point
// touches any homology or action comparison.
using Rational = mpq_class;
using Integer = mpz_class;

// Integer grading degree used throughout (chain complexes, rank modules).
using Degree = long long;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) fail(errc::parse_error, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// gmpxx has no long long overloads; route machine integers through here.
inline Integer to_integer(long long v) { return Integer(static_cast<long>(v)); }
inline Rational to_rational(long long v) { return Rational(to_integer(v)); }

inline Rational make_rational(long long num, long long den = 1) {
    return make_rational(to_integer(num), to_integer(den));
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// floor(q) as an exact integer (works for negative values too).
inline Integer floor_rational(const Rational& q) {
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return f;
}

inline long long floor_to_ll(const Rational& q) {
    Integer f = floor_rational(q);
    if (!f.fits_slong_p()) fail(errc::parse_error, "floor out of machine range");
    return static_cast<long long>(f.get_si());
}

// "3", "-7/2" — canonical form, no spaces.
inline std::string to_string(const Rational& q) {
    return q.get_str();
}

// Smallest positive rational that is an integer multiple of both a and b.
// For reduced a = p/q, b = r/s this is lcm(p, r) / gcd(q, s).
inline Rational rational_lcm(const Rational& a, const Rational& b) {
    if (a <= 0 || b <= 0) fail(errc::parse_error, "rational_lcm needs positive inputs");
    Integer num, den;
    mpz_lcm(num.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
    mpz_gcd(den.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
    return make_rational(num, den);
}

namespace detail {

inline Integer parse_digits(const std::string& text, size_t& pos) {
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start)
        fail(errc::parse_error, "expected digits at position " + std::to_string(start) +
                                    " in \"" + text + "\"");
    return Integer(text.substr(start, pos - start));
}

} // namespace detail

// Exact parser for "42", "-7/3" and finite decimals like "1.01" (= 101/100).
// Decimals never pass through binary floating point.
inline Rational parse_rational(const std::string& text) {
    size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = (text[pos] == '-');
        ++pos;
    }
    Integer intpart = detail::parse_digits(text, pos);

    Rational result;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        Integer den = detail::parse_digits(text, pos);
        if (den == 0)
            fail(errc::parse_error, "zero denominator in \"" + text + "\"");
        result = make_rational(intpart, den);
    } else if (pos < text.size() && text[pos] == '.') {
        ++pos;
        size_t frac_start = pos;
        Integer frac = detail::parse_digits(text, pos);
        size_t ndigits = pos - frac_start;
        Integer scale = 1;
        for (size_t i = 0; i < ndigits; ++i) scale *= 10;
        result = make_rational(intpart * scale + frac, scale);
    } else {
        result = Rational(intpart);
    }
    if (pos != text.size())
        fail(errc::parse_error, "trailing characters at position " + std::to_string(pos) +
                                    " in \"" + text + "\"");
    if (negative) result = -result;
    return result;
}

} // namespace reebhom
