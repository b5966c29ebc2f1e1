#ifndef CHENRANKS_RATIONAL_HPP
#define CHENRANKS_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "chenranks/errors.hpp"

namespace chenranks {

using Int = mpz_class;

// Arbitrary-precision rational. GMP's mpq_class keeps results of arithmetic in
// canonical form (lowest terms, positive denominator, 0 == 0/1), but a raw
// (num, den) constructor does NOT canonicalize, so construction goes through
// rat() below. Everything downstream may assume canonical form.
using Rational = mpq_class;

inline Rational rat(const Int& num, const Int& den) {
    if (den == 0) throw InputError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rat(long num, long den = 1) { return rat(Int(num), Int(den)); }

// Serialized form is always "p/q", q > 0, lowest terms ("4" serializes as "4/1").
inline std::string rational_to_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return rat(Int(s), Int(1));
        return rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw InputError("malformed rational: " + s);
    }
}

// Exact binomial coefficient, C(n, k) = 0 for k < 0 or k > n.
inline Int binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return Int(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// Number of degree-d monomials in n variables.
inline Int monomial_count(long n, long d) {
    if (d < 0) return Int(0);
    if (d == 0) return Int(1);
    return binomial(n + d - 1, d);
}

inline std::int64_t to_i64(const Int& z) {
    if (!z.fits_slong_p()) throw ResourceError("integer exceeds 64-bit range: " + z.get_str());
    return static_cast<std::int64_t>(z.get_si());
}

} // namespace chenranks

#endif
