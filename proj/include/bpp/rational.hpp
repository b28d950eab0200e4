#ifndef BPP_RATIONAL_HPP
#define BPP_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "bpp/errors.hpp"

namespace bpp {

using BigInt = mpz_class;
// Canonical form (gcd 1, positive denominator) is maintained by every GMP
// operation once established; factories below establish it.
using Rational = mpq_class;

inline Rational make_rational(BigInt num, BigInt den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
    return make_rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
}

// "num/den", or just "num" when the denominator is 1.
inline std::string rat_str(const Rational& q) { return q.get_str(); }

inline Rational parse_rational(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw DomainError("unparseable rational: " + s);
    q.canonicalize();
    return q;
}

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace bpp

#endif
