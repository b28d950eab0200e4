#ifndef BPP_GENFUNC_HPP
#define BPP_GENFUNC_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bpp/box.hpp"
#include "bpp/qpolynomial.hpp"
#include "bpp/rational.hpp"

namespace bpp {

// (n)_q = 1 + q + ... + q^(n-1).
QPolynomial q_integer(std::int64_t n);

// Generating function of the total sum over the box:
//   prod_{i,j,k} (i+j+k-1)_q / (i+j+k-2)_q.
// All numerator q-integers are multiplied first, then each denominator
// q-integer is divided out exactly (largest first); any nonzero remainder
// throws. Degree abc must not exceed the cap.
QPolynomial q_macmahon(const BoxDims& dims, std::int64_t degree_cap = 20000);

struct QMoments {
    BigInt count;       // sum of coefficients
    Rational mean;      // histogram mean of the exponent
    Rational variance;  // histogram variance
};
// Treats coefficients as a histogram over exponents; rejects negative
// coefficients and the zero polynomial.
QMoments moments_from_qpoly(const QPolynomial& poly);

// Truncated expansion of prod_{-a+1<=i<=0<=j<=b-1} 1/(1 - x_i...x_j):
// coefficients of all monomials in x_{-a+1}..x_{b-1} with total degree <= D.
struct MultiMonomialTable {
    std::int64_t a = 1;
    std::int64_t b = 1;
    std::int64_t max_degree = 0;
    // Keys are exponent vectors in index order (-a+1, ..., b-1), fixed
    // length a+b-1, zero-padded; map order is lexicographic.
    std::map<std::vector<std::int64_t>, BigInt> coeff;

    BigInt at(const std::vector<std::int64_t>& exponents) const;
};

MultiMonomialTable stanley_coefficients(std::int64_t a, std::int64_t b, std::int64_t max_degree,
                                        std::int64_t entry_budget = 2000000);

// True iff the table matches, for every diagonal-sum vector with total <= D,
// the count of a x b partitions with exactly that vector (enumerated with
// entries <= D, which captures every such partition).
bool stanley_check(std::int64_t a, std::int64_t b, std::int64_t max_degree,
                   const BigInt& enumeration_cap = BigInt(10000000));

// JSON list of {"exponents":[...],"count":"..."} sorted lexicographically.
std::string stanley_to_json(const MultiMonomialTable& table);

// Bare JSON array of decimal coefficient strings, constant term first.
std::string qpoly_to_json(const QPolynomial& poly);

}  // namespace bpp

#endif
