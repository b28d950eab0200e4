#ifndef BPP_QPOLYNOMIAL_HPP
#define BPP_QPOLYNOMIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "bpp/rational.hpp"

namespace bpp {

// Polynomial in one formal variable q with arbitrary-precision integer
// coefficients, constant term first. Canonical form: no trailing zero
// coefficient; the zero polynomial has an empty coefficient vector.
class QPolynomial {
  public:
    QPolynomial() = default;
    explicit QPolynomial(std::vector<BigInt> coeffs);

    static QPolynomial zero() { return QPolynomial(); }
    static QPolynomial one();
    static QPolynomial monomial(BigInt coeff, std::int64_t degree);

    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is -1.
    std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const { return c_; }
    BigInt coeff(std::int64_t k) const;

    QPolynomial& operator+=(const QPolynomial& o);
    QPolynomial& operator-=(const QPolynomial& o);
    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
    bool operator==(const QPolynomial&) const = default;

    // Multiply by q^k.
    QPolynomial shifted(std::int64_t k) const;
    // Multiply by the q-integer (n)_q = 1 + q + ... + q^(n-1); O(degree).
    QPolynomial times_q_integer(std::int64_t n) const;
    // Exact division by (n)_q; throws NonzeroRemainder if not divisible.
    QPolynomial divided_by_q_integer(std::int64_t n) const;

    BigInt eval_at_one() const;
    bool is_palindromic() const;

    // "1 + q + 2q^2 + q^4"; "0" for the zero polynomial.
    std::string pretty() const;
    // Decimal coefficient strings, constant term first.
    std::vector<std::string> coeff_strings() const;

  private:
    void trim();
    std::vector<BigInt> c_;
};

// Exposed separately so tests can pin the two paths bit-identical; the
// operator* dispatches on degree (schoolbook below 512).
QPolynomial mul_schoolbook(const QPolynomial& a, const QPolynomial& b);
QPolynomial mul_karatsuba(const QPolynomial& a, const QPolynomial& b);

}  // namespace bpp

#endif
