#include "bpp/qpolynomial.hpp"

#include <algorithm>
#include <sstream>

#include "bpp/errors.hpp"

namespace bpp {

namespace {
constexpr std::size_t kKaratsubaThreshold = 512;
const BigInt kZero(0);
}  // namespace

QPolynomial::QPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

QPolynomial QPolynomial::one() { return QPolynomial({BigInt(1)}); }

QPolynomial QPolynomial::monomial(BigInt coeff, std::int64_t degree) {
    if (degree < 0) throw DomainError("monomial degree must be >= 0");
    if (coeff == 0) return zero();
    std::vector<BigInt> c(degree + 1);
    c[degree] = std::move(coeff);
    return QPolynomial(std::move(c));
}

BigInt QPolynomial::coeff(std::int64_t k) const {
    if (k < 0 || k >= static_cast<std::int64_t>(c_.size())) return kZero;
    return c_[k];
}

void QPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

QPolynomial mul_schoolbook(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return QPolynomial::zero();
    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    std::vector<BigInt> out(ca.size() + cb.size() - 1);
    for (std::size_t i = 0; i < ca.size(); ++i)
        for (std::size_t k = 0; k < cb.size(); ++k) out[i + k] += ca[i] * cb[k];
    return QPolynomial(std::move(out));
}

namespace {

// Karatsuba on coefficient spans; sizes below the threshold fall back to
// schoolbook. Exact integer arithmetic, so both paths are bit-identical.
std::vector<BigInt> kara(const BigInt* a, std::size_t na, const BigInt* b, std::size_t nb) {
    if (na == 0 || nb == 0) return {};
    if (std::min(na, nb) < kKaratsubaThreshold) {
        std::vector<BigInt> out(na + nb - 1);
        for (std::size_t i = 0; i < na; ++i)
            for (std::size_t k = 0; k < nb; ++k) out[i + k] += a[i] * b[k];
        return out;
    }
    const std::size_t half = std::max(na, nb) / 2;
    const std::size_t la = std::min(na, half), lb = std::min(nb, half);
    // a = a0 + q^half a1, b = b0 + q^half b1
    auto z0 = kara(a, la, b, lb);
    auto z2 = kara(a + la, na - la, b + lb, nb - lb);
    std::vector<BigInt> sa(std::max(la, na - la)), sb(std::max(lb, nb - lb));
    for (std::size_t i = 0; i < la; ++i) sa[i] = a[i];
    for (std::size_t i = 0; i + la < na; ++i) sa[i] += a[la + i];
    for (std::size_t i = 0; i < lb; ++i) sb[i] = b[i];
    for (std::size_t i = 0; i + lb < nb; ++i) sb[i] += b[lb + i];
    auto z1 = kara(sa.data(), sa.size(), sb.data(), sb.size());
    for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
    for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];

    std::vector<BigInt> out(na + nb - 1);
    for (std::size_t i = 0; i < z0.size(); ++i) out[i] += z0[i];
    for (std::size_t i = 0; i < z1.size(); ++i) out[half + i] += z1[i];
    for (std::size_t i = 0; i < z2.size(); ++i) out[2 * half + i] += z2[i];
    return out;
}

}  // namespace

QPolynomial mul_karatsuba(const QPolynomial& a, const QPolynomial& b) {
    return QPolynomial(
        kara(a.coeffs().data(), a.coeffs().size(), b.coeffs().data(), b.coeffs().size()));
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (std::min(a.coeffs().size(), b.coeffs().size()) < kKaratsubaThreshold)
        return mul_schoolbook(a, b);
    return mul_karatsuba(a, b);
}

QPolynomial QPolynomial::shifted(std::int64_t k) const {
    if (k < 0) throw DomainError("negative shift");
    if (is_zero()) return zero();
    std::vector<BigInt> out(c_.size() + k);
    for (std::size_t i = 0; i < c_.size(); ++i) out[k + i] = c_[i];
    return QPolynomial(std::move(out));
}

QPolynomial QPolynomial::times_q_integer(std::int64_t n) const {
    if (n < 1) throw DomainError("q-integer needs n >= 1");
    if (is_zero()) return zero();
    const std::int64_t d = degree();
    std::vector<BigInt> out(d + n);
    BigInt window(0);  // sum of c_[m-n+1 .. m]
    for (std::int64_t m = 0; m < d + n; ++m) {
        if (m <= d) window += c_[m];
        if (m >= n && m - n <= d) window -= c_[m - n];
        out[m] = window;
    }
    return QPolynomial(std::move(out));
}

QPolynomial QPolynomial::divided_by_q_integer(std::int64_t n) const {
    if (n < 1) throw DomainError("q-integer needs n >= 1");
    if (n == 1 || is_zero()) return *this;
    const std::int64_t d = degree();
    const std::int64_t dq = d - n + 1;  // degree of the quotient
    if (dq < 0) throw NonzeroRemainder("degree below divisor");
    // Low-to-high long division: c_[m] = sum of Q[m-n+1 .. m].
    std::vector<BigInt> q(dq + 1);
    BigInt window(0);  // sum of Q[m-n+1 .. m-1]
    for (std::int64_t m = 0; m <= d; ++m) {
        BigInt val = c_[m] - window;
        if (m <= dq) {
            q[m] = val;
            window += q[m];
        } else if (val != 0) {
            throw NonzeroRemainder("nonzero remainder dividing by (" + std::to_string(n) + ")_q");
        }
        if (m - n + 1 >= 0) window -= q[m - n + 1];
    }
    return QPolynomial(std::move(q));
}

BigInt QPolynomial::eval_at_one() const {
    BigInt s(0);
    for (const auto& c : c_) s += c;
    return s;
}

bool QPolynomial::is_palindromic() const {
    for (std::size_t k = 0; 2 * k < c_.size(); ++k)
        if (c_[k] != c_[c_.size() - 1 - k]) return false;
    return true;
}

std::string QPolynomial::pretty() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        BigInt mag = abs(c_[k]);
        if (first) {
            if (c_[k] < 0) os << "-";
            first = false;
        } else {
            os << (c_[k] < 0 ? " - " : " + ");
        }
        if (k == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str();
            os << "q";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::vector<std::string> QPolynomial::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(c.get_str());
    return out;
}

}  // namespace bpp
