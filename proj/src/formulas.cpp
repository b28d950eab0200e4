#include "bpp/formulas.hpp"

#include <sstream>

namespace bpp {

namespace {

void check_index(const BoxDims& d, std::int64_t i) {
    if (!d.diag_valid(i)) {
        std::ostringstream os;
        os << "diagonal index " << i << " outside [" << -d.a << "," << d.b << "]";
        throw IndexOutOfRange(os.str());
    }
}

}  // namespace

Rational mean_diagonal_sum(const BoxDims& d, std::int64_t i) {
    check_index(d, i);
    if (i <= 0) return make_rational(BigInt(d.a + i) * d.b * d.c, BigInt(d.a + d.b));
    return make_rational(BigInt(d.b - i) * d.a * d.c, BigInt(d.a + d.b));
}

Rational covariance_diagonal_sums(const BoxDims& d, std::int64_t i, std::int64_t j) {
    check_index(d, i);
    check_index(d, j);
    if (i > j) std::swap(i, j);
    const BigInt ab(d.a + d.b);
    const BigInt num = BigInt(d.a + i) * (d.b - j) * d.a * d.b * d.c * (d.a + d.b + d.c);
    const BigInt den = ab * ab * (ab * ab - 1);
    return make_rational(num, den);
}

Rational total_sum_variance(const BoxDims& d) {
    return make_rational(BigInt(d.a) * d.b * d.c * (d.a + d.b + d.c), BigInt(12));
}

BigInt macmahon_count(const BoxDims& d) {
    Rational prod(1);
    for (std::int64_t i = 1; i <= d.a; ++i)
        for (std::int64_t j = 1; j <= d.b; ++j)
            for (std::int64_t k = 1; k <= d.c; ++k)
                prod *= make_rational(BigInt(i + j + k - 1), BigInt(i + j + k - 2));
    if (prod.get_den() != 1)
        throw InternalError("MacMahon product did not reduce to an integer: " + rat_str(prod));
    return prod.get_num();
}

QuadraticIdentity quadratic_sum_identity(std::int64_t a, std::int64_t b) {
    if (a < 1 || b < 1) throw DomainError("quadratic_sum_identity needs a,b >= 1");
    BigInt lhs(0);
    for (std::int64_t i = -a + 1; i <= b - 1; ++i) {
        for (std::int64_t j = i + 1; j <= b - 1; ++j) lhs += 2 * BigInt(a + i) * (b - j);
        lhs += BigInt(a + i) * (b - i);
    }
    const BigInt s(a + b);
    return {lhs, make_rational(s * s * (s * s - 1), BigInt(12))};
}

Rational covariance_ratio_form(const BoxDims& d, std::int64_t i, std::int64_t j) {
    check_index(d, i);
    check_index(d, j);
    if (i > j) throw IndexOutOfRange("covariance_ratio_form requires i <= j");
    const Rational var_first = covariance_diagonal_sums(d, -d.a + 1, -d.a + 1);
    return make_rational(BigInt(d.a + i) * (d.b - j), BigInt(d.a + d.b - 1)) * var_first;
}

Rational harmonicity_offset(const BoxDims& d, std::int64_t i) {
    if (i <= -d.a || i >= d.b) throw IndexOutOfRange("harmonicity offset needs interior i");
    return mean_diagonal_sum(d, i) -
           (mean_diagonal_sum(d, i - 1) + mean_diagonal_sum(d, i + 1)) / 2;
}

CenteredSums centered_sums(const DiagonalSums& s) {
    CenteredSums out{s.dims, std::vector<Rational>(s.dims.diag_count())};
    for (std::int64_t i = s.dims.diag_min(); i <= s.dims.diag_max(); ++i)
        out.y[i + s.dims.a] = mean_diagonal_sum(s.dims, i) - Rational(static_cast<long>(s.at(i)));
    return out;
}

}  // namespace bpp
