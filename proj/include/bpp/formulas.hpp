#ifndef BPP_FORMULAS_HPP
#define BPP_FORMULAS_HPP

#include "bpp/box.hpp"
#include "bpp/rational.hpp"

namespace bpp {

// E[S_i] = (a+i)bc/(a+b) for i <= 0, (b-i)ac/(a+b) for i >= 0.
// Both branches agree at i = 0; zero at the boundary diagonals.
Rational mean_diagonal_sum(const BoxDims& dims, std::int64_t i);

// Cov(S_i, S_j) = (a+i)(b-j) * abc(a+b+c) / ((a+b)^2((a+b)^2 - 1)),
// normalized so i <= j. Symmetric; zero whenever i = -a or j = b.
Rational covariance_diagonal_sums(const BoxDims& dims, std::int64_t i, std::int64_t j);

// Var[S] = abc(a+b+c)/12 for the total sum S.
Rational total_sum_variance(const BoxDims& dims);

// Number of boxed plane partitions: prod (i+j+k-1)/(i+j+k-2) over the box.
// Accumulated as an exact rational that must reduce to an integer.
BigInt macmahon_count(const BoxDims& dims);

struct QuadraticIdentity {
    BigInt lhs;     // 2*sum_{-a<i<j<b}(a+i)(b-j) + sum_{-a<i<b}(a+i)(b-i)
    Rational rhs;   // (a+b)^2((a+b)^2-1)/12
    bool holds() const { return Rational(lhs) == rhs; }
};
QuadraticIdentity quadratic_sum_identity(std::int64_t a, std::int64_t b);

// (a+i)(b-j)/(a+b-1) * Var[S_{-a+1}]; identical to covariance_diagonal_sums.
// Requires i <= j.
Rational covariance_ratio_form(const BoxDims& dims, std::int64_t i, std::int64_t j);

// kappa(i) = mu(i) - (mu(i-1) + mu(i+1))/2 for interior i; equals c/2 at
// i = 0 and 0 elsewhere, but is always derived from the mean formula.
Rational harmonicity_offset(const BoxDims& dims, std::int64_t i);

// y[i] = mu(i) - s[i].
CenteredSums centered_sums(const DiagonalSums& s);

}  // namespace bpp

#endif
