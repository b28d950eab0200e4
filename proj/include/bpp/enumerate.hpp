#ifndef BPP_ENUMERATE_HPP
#define BPP_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bpp/box.hpp"
#include "bpp/qpolynomial.hpp"
#include "bpp/rational.hpp"

namespace bpp {

// The cells of one diagonal, read top row to bottom row; weakly decreasing.
using DiagonalState = std::vector<std::int64_t>;

inline const BigInt kDefaultEnumerationCap(10000000);   // partitions
inline const std::int64_t kDefaultStateBudget = 1000000;  // diagonal states

// Exact count, mean vector and covariance matrix of the diagonal sums under
// the uniform measure; indices run over the full range [-a, b].
struct ExactMoments {
    BoxDims dims;
    BigInt count;
    std::vector<Rational> mean;               // offset by +a
    std::vector<std::vector<Rational>> cov;   // cov[i+a][j+a]

    const Rational& mean_at(std::int64_t i) const { return mean[i + dims.a]; }
    const Rational& cov_at(std::int64_t i, std::int64_t j) const {
        return cov[i + dims.a][j + dims.a];
    }
};

// Visits every partition exactly once, in lexicographic order of the
// flattened matrix. The visited reference is reused between calls; copy it
// to keep it. Throws CapExceeded (with the predicted count) up front.
void for_each_bpp(const BoxDims& dims, const std::function<void(const PlanePartition&)>& fn,
                  const BigInt& cap = kDefaultEnumerationCap);

std::vector<PlanePartition> enumerate_bpps(const BoxDims& dims,
                                           const BigInt& cap = kDefaultEnumerationCap);

// Brute-force moments. The parallel mode splits the iteration space by the
// first row; integer accumulators make the reduction order-independent, so
// results are identical for any worker count.
ExactMoments exact_moments_bruteforce(const BoxDims& dims,
                                      const BigInt& cap = kDefaultEnumerationCap,
                                      bool parallel = false);

// Transfer-matrix DP over diagonal states with the interlacing transition
// relation; same output contract as brute force. Transitions are generated
// lazily, never materialized. Throws BudgetExceeded when the total number
// of diagonal states would exceed the budget.
ExactMoments exact_moments_dp(const BoxDims& dims,
                              std::int64_t state_budget = kDefaultStateBudget);

// Coefficient of q^s = number of partitions with total sum s (degree abc,
// palindromic, value macmahon_count at q = 1). DP over diagonal states.
QPolynomial sum_distribution(const BoxDims& dims,
                             std::int64_t state_budget = kDefaultStateBudget);

// Groups partitions by the contents of diagonals i-1 and i+1 and returns the
// maximum over groups of |E[S_i | group] - ((s_{i-1}+s_{i+1})/2 + kappa(i))|;
// exactly zero when the conditional-mean identity holds.
Rational conditional_mean_check(const BoxDims& dims, std::int64_t i,
                                const BigInt& cap = kDefaultEnumerationCap);

// {"dims":...,"count":"...","mean":[{"i":...,"value":"num/den"},...],
//  "cov":[{"i":...,"j":...,"value":"..."},...]} with pairs i <= j.
std::string moments_to_json(const ExactMoments& m);

// Enumerates all weakly decreasing tuples with lb[t] <= v[t] <= ub[t],
// in lexicographic order. Shared by the DP and by the samplers' tests.
void for_each_monotone_tuple(const std::vector<std::int64_t>& lb,
                             const std::vector<std::int64_t>& ub,
                             const std::function<void(const DiagonalState&)>& fn);

}  // namespace bpp

#endif
