#include "bpp/enumerate.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

#include "bpp/formulas.hpp"
#include "bpp/threads.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bpp {

namespace {

// Adds a possibly 127-bit nonnegative product without building a temporary
// mpz when it fits in a long.
void acc_add(BigInt& acc, unsigned __int128 v) {
    if (v <= static_cast<unsigned __int128>(std::int64_t{1} << 62)) {
        acc += static_cast<long>(static_cast<std::int64_t>(v));
        return;
    }
    BigInt hi(static_cast<unsigned long>(v >> 64));
    hi <<= 64;
    hi += static_cast<unsigned long>(v);
    acc += hi;
}

// Depth-first fill of cells [pos, a*b) in row-major order, values ascending,
// upper-bounded by the up/left neighbors. Visits leaves in lexicographic
// order of the flattened matrix.
void dfs_fill(PlanePartition& p, std::int64_t pos,
              const std::function<void(const PlanePartition&)>& fn) {
    const BoxDims& d = p.dims;
    if (pos == d.cells()) {
        fn(p);
        return;
    }
    const std::int64_t r = pos / d.b, j = pos % d.b;
    std::int64_t ub = d.c;
    if (r > 0) ub = std::min(ub, p.z[pos - d.b]);
    if (j > 0) ub = std::min(ub, p.z[pos - 1]);
    for (std::int64_t v = 0; v <= ub; ++v) {
        p.z[pos] = v;
        dfs_fill(p, pos + 1, fn);
    }
    p.z[pos] = 0;
}

void check_cap(const BoxDims& dims, const BigInt& cap) {
    const BigInt predicted = macmahon_count(dims);
    if (predicted > cap)
        throw CapExceeded("enumeration of " + predicted.get_str() +
                          " partitions exceeds cap " + cap.get_str());
}

DiagonalState diag_cells(const PlanePartition& p, std::int64_t i) {
    DiagonalState out;
    for (std::int64_t r = p.dims.diag_row_lo(i); r <= p.dims.diag_row_hi(i); ++r)
        out.push_back(p.at(r, r + i));
    return out;
}

// ---------------------------------------------------------------------------
// Moment accumulation (shared by the serial and OpenMP brute-force paths).
// All fields are exact integers, so merging is order-independent and the
// final moments do not depend on how the iteration space was split.

struct MomentAcc {
    BigInt count;
    std::vector<BigInt> sum;
    std::vector<BigInt> prod;  // upper triangle, row-major

    explicit MomentAcc(std::int64_t m) : sum(m), prod(m * (m + 1) / 2) {}

    static std::size_t tri(std::int64_t m, std::int64_t i, std::int64_t j) {
        return static_cast<std::size_t>(i * m - i * (i - 1) / 2 + (j - i));
    }

    void add(const std::vector<std::int64_t>& s) {
        const std::int64_t m = static_cast<std::int64_t>(s.size());
        count += 1;
        std::size_t idx = 0;
        for (std::int64_t i = 0; i < m; ++i) {
            const std::int64_t v = s[i];
            if (v == 0) {
                idx += m - i;
                continue;
            }
            sum[i] += static_cast<long>(v);
            for (std::int64_t j = i; j < m; ++j)
                acc_add(prod[idx + (j - i)],
                        static_cast<unsigned __int128>(v) * static_cast<std::uint64_t>(s[j]));
            idx += m - i;
        }
    }

    void merge(const MomentAcc& o) {
        count += o.count;
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += o.sum[k];
        for (std::size_t k = 0; k < prod.size(); ++k) prod[k] += o.prod[k];
    }

    ExactMoments finalize(const BoxDims& dims) const {
        if (count == 0) throw InternalError("no partitions enumerated");
        const std::int64_t m = dims.diag_count();
        ExactMoments out{dims, count, std::vector<Rational>(m),
                         std::vector<std::vector<Rational>>(m, std::vector<Rational>(m))};
        for (std::int64_t i = 0; i < m; ++i) out.mean[i] = make_rational(sum[i], count);
        for (std::int64_t i = 0; i < m; ++i) {
            for (std::int64_t j = i; j < m; ++j) {
                Rational c = make_rational(prod[tri(m, i, j)], count) - out.mean[i] * out.mean[j];
                out.cov[i][j] = c;
                out.cov[j][i] = c;
            }
        }
        return out;
    }
};

void accumulate_sums(const PlanePartition& p, std::vector<std::int64_t>& s) {
    const BoxDims& d = p.dims;
    std::fill(s.begin(), s.end(), 0);
    for (std::int64_t r = 1; r <= d.a; ++r)
        for (std::int64_t j = 1; j <= d.b; ++j) s[(j - r) + d.a] += p.at(r, j);
}

}  // namespace

void for_each_monotone_tuple(const std::vector<std::int64_t>& lb,
                             const std::vector<std::int64_t>& ub,
                             const std::function<void(const DiagonalState&)>& fn) {
    const std::size_t n = lb.size();
    // Effective lower bound: a value must also dominate every later minimum.
    std::vector<std::int64_t> lo(lb);
    for (std::size_t t = n; t-- > 1;) lo[t - 1] = std::max(lo[t - 1], lo[t]);
    DiagonalState v(n);
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t t, std::int64_t cap) {
        if (t == n) {
            fn(v);
            return;
        }
        const std::int64_t hi = std::min(cap, ub[t]);
        for (std::int64_t x = lo[t]; x <= hi; ++x) {
            v[t] = x;
            rec(t + 1, x);
        }
    };
    rec(0, std::numeric_limits<std::int64_t>::max());
}

void for_each_bpp(const BoxDims& dims, const std::function<void(const PlanePartition&)>& fn,
                  const BigInt& cap) {
    check_cap(dims, cap);
    PlanePartition p(dims);
    dfs_fill(p, 0, fn);
}

std::vector<PlanePartition> enumerate_bpps(const BoxDims& dims, const BigInt& cap) {
    std::vector<PlanePartition> out;
    for_each_bpp(dims, [&](const PlanePartition& p) { out.push_back(p); }, cap);
    return out;
}

ExactMoments exact_moments_bruteforce(const BoxDims& dims, const BigInt& cap, bool parallel) {
    check_cap(dims, cap);
    const std::int64_t m = dims.diag_count();

    if (!parallel) {
        MomentAcc acc(m);
        std::vector<std::int64_t> s(m);
        PlanePartition p(dims);
        dfs_fill(p, 0, [&](const PlanePartition& q) {
            accumulate_sums(q, s);
            acc.add(s);
        });
        return acc.finalize(dims);
    }

    // Split by the first row; each task owns a disjoint slice of the
    // lexicographic order, and integer merging is order-independent.
    std::vector<DiagonalState> first_rows;
    for_each_monotone_tuple(std::vector<std::int64_t>(dims.b, 0),
                            std::vector<std::int64_t>(dims.b, dims.c),
                            [&](const DiagonalState& t) { first_rows.push_back(t); });
    MomentAcc total(m);
#ifdef _OPENMP
#pragma omp parallel num_threads(max_workers())
#endif
    {
        MomentAcc local(m);
        std::vector<std::int64_t> s(m);
        PlanePartition p(dims);
#ifdef _OPENMP
#pragma omp for schedule(dynamic)
#endif
        for (std::int64_t t = 0; t < static_cast<std::int64_t>(first_rows.size()); ++t) {
            for (std::int64_t j = 0; j < dims.b; ++j) p.z[j] = first_rows[t][j];
            dfs_fill(p, dims.b, [&](const PlanePartition& q) {
                accumulate_sums(q, s);
                local.add(s);
            });
        }
#ifdef _OPENMP
#pragma omp critical
#endif
        total.merge(local);
    }
    return total.finalize(dims);
}

// ---------------------------------------------------------------------------
// Transfer-matrix DP over diagonal states.

namespace {

struct DpTables {
    BoxDims dims;
    std::vector<std::vector<DiagonalState>> states;  // index d = i + a, sorted lex
    std::vector<std::vector<std::int64_t>> sums;
};

// C(n+c, min(n,c)) with an early abort once the value exceeds the limit.
BigInt states_on_diagonal(std::int64_t n, std::int64_t c, const BigInt& limit) {
    BigInt r(1);
    const std::int64_t k = std::min(n, c);
    const std::int64_t nk = std::max(n, c);
    for (std::int64_t t = 1; t <= k; ++t) {
        r *= BigInt(nk + t);
        r /= BigInt(t);
        if (r > limit) return r;
    }
    return r;
}

DpTables build_dp_tables(const BoxDims& dims, std::int64_t state_budget) {
    const BigInt budget(static_cast<long>(state_budget));
    BigInt total(0), total_cells(0);
    for (std::int64_t i = dims.diag_min(); i <= dims.diag_max(); ++i) {
        const std::int64_t n = dims.diag_len(i);
        const BigInt cnt = states_on_diagonal(n, dims.c, budget);
        total += cnt;
        total_cells += cnt * n;
        if (total > budget || total_cells > 16 * budget)
            throw BudgetExceeded("DP state space exceeds budget of " + budget.get_str() +
                                 " states");
    }

    DpTables t;
    t.dims = dims;
    t.states.resize(dims.diag_count());
    t.sums.resize(dims.diag_count());
    for (std::int64_t i = dims.diag_min(); i <= dims.diag_max(); ++i) {
        const std::int64_t n = dims.diag_len(i);
        auto& st = t.states[i + dims.a];
        auto& su = t.sums[i + dims.a];
        for_each_monotone_tuple(std::vector<std::int64_t>(n, 0),
                                std::vector<std::int64_t>(n, dims.c),
                                [&](const DiagonalState& v) {
                                    st.push_back(v);
                                    std::int64_t s = 0;
                                    for (auto x : v) s += x;
                                    su.push_back(s);
                                });
    }
    return t;
}

std::size_t state_index(const std::vector<DiagonalState>& states, const DiagonalState& v) {
    const auto it = std::lower_bound(states.begin(), states.end(), v);
    return static_cast<std::size_t>(it - states.begin());
}

// Bounds on the diagonal-i state v compatible with u on diagonal i+1.
void prev_bounds(const BoxDims& d, std::int64_t i, const DiagonalState& u,
                 std::vector<std::int64_t>& lb, std::vector<std::int64_t>& ub) {
    const std::int64_t vlo = d.diag_row_lo(i), vhi = d.diag_row_hi(i);
    const std::int64_t ulo = d.diag_row_lo(i + 1), uhi = d.diag_row_hi(i + 1);
    lb.assign(std::max<std::int64_t>(vhi - vlo + 1, 0), 0);
    ub.assign(lb.size(), d.c);
    for (std::int64_t r = vlo; r <= vhi; ++r) {
        const std::size_t t = r - vlo;
        if (r >= ulo && r <= uhi) lb[t] = u[r - ulo];            // row: v_r >= u_r
        if (r - 1 >= ulo && r - 1 <= uhi)                        // col: u_{r-1} >= v_r
            ub[t] = std::min(ub[t], u[r - 1 - ulo]);
    }
}

// Bounds on the diagonal-(i+1) state u compatible with v on diagonal i.
void next_bounds(const BoxDims& d, std::int64_t i, const DiagonalState& v,
                 std::vector<std::int64_t>& lb, std::vector<std::int64_t>& ub) {
    const std::int64_t vlo = d.diag_row_lo(i), vhi = d.diag_row_hi(i);
    const std::int64_t ulo = d.diag_row_lo(i + 1), uhi = d.diag_row_hi(i + 1);
    lb.assign(std::max<std::int64_t>(uhi - ulo + 1, 0), 0);
    ub.assign(lb.size(), d.c);
    for (std::int64_t r = ulo; r <= uhi; ++r) {
        const std::size_t t = r - ulo;
        if (r + 1 >= vlo && r + 1 <= vhi) lb[t] = v[r + 1 - vlo];  // col: u_r >= v_{r+1}
        if (r >= vlo && r <= vhi) ub[t] = std::min(ub[t], v[r - vlo]);  // row: v_r >= u_r
    }
}

// dst[u] = sum over compatible v of src[v], for the boundary d -> d+1
// (diagonal indices i = d - a and i + 1). Transitions are generated on the
// fly from the interlacing bounds.
std::vector<BigInt> forward_step(const DpTables& t, std::int64_t d,
                                 const std::vector<BigInt>& src) {
    const std::int64_t i = d - t.dims.a;
    const auto& prev_states = t.states[d];
    const auto& next_states = t.states[d + 1];
    std::vector<BigInt> dst(next_states.size());
    std::vector<std::int64_t> lb, ub;
    for (std::size_t iu = 0; iu < next_states.size(); ++iu) {
        prev_bounds(t.dims, i, next_states[iu], lb, ub);
        for_each_monotone_tuple(lb, ub, [&](const DiagonalState& v) {
            dst[iu] += src[state_index(prev_states, v)];
        });
    }
    return dst;
}

std::vector<BigInt> backward_step(const DpTables& t, std::int64_t d,
                                  const std::vector<BigInt>& src) {
    const std::int64_t i = d - t.dims.a;
    const auto& prev_states = t.states[d];
    const auto& next_states = t.states[d + 1];
    std::vector<BigInt> dst(prev_states.size());
    std::vector<std::int64_t> lb, ub;
    for (std::size_t iv = 0; iv < prev_states.size(); ++iv) {
        next_bounds(t.dims, i, prev_states[iv], lb, ub);
        for_each_monotone_tuple(lb, ub, [&](const DiagonalState& u) {
            dst[iv] += src[state_index(next_states, u)];
        });
    }
    return dst;
}

}  // namespace

ExactMoments exact_moments_dp(const BoxDims& dims, std::int64_t state_budget) {
    const DpTables t = build_dp_tables(dims, state_budget);
    const std::int64_t D = dims.diag_count() - 1;  // last diagonal slot index

    std::vector<std::vector<BigInt>> F(D + 1), B(D + 1);
    F[0] = {BigInt(1)};
    for (std::int64_t d = 0; d < D; ++d) F[d + 1] = forward_step(t, d, F[d]);
    B[D] = {BigInt(1)};
    for (std::int64_t d = D; d-- > 0;) B[d] = backward_step(t, d, B[d + 1]);

    const BigInt count = F[D][0];
    if (count == 0) throw InternalError("DP produced zero count");

    const std::int64_t m = dims.diag_count();
    std::vector<BigInt> sum_s(m);
    std::vector<std::vector<BigInt>> m2(m, std::vector<BigInt>(m));
    for (std::int64_t d = 0; d <= D; ++d)
        for (std::size_t s = 0; s < t.states[d].size(); ++s)
            sum_s[d] += F[d][s] * B[d][s] * t.sums[d][s];

    for (std::int64_t di = 0; di <= D; ++di) {
        if (t.dims.diag_len(di - dims.a) == 0) continue;  // boundary: S identically 0
        std::vector<BigInt> w(t.states[di].size());
        for (std::size_t s = 0; s < w.size(); ++s) w[s] = F[di][s] * t.sums[di][s];
        for (std::size_t s = 0; s < w.size(); ++s) m2[di][di] += w[s] * t.sums[di][s] * B[di][s];
        for (std::int64_t d = di; d < D; ++d) {
            w = forward_step(t, d, w);
            for (std::size_t s = 0; s < w.size(); ++s)
                m2[di][d + 1] += w[s] * t.sums[d + 1][s] * B[d + 1][s];
        }
    }

    ExactMoments out{dims, count, std::vector<Rational>(m),
                     std::vector<std::vector<Rational>>(m, std::vector<Rational>(m))};
    for (std::int64_t i = 0; i < m; ++i) out.mean[i] = make_rational(sum_s[i], count);
    for (std::int64_t i = 0; i < m; ++i) {
        for (std::int64_t j = i; j < m; ++j) {
            Rational c = make_rational(m2[i][j], count) - out.mean[i] * out.mean[j];
            out.cov[i][j] = c;
            out.cov[j][i] = c;
        }
    }
    return out;
}

QPolynomial sum_distribution(const BoxDims& dims, std::int64_t state_budget) {
    const DpTables t = build_dp_tables(dims, state_budget);
    const std::int64_t D = dims.diag_count() - 1;
    const std::int64_t vol = dims.volume();

    // One histogram over the accumulated total per state of the current
    // diagonal; entering a state appends its own diagonal sum.
    std::vector<std::vector<BigInt>> cur(1, std::vector<BigInt>(vol + 1));
    cur[0][0] = 1;
    std::vector<std::int64_t> lb, ub;
    for (std::int64_t d = 0; d < D; ++d) {
        const auto& prev_states = t.states[d];
        const auto& next_states = t.states[d + 1];
        std::vector<std::vector<BigInt>> nxt(next_states.size(),
                                             std::vector<BigInt>(vol + 1));
        for (std::size_t iu = 0; iu < next_states.size(); ++iu) {
            const std::int64_t su = t.sums[d + 1][iu];
            prev_bounds(t.dims, d - t.dims.a, next_states[iu], lb, ub);
            for_each_monotone_tuple(lb, ub, [&](const DiagonalState& v) {
                const auto& h = cur[state_index(prev_states, v)];
                auto& g = nxt[iu];
                for (std::int64_t s = 0; s + su <= vol; ++s)
                    if (h[s] != 0) g[s + su] += h[s];
            });
        }
        cur = std::move(nxt);
    }
    return QPolynomial(std::move(cur[0]));
}

Rational conditional_mean_check(const BoxDims& dims, std::int64_t i, const BigInt& cap) {
    if (i <= -dims.a || i >= dims.b)
        throw IndexOutOfRange("conditional mean check needs interior diagonal index");
    const Rational kappa = harmonicity_offset(dims, i);

    // Group by the joint contents of diagonals i-1 and i+1 (separator -1
    // keeps keys unambiguous).
    std::map<std::vector<std::int64_t>, std::pair<BigInt, BigInt>> groups;
    for_each_bpp(dims, [&](const PlanePartition& p) {
        std::vector<std::int64_t> key = diag_cells(p, i - 1);
        key.push_back(-1);
        const DiagonalState right = diag_cells(p, i + 1);
        key.insert(key.end(), right.begin(), right.end());
        std::int64_t si = 0;
        for (std::int64_t r = dims.diag_row_lo(i); r <= dims.diag_row_hi(i); ++r)
            si += p.at(r, r + i);
        auto& g = groups[key];
        g.first += 1;
        g.second += static_cast<long>(si);
    }, cap);

    Rational worst(0);
    for (const auto& [key, g] : groups) {
        std::int64_t s_left = 0, s_right = 0;
        bool after_sep = false;
        for (std::int64_t x : key) {
            if (x < 0) {
                after_sep = true;
                continue;
            }
            (after_sep ? s_right : s_left) += x;
        }
        const Rational expected =
            make_rational(s_left + s_right, 2) + kappa;
        Rational diff = make_rational(g.second, g.first) - expected;
        if (diff < 0) diff = -diff;
        if (diff > worst) worst = diff;
    }
    return worst;
}

std::string moments_to_json(const ExactMoments& m) {
    nlohmann::json j;
    j["dims"] = {{"a", m.dims.a}, {"b", m.dims.b}, {"c", m.dims.c}};
    j["count"] = m.count.get_str();
    nlohmann::json means = nlohmann::json::array();
    for (std::int64_t i = m.dims.diag_min(); i <= m.dims.diag_max(); ++i)
        means.push_back({{"i", i}, {"value", rat_str(m.mean_at(i))}});
    j["mean"] = means;
    nlohmann::json cov = nlohmann::json::array();
    for (std::int64_t i = m.dims.diag_min(); i <= m.dims.diag_max(); ++i)
        for (std::int64_t jj = i; jj <= m.dims.diag_max(); ++jj)
            cov.push_back({{"i", i}, {"j", jj}, {"value", rat_str(m.cov_at(i, jj))}});
    j["cov"] = cov;
    return j.dump();
}

}  // namespace bpp
