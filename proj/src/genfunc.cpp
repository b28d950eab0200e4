#include "bpp/genfunc.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>

#include "bpp/enumerate.hpp"
#include "bpp/errors.hpp"
#include "bpp/formulas.hpp"

namespace bpp {

QPolynomial q_integer(std::int64_t n) {
    if (n < 1) throw DomainError("q_integer needs n >= 1");
    return QPolynomial(std::vector<BigInt>(n, BigInt(1)));
}

QPolynomial q_macmahon(const BoxDims& dims, std::int64_t degree_cap) {
    if (dims.volume() > degree_cap)
        throw CapExceeded("q-MacMahon degree " + std::to_string(dims.volume()) +
                          " exceeds cap " + std::to_string(degree_cap));

    std::vector<std::int64_t> numerators, denominators;
    for (std::int64_t i = 1; i <= dims.a; ++i) {
        for (std::int64_t j = 1; j <= dims.b; ++j) {
            for (std::int64_t k = 1; k <= dims.c; ++k) {
                numerators.push_back(i + j + k - 1);
                denominators.push_back(i + j + k - 2);
            }
        }
    }
    std::sort(numerators.begin(), numerators.end());
    // Largest denominator first keeps intermediate degrees low.
    std::sort(denominators.begin(), denominators.end(), std::greater<>());

    QPolynomial p = QPolynomial::one();
    for (std::int64_t n : numerators) p = p.times_q_integer(n);
    for (std::int64_t n : denominators) p = p.divided_by_q_integer(n);

    if (p.degree() != dims.volume())
        throw InternalError("q-MacMahon degree mismatch: got " + std::to_string(p.degree()));
    return p;
}

QMoments moments_from_qpoly(const QPolynomial& poly) {
    if (poly.is_zero()) throw DomainError("moments of the zero polynomial");
    BigInt count(0), m1(0), m2(0);
    const auto& c = poly.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] < 0) throw DomainError("negative coefficient in histogram polynomial");
        count += c[k];
        m1 += c[k] * static_cast<long>(k);
        m2 += c[k] * static_cast<long>(k) * static_cast<long>(k);
    }
    if (count == 0) throw DomainError("histogram polynomial sums to zero");
    const Rational mean = make_rational(m1, count);
    return {count, mean, make_rational(m2, count) - mean * mean};
}

BigInt MultiMonomialTable::at(const std::vector<std::int64_t>& exponents) const {
    const auto it = coeff.find(exponents);
    return it == coeff.end() ? BigInt(0) : it->second;
}

MultiMonomialTable stanley_coefficients(std::int64_t a, std::int64_t b, std::int64_t max_degree,
                                        std::int64_t entry_budget) {
    if (a < 1 || b < 1) throw DomainError("stanley_coefficients needs a,b >= 1");
    if (max_degree < 0) throw DomainError("stanley_coefficients needs max_degree >= 0");
    const std::int64_t nvars = a + b - 1;  // indices -a+1 .. b-1

    MultiMonomialTable table;
    table.a = a;
    table.b = b;
    table.max_degree = max_degree;
    table.coeff[std::vector<std::int64_t>(nvars, 0)] = 1;

    // One factor 1/(1 - x_i...x_j) per pair i <= 0 <= j; fold in its whole
    // geometric series before moving on.
    for (std::int64_t i = -a + 1; i <= 0; ++i) {
        for (std::int64_t j = 0; j <= b - 1; ++j) {
            const std::int64_t step_deg = j - i + 1;
            const auto before = table.coeff;  // snapshot; the series adds shifted copies
            for (const auto& [expo, cnt] : before) {
                std::int64_t deg = 0;
                for (auto e : expo) deg += e;
                std::vector<std::int64_t> shifted = expo;
                for (std::int64_t k = 1; deg + k * step_deg <= max_degree; ++k) {
                    for (std::int64_t t = i; t <= j; ++t) shifted[t + a - 1] += 1;
                    table.coeff[shifted] += cnt;
                    if (static_cast<std::int64_t>(table.coeff.size()) > entry_budget)
                        throw BudgetExceeded("stanley expansion exceeds entry budget");
                }
            }
        }
    }
    return table;
}

bool stanley_check(std::int64_t a, std::int64_t b, std::int64_t max_degree,
                   const BigInt& enumeration_cap) {
    const MultiMonomialTable table = stanley_coefficients(a, b, max_degree);
    const BoxDims dims(a, b, max_degree);

    // Any partition with an entry above max_degree has total above it too,
    // so the c = max_degree box captures every contributing partition.
    std::map<std::vector<std::int64_t>, BigInt> observed;
    for_each_bpp(dims, [&](const PlanePartition& p) {
        const DiagonalSums s = diagonal_sums(p);
        if (s.total() > max_degree) return;
        std::vector<std::int64_t> key;
        key.reserve(a + b - 1);
        for (std::int64_t i = -a + 1; i <= b - 1; ++i) key.push_back(s.at(i));
        observed[key] += 1;
    }, enumeration_cap);

    for (const auto& [key, cnt] : observed)
        if (table.at(key) != cnt) return false;
    for (const auto& [key, cnt] : table.coeff)
        if (cnt != 0 && observed.find(key) == observed.end() && cnt != BigInt(0)) {
            // constant term corresponds to the empty partition, always observed
            auto it = observed.find(key);
            if (it == observed.end() || it->second != cnt) return false;
        }
    return true;
}

std::string stanley_to_json(const MultiMonomialTable& table) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [expo, cnt] : table.coeff)
        arr.push_back({{"exponents", expo}, {"count", cnt.get_str()}});
    return arr.dump();
}

std::string qpoly_to_json(const QPolynomial& poly) {
    return nlohmann::json(poly.coeff_strings()).dump();
}

}  // namespace bpp
