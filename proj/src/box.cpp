#include "bpp/box.hpp"

#include <algorithm>
#include <sstream>

namespace bpp {

BoxDims::BoxDims(std::int64_t a_, std::int64_t b_, std::int64_t c_) : a(a_), b(b_), c(c_) {
    if (a < 1 || b < 1 || c < 0) {
        std::ostringstream os;
        os << "invalid box dims (" << a << "," << b << "," << c << "): need a>=1, b>=1, c>=0";
        throw DomainError(os.str());
    }
    // Keep cell counts and total sums inside int64.
    const auto cells = static_cast<__int128>(a) * b;
    if (cells > (std::int64_t{1} << 31)) throw DomainError("box has too many cells");
    if (static_cast<__int128>(cells) * c > (std::int64_t{1} << 62))
        throw DomainError("box volume a*b*c too large");
}

std::int64_t BoxDims::diag_len(std::int64_t i) const {
    const std::int64_t n = std::min(std::min(a, b), std::min(a + i, b - i));
    return std::max<std::int64_t>(n, 0);
}

std::int64_t BoxDims::diag_row_lo(std::int64_t i) const { return std::max<std::int64_t>(1, 1 - i); }

std::int64_t BoxDims::diag_row_hi(std::int64_t i) const { return std::min(a, b - i); }

std::string Violation::describe() const {
    std::ostringstream os;
    switch (kind) {
        case ViolationKind::OutOfRange:
            os << "entry out of range at (" << row << "," << col << "): " << value;
            break;
        case ViolationKind::RowMonotonicity:
            os << "row increase at (" << row << "," << col << "): " << value;
            break;
        case ViolationKind::ColMonotonicity:
            os << "column increase at (" << row << "," << col << "): " << value;
            break;
    }
    return os.str();
}

std::vector<Violation> validate(const std::vector<std::vector<std::int64_t>>& z,
                                const BoxDims& dims) {
    if (static_cast<std::int64_t>(z.size()) != dims.a)
        throw ShapeMismatch("expected " + std::to_string(dims.a) + " rows, got " +
                            std::to_string(z.size()));
    for (const auto& row : z)
        if (static_cast<std::int64_t>(row.size()) != dims.b)
            throw ShapeMismatch("expected " + std::to_string(dims.b) + " columns, got " +
                                std::to_string(row.size()));

    std::vector<Violation> out;
    for (std::int64_t r = 0; r < dims.a; ++r) {
        for (std::int64_t j = 0; j < dims.b; ++j) {
            const std::int64_t v = z[r][j];
            if (v < 0 || v > dims.c)
                out.push_back({ViolationKind::OutOfRange, r + 1, j + 1, v});
            if (j + 1 < dims.b && v < z[r][j + 1])
                out.push_back({ViolationKind::RowMonotonicity, r + 1, j + 1, v});
            if (r + 1 < dims.a && v < z[r + 1][j])
                out.push_back({ViolationKind::ColMonotonicity, r + 1, j + 1, v});
        }
    }
    return out;
}

std::vector<Violation> validate(const PlanePartition& p) { return validate(p.rows(), p.dims); }

std::vector<std::vector<std::int64_t>> PlanePartition::rows() const {
    std::vector<std::vector<std::int64_t>> out(dims.a, std::vector<std::int64_t>(dims.b));
    for (std::int64_t r = 0; r < dims.a; ++r)
        for (std::int64_t j = 0; j < dims.b; ++j) out[r][j] = z[r * dims.b + j];
    return out;
}

std::int64_t PlanePartition::total() const {
    std::int64_t t = 0;
    for (std::int64_t v : z) t += v;
    return t;
}

PlanePartition PlanePartition::zeros(const BoxDims& d) { return PlanePartition(d); }

PlanePartition PlanePartition::full(const BoxDims& d) {
    PlanePartition p(d);
    std::fill(p.z.begin(), p.z.end(), d.c);
    return p;
}

PlanePartition PlanePartition::from_rows(const BoxDims& d,
                                         const std::vector<std::vector<std::int64_t>>& rows) {
    const auto violations = validate(rows, d);
    if (!violations.empty()) {
        std::ostringstream os;
        os << violations.size() << " constraint violation(s):";
        for (const auto& v : violations) os << "\n  " << v.describe();
        throw ValidationError(os.str());
    }
    PlanePartition p(d);
    for (std::int64_t r = 0; r < d.a; ++r)
        for (std::int64_t j = 0; j < d.b; ++j) p.z[r * d.b + j] = rows[r][j];
    return p;
}

std::int64_t DiagonalSums::total() const {
    std::int64_t t = 0;
    for (std::int64_t v : s) t += v;
    return t;
}

DiagonalSums diagonal_sums(const PlanePartition& p) {
    const BoxDims& d = p.dims;
    DiagonalSums out{d, std::vector<std::int64_t>(d.diag_count(), 0)};
    for (std::int64_t r = 1; r <= d.a; ++r)
        for (std::int64_t j = 1; j <= d.b; ++j) out.s[(j - r) + d.a] += p.at(r, j);
    return out;
}

ContourSet contour_heights(const PlanePartition& p) {
    const BoxDims& d = p.dims;
    ContourSet out{d, std::vector<std::vector<std::int64_t>>(
                          d.c, std::vector<std::int64_t>(d.diag_count(), 0))};
    for (std::int64_t r = 1; r <= d.a; ++r) {
        for (std::int64_t j = 1; j <= d.b; ++j) {
            const std::int64_t v = p.at(r, j);
            for (std::int64_t k = 1; k <= v; ++k) out.h[k - 1][(j - r) + d.a] += 1;
        }
    }
    return out;
}

PlanePartition transpose(const PlanePartition& p) {
    const BoxDims t(p.dims.b, p.dims.a, p.dims.c);
    PlanePartition out(t);
    for (std::int64_t r = 1; r <= p.dims.a; ++r)
        for (std::int64_t j = 1; j <= p.dims.b; ++j) out.set(j, r, p.at(r, j));
    return out;
}

PlanePartition complement(const PlanePartition& p) {
    const BoxDims& d = p.dims;
    PlanePartition out(d);
    for (std::int64_t r = 1; r <= d.a; ++r)
        for (std::int64_t j = 1; j <= d.b; ++j)
            out.set(r, j, d.c - p.at(d.a + 1 - r, d.b + 1 - j));
    return out;
}

}  // namespace bpp
