#ifndef BPP_BOX_HPP
#define BPP_BOX_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "bpp/errors.hpp"
#include "bpp/rational.hpp"

namespace bpp {

// The a x b x c box: a rows, b columns, entries in [0, c].
struct BoxDims {
    std::int64_t a = 1;
    std::int64_t b = 1;
    std::int64_t c = 0;

    BoxDims() = default;
    BoxDims(std::int64_t a_, std::int64_t b_, std::int64_t c_);

    std::int64_t cells() const { return a * b; }
    std::int64_t volume() const { return a * b * c; }

    // Diagonal index i = j - r ranges over [-a, b]; the boundary diagonals
    // -a and b are empty.
    std::int64_t diag_min() const { return -a; }
    std::int64_t diag_max() const { return b; }
    std::int64_t diag_count() const { return a + b + 1; }
    bool diag_valid(std::int64_t i) const { return i >= -a && i <= b; }

    // Number of cells on diagonal i: n(i) = min(a, b, a+i, b-i).
    std::int64_t diag_len(std::int64_t i) const;
    // Rows r with a cell (r, r+i); empty range when row_lo > row_hi.
    std::int64_t diag_row_lo(std::int64_t i) const;
    std::int64_t diag_row_hi(std::int64_t i) const;

    bool operator==(const BoxDims&) const = default;
};

enum class ViolationKind { OutOfRange, RowMonotonicity, ColMonotonicity };

// One violated cell constraint; coordinates are 1-based, and for
// monotonicity violations name the left/upper cell of the offending pair.
struct Violation {
    ViolationKind kind;
    std::int64_t row;
    std::int64_t col;
    std::int64_t value;
    std::string describe() const;
};

// Checks entries and monotonicity, reporting every violation (not just the
// first). Throws ShapeMismatch if the matrix is not exactly a rows of b.
std::vector<Violation> validate(const std::vector<std::vector<std::int64_t>>& z,
                                const BoxDims& dims);

// An a x b matrix with entries in [0, c], weakly decreasing along rows and
// columns. Values are immutable in normal use; the sampler mutates local
// copies through set() with updates that preserve validity.
struct PlanePartition {
    BoxDims dims;
    std::vector<std::int64_t> z;  // row-major, a*b entries

    PlanePartition() = default;
    explicit PlanePartition(const BoxDims& d) : dims(d), z(d.cells(), 0) {}

    std::int64_t at(std::int64_t r, std::int64_t j) const {  // 1-based
        return z[(r - 1) * dims.b + (j - 1)];
    }
    void set(std::int64_t r, std::int64_t j, std::int64_t v) {
        z[(r - 1) * dims.b + (j - 1)] = v;
    }

    std::vector<std::vector<std::int64_t>> rows() const;
    std::int64_t total() const;

    static PlanePartition zeros(const BoxDims& d);
    static PlanePartition full(const BoxDims& d);
    // Validates; throws ShapeMismatch or ValidationError listing all violations.
    static PlanePartition from_rows(const BoxDims& d,
                                    const std::vector<std::vector<std::int64_t>>& rows);

    bool operator==(const PlanePartition&) const = default;
};

// Checks an already-constructed partition against its own dims.
std::vector<Violation> validate(const PlanePartition& p);

// The vector S_i indexed by i in [-a, b]; boundary entries are zero.
struct DiagonalSums {
    BoxDims dims;
    std::vector<std::int64_t> s;  // offset by +a

    std::int64_t at(std::int64_t i) const { return s[i + dims.a]; }
    std::int64_t total() const;
};

// y[i] = mu(i) - s[i], where mu is the closed-form mean; built by
// centered_sums() in formulas.
struct CenteredSums {
    BoxDims dims;
    std::vector<Rational> y;  // offset by +a

    const Rational& at(std::int64_t i) const { return y[i + dims.a]; }
};

// h[k][i] = number of cells on diagonal i with value >= k, for k in [1, c].
struct ContourSet {
    BoxDims dims;
    std::vector<std::vector<std::int64_t>> h;  // h[k-1], each sized diag_count()

    std::int64_t at(std::int64_t k, std::int64_t i) const {
        return h[k - 1][i + dims.a];
    }
};

DiagonalSums diagonal_sums(const PlanePartition& p);
ContourSet contour_heights(const PlanePartition& p);

// (b, a, c) partition with z'[j][r] = z[r][j]; diagonal sums reflect: s'[i] = s[-i].
PlanePartition transpose(const PlanePartition& p);
// z'[r][j] = c - z[a+1-r][b+1-j]; s'[(b-a)-i] = c*n(i) - s[i].
PlanePartition complement(const PlanePartition& p);

}  // namespace bpp

#endif
