#pragma once

#include "errors.hpp"
#include "rational.hpp"

#include <cstddef>
#include <vector>

namespace fermatlat {

using RationalVector = std::vector<Rational>;

/// Dense matrix of rationals. Row-major; rows are swappable in O(1)
/// so the solver's partial pivoting stays cheap.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return rows_[i][j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return rows_[i][j]; }

    bool is_symmetric() const;

    RationalVector multiply(const RationalVector& v) const;

private:
    std::size_t cols_;
    std::vector<RationalVector> rows_;
};

/// Raised when the system M x = b has no solution. Carries the fully
/// reduced inconsistent row (all-zero coefficients, nonzero right-hand
/// side) as the certificate, plus the index of the offending input row.
struct InconsistentSystem : Error {
    InconsistentSystem(std::size_t original_row, RationalVector certificate_row, Rational rhs);

    std::size_t original_row;
    RationalVector certificate_coeffs; // all zero in the reduced system
    Rational certificate_rhs;          // nonzero
};

struct AffineSolution {
    RationalVector particular;
    // Spans {v : M v = 0}; each vector scaled so its first nonzero entry is 1.
    std::vector<RationalVector> kernel_basis;
};

/// Solves M x = b exactly by Gaussian elimination with partial pivoting
/// on |numerator|*denominator. Free variables are set to zero in the
/// particular solution.
AffineSolution solve_affine(const RationalMatrix& m, const RationalVector& b);

/// Same solver on pre-assembled augmented rows (cols coefficients plus
/// the right-hand side in the last slot); consumes the rows, sparing a
/// second materialization of large systems.
AffineSolution solve_affine_rows(std::vector<RationalVector>&& augmented, std::size_t cols);

} // namespace fermatlat
