#include "linalg.hpp"

#include <algorithm>
#include <utility>

namespace fermatlat {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : cols_(cols), rows_(rows, RationalVector(cols)) {}

bool RationalMatrix::is_symmetric() const {
    if (rows() != cols())
        return false;
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (rows_[i][j] != rows_[j][i])
                return false;
    return true;
}

RationalVector RationalMatrix::multiply(const RationalVector& v) const {
    if (v.size() != cols_)
        throw DimensionMismatch("matrix-vector size mismatch");
    RationalVector out(rows());
    for (std::size_t i = 0; i < rows(); ++i) {
        Rational acc;
        for (std::size_t j = 0; j < cols_; ++j)
            if (!rows_[i][j].is_zero() && !v[j].is_zero())
                acc += rows_[i][j] * v[j];
        out[i] = acc;
    }
    return out;
}

InconsistentSystem::InconsistentSystem(std::size_t row, RationalVector certificate, Rational rhs)
    : Error("inconsistent linear system: input row " + std::to_string(row) +
            " reduces to 0 = " + rhs.str()),
      original_row(row), certificate_coeffs(std::move(certificate)), certificate_rhs(std::move(rhs)) {}

AffineSolution solve_affine(const RationalMatrix& m, const RationalVector& b) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    if (b.size() != rows)
        throw DimensionMismatch("right-hand side size does not match row count");

    // Augmented working copy; last column is the right-hand side.
    std::vector<RationalVector> a(rows, RationalVector(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j)
            a[i][j] = m.at(i, j);
        a[i][cols] = b[i];
    }
    return solve_affine_rows(std::move(a), cols);
}

AffineSolution solve_affine_rows(std::vector<RationalVector>&& augmented, std::size_t cols) {
    std::vector<RationalVector> a = std::move(augmented);
    const std::size_t rows = a.size();
    for (const auto& row : a)
        if (row.size() != cols + 1)
            throw DimensionMismatch("augmented row has wrong width");
    std::vector<std::size_t> origin(rows);
    for (std::size_t i = 0; i < rows; ++i)
        origin[i] = i;

    // Eliminate sparse columns first; keeps fill-in negligible on the
    // tree-shaped intersection systems without changing the solution.
    std::vector<std::size_t> col_order(cols);
    for (std::size_t c = 0; c < cols; ++c)
        col_order[c] = c;
    {
        std::vector<std::size_t> nnz(cols, 0);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (!a[i][j].is_zero())
                    ++nnz[j];
        std::stable_sort(col_order.begin(), col_order.end(),
                         [&](std::size_t x, std::size_t y) { return nnz[x] < nnz[y]; });
    }

    std::vector<std::pair<std::size_t, std::size_t>> pivots; // (row, col)
    std::size_t pr = 0;
    for (std::size_t oc = 0; oc < cols && pr < rows; ++oc) {
        const std::size_t c = col_order[oc];
        std::size_t sel = rows;
        mpz_class best;
        for (std::size_t r = pr; r < rows; ++r) {
            if (a[r][c].is_zero())
                continue;
            mpz_class mag = a[r][c].pivot_magnitude();
            if (sel == rows || mag > best) {
                sel = r;
                best = mag;
            }
        }
        if (sel == rows)
            continue;
        std::swap(a[pr], a[sel]);
        std::swap(origin[pr], origin[sel]);
        for (std::size_t r = pr + 1; r < rows; ++r) {
            if (a[r][c].is_zero())
                continue;
            const Rational f = a[r][c] / a[pr][c];
            for (std::size_t j = 0; j <= cols; ++j)
                if (!a[pr][j].is_zero())
                    a[r][j] -= f * a[pr][j];
            a[r][c] = Rational();
        }
        pivots.emplace_back(pr, c);
        ++pr;
    }

    for (std::size_t r = pr; r < rows; ++r)
        if (!a[r][cols].is_zero())
            throw InconsistentSystem(origin[r], RationalVector(a[r].begin(), a[r].begin() + cols),
                                     a[r][cols]);

    std::vector<bool> is_pivot_col(cols, false);
    for (const auto& [r, c] : pivots)
        is_pivot_col[c] = true;

    // Back substitution with free variables fixed at `free_value` on column
    // `free_col` (and zero on other free columns).
    // Later-eliminated and free columns already hold known values when a
    // pivot is visited in reverse; earlier-eliminated entries are zero.
    const auto back_substitute = [&](std::size_t free_col, const Rational& free_value) {
        RationalVector x(cols);
        if (free_col < cols)
            x[free_col] = free_value;
        for (std::size_t k = pivots.size(); k-- > 0;) {
            const auto [r, c] = pivots[k];
            Rational acc = a[r][cols];
            for (std::size_t j = 0; j < cols; ++j)
                if (j != c && !a[r][j].is_zero() && !x[j].is_zero())
                    acc -= a[r][j] * x[j];
            x[c] = acc / a[r][c];
        }
        return x;
    };

    AffineSolution out;
    out.particular = back_substitute(cols, Rational());

    for (std::size_t c = 0; c < cols; ++c) {
        if (is_pivot_col[c])
            continue;
        // Kernel vector from the homogeneous system: zero the rhs by
        // solving for the difference against the particular solution.
        RationalVector v = back_substitute(c, Rational(1));
        for (std::size_t j = 0; j < cols; ++j)
            v[j] -= out.particular[j];
        Rational lead;
        for (const auto& val : v)
            if (!val.is_zero()) {
                lead = val;
                break;
            }
        for (auto& val : v)
            val /= lead;
        out.kernel_basis.push_back(std::move(v));
    }
    return out;
}

} // namespace fermatlat
