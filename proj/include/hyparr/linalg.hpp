#pragma once

#include "hyparr/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace hyparr {

template <typename F>
using DenseMatrix = std::vector<std::vector<F>>;

/// Incremental reduced row echelon basis over an exact field F.
/// F must provide is_zero(F) and field_inverse(F).
template <typename F>
class RowEchelon {
public:
    explicit RowEchelon(std::size_t width) : width_(width) {}

    std::size_t width() const { return width_; }
    std::size_t rank() const { return rows_.size(); }

    /// Reduces v against the basis; returns the residue.
    std::vector<F> reduce(std::vector<F> v) const
    {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const F& c = v[pivots_[r]];
            if (is_zero(c)) continue;
            F factor = c;
            for (std::size_t j = pivots_[r]; j < width_; ++j)
                if (!is_zero(rows_[r][j])) v[j] -= factor * rows_[r][j];
        }
        return v;
    }

    bool in_span(const std::vector<F>& v) const
    {
        auto res = reduce(v);
        return std::all_of(res.begin(), res.end(), [](const F& x) { return is_zero(x); });
    }

    /// Adds v to the basis; returns false if v was already in the span.
    bool insert(std::vector<F> v)
    {
        v = reduce(std::move(v));
        std::size_t p = 0;
        while (p < width_ && is_zero(v[p])) ++p;
        if (p == width_) return false;
        F inv = field_inverse(v[p]);
        for (std::size_t j = p; j < width_; ++j) v[j] *= inv;
        for (auto& row : rows_) {
            if (is_zero(row[p])) continue;
            F factor = row[p];
            for (std::size_t j = p; j < width_; ++j)
                if (!is_zero(v[j])) row[j] -= factor * v[j];
        }
        auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
        pivots_.insert(pivots_.begin() + pos, p);
        rows_.insert(rows_.begin() + pos, std::move(v));
        return true;
    }

private:
    std::size_t width_;
    std::vector<std::vector<F>> rows_;
    std::vector<std::size_t> pivots_;
};

template <typename F>
std::size_t matrix_rank(const DenseMatrix<F>& rows, std::size_t width)
{
    RowEchelon<F> ech(width);
    for (const auto& r : rows) ech.insert(r);
    return ech.rank();
}

template <typename F>
std::size_t matrix_rank(const DenseMatrix<F>& rows)
{
    if (rows.empty()) return 0;
    return matrix_rank(rows, rows.front().size());
}

/// Basis of {c : sum_i c_i * rows[i] = 0}, i.e. the left kernel.
template <typename F>
DenseMatrix<F> left_kernel(const DenseMatrix<F>& rows, std::size_t width)
{
    const std::size_t n = rows.size();
    // augment each row with a unit vector tracking the combination
    DenseMatrix<F> aug(n, std::vector<F>(width + n, F(0)));
    for (std::size_t i = 0; i < n; ++i) {
        std::copy(rows[i].begin(), rows[i].end(), aug[i].begin());
        aug[i][width + i] = F(1);
    }
    std::size_t lead = 0;
    for (std::size_t col = 0; col < width && lead < n; ++col) {
        std::size_t piv = lead;
        while (piv < n && is_zero(aug[piv][col])) ++piv;
        if (piv == n) continue;
        std::swap(aug[piv], aug[lead]);
        F inv = field_inverse(aug[lead][col]);
        for (auto& x : aug[lead]) x *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == lead || is_zero(aug[i][col])) continue;
            F factor = aug[i][col];
            for (std::size_t j = col; j < width + n; ++j) aug[i][j] -= factor * aug[lead][j];
        }
        ++lead;
    }
    DenseMatrix<F> kernel;
    for (std::size_t i = lead; i < n; ++i)
        kernel.emplace_back(aug[i].begin() + static_cast<std::ptrdiff_t>(width), aug[i].end());
    return kernel;
}

/// Exact integer determinant (fraction-free Bareiss elimination).
inline BigInt integer_determinant(DenseMatrix<BigInt> m)
{
    const std::size_t n = m.size();
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(m[k][k]) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && sgn(m[swap_row][k]) == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = t;
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

/// Rank of a sparse rational matrix given row by row. Rows are reduced
/// against pivot rows keyed by leading column; fill-in stays modest for
/// the +-1 relation matrices of exterior algebras.
class SparseRankAccumulator {
public:
    using Row = std::vector<std::pair<std::size_t, Rational>>;  // sorted by column

    std::size_t rank() const { return pivots_.size(); }

    bool insert(Row row)
    {
        row.erase(std::remove_if(row.begin(), row.end(), [](const auto& e) { return is_zero(e.second); }),
                  row.end());
        while (!row.empty()) {
            auto it = pivots_.find(row.front().first);
            if (it == pivots_.end()) break;
            row = axpy(row, row.front().second, it->second);
        }
        if (row.empty()) return false;
        Rational inv = field_inverse(row.front().second);
        for (auto& e : row) e.second *= inv;
        std::size_t col = row.front().first;
        pivots_.emplace(col, std::move(row));
        return true;
    }

private:
    // row - factor * pivot; both sorted, pivot has leading coefficient 1
    static Row axpy(const Row& row, const Rational& factor, const Row& pivot)
    {
        Row out;
        out.reserve(row.size() + pivot.size());
        std::size_t i = 0, j = 0;
        while (i < row.size() || j < pivot.size()) {
            if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
                out.push_back(row[i++]);
            } else if (i == row.size() || pivot[j].first < row[i].first) {
                out.emplace_back(pivot[j].first, -factor * pivot[j].second);
                ++j;
            } else {
                Rational v = row[i].second - factor * pivot[j].second;
                if (!is_zero(v)) out.emplace_back(row[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        return out;
    }

    std::map<std::size_t, Row> pivots_;
};

}  // namespace hyparr
