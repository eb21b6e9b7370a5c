#include "g2skein/linalg.hpp"

#include <algorithm>

#include "g2skein/errors.hpp"

namespace g2skein {

bool RowReducer::add_row(Vector row)
{
    if (row.size() != ncols_)
        throw IndexOutOfRange("row length " + std::to_string(row.size()) + " != " + std::to_string(ncols_));
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Scalar c = row[pivots_[r]];
        if (c.is_zero())
            continue;
        for (std::size_t k = pivots_[r]; k < ncols_; ++k)
            if (!rows_[r][k].is_zero())
                row[k] -= c * rows_[r][k];
    }
    auto lead = std::find_if(row.begin(), row.end(), [](const Scalar& s) { return !s.is_zero(); });
    if (lead == row.end())
        return false;
    const std::size_t p = static_cast<std::size_t>(lead - row.begin());
    const Scalar inv = row[p].inv();
    for (std::size_t k = p; k < ncols_; ++k)
        if (!row[k].is_zero())
            row[k] *= inv;
    for (auto& other : rows_) {
        const Scalar c = other[p];
        if (c.is_zero())
            continue;
        for (std::size_t k = p; k < ncols_; ++k)
            if (!row[k].is_zero())
                other[k] -= c * row[k];
    }
    auto at = std::upper_bound(pivots_.begin(), pivots_.end(), p);
    const auto idx = at - pivots_.begin();
    pivots_.insert(at, p);
    rows_.insert(rows_.begin() + idx, std::move(row));
    return true;
}

Matrix RowReducer::nullspace() const
{
    Matrix basis;
    std::size_t next_pivot = 0;
    for (std::size_t col = 0; col < ncols_; ++col) {
        if (next_pivot < pivots_.size() && pivots_[next_pivot] == col) {
            ++next_pivot;
            continue;
        }
        Vector v(ncols_);
        v[col] = Scalar(1);
        for (std::size_t r = 0; r < rows_.size(); ++r)
            v[pivots_[r]] = -rows_[r][col];
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix rref(const Matrix& rows, std::size_t ncols)
{
    RowReducer red(ncols);
    for (const auto& r : rows)
        red.add_row(r);
    return red.rref();
}

Matrix nullspace(const Matrix& rows, std::size_t ncols)
{
    RowReducer red(ncols);
    for (const auto& r : rows)
        red.add_row(r);
    return red.nullspace();
}

bool same_span(const Matrix& a, const Matrix& b, std::size_t ncols)
{
    return rref(a, ncols) == rref(b, ncols);
}

} // namespace g2skein
