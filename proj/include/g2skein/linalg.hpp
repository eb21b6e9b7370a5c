#pragma once

// Exact Gaussian elimination over Scalar.

#include <cstddef>
#include <vector>

#include "g2skein/qscalar.hpp"

namespace g2skein {

using Vector = std::vector<Scalar>;
using Matrix = std::vector<Vector>;

/// Keeps the rows added so far in reduced row-echelon form.
class RowReducer {
public:
    explicit RowReducer(std::size_t ncols) : ncols_(ncols) {}

    /// Returns true if the row increased the rank.
    bool add_row(Vector row);

    std::size_t ncols() const { return ncols_; }
    std::size_t rank() const { return rows_.size(); }
    /// Rows sorted by pivot column, each pivot 1 and alone in its column.
    const Matrix& rref() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    /// Basis of {v : row . v = 0 for every row}, one vector per free column.
    Matrix nullspace() const;

private:
    std::size_t ncols_;
    Matrix rows_;
    std::vector<std::size_t> pivots_;
};

Matrix rref(const Matrix& rows, std::size_t ncols);
Matrix nullspace(const Matrix& rows, std::size_t ncols);
/// Equal row spaces, decided by comparing reduced echelon forms.
bool same_span(const Matrix& a, const Matrix& b, std::size_t ncols);

} // namespace g2skein
