#pragma once

#include <map>
#include <vector>

#include "nck/rational.hpp"

namespace nck {

// column index -> coefficient, no zeros stored
using SparseRow = std::map<size_t, Rat>;

SparseRow sparse_from_dense(const std::vector<Rat>& v);

// Incremental exact Gaussian elimination over Q with positional pivoting
// (pivot = leading column). Stored rows are normalized to pivot 1 and have
// pairwise distinct pivots, so rank and span membership are exact.
class RowReducer {
public:
    explicit RowReducer(size_t width) : width_(width) {}

    // Reduce against the stored rows and keep the remainder if nonzero.
    // Returns true when the row enlarged the span.
    bool add_row(SparseRow row);

    bool in_span(const SparseRow& row) const { return reduce(row).empty(); }
    SparseRow reduce(SparseRow row) const;

    int rank() const { return static_cast<int>(rows_.size()); }
    size_t width() const { return width_; }
    // pivot column -> index into stored rows
    const std::map<size_t, size_t>& pivots() const { return pivots_; }
    const std::vector<SparseRow>& rows() const { return rows_; }

private:
    size_t width_;
    std::vector<SparseRow> rows_;
    std::map<size_t, size_t> pivots_;
};

int rank_of(const std::vector<SparseRow>& rows, size_t width);

} // namespace nck
