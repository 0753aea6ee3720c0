#include "nck/linalg.hpp"

#include "nck/error.hpp"

namespace nck {

SparseRow sparse_from_dense(const std::vector<Rat>& v) {
    SparseRow out;
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) out.emplace(i, v[i]);
    return out;
}

namespace {
// row -= factor * other, sparsely
void axpy(SparseRow& row, const Rat& factor, const SparseRow& other) {
    for (const auto& [col, c] : other) {
        auto it = row.find(col);
        if (it == row.end()) {
            row.emplace(col, -factor * c);
        } else {
            it->second -= factor * c;
            if (it->second == 0) row.erase(it);
        }
    }
}
} // namespace

SparseRow RowReducer::reduce(SparseRow row) const {
    while (!row.empty()) {
        size_t lead = row.begin()->first;
        auto it = pivots_.find(lead);
        if (it == pivots_.end()) break;
        // copy: axpy erases the entry this would otherwise reference
        Rat factor = row.begin()->second;
        axpy(row, factor, rows_[it->second]);
    }
    return row;
}

bool RowReducer::add_row(SparseRow row) {
    if (!row.empty() && row.rbegin()->first >= width_)
        throw SchemaError("RowReducer: column index out of range");
    row = reduce(std::move(row));
    if (row.empty()) return false;
    Rat lead = row.begin()->second;
    for (auto& [col, c] : row) c /= lead;
    pivots_.emplace(row.begin()->first, rows_.size());
    rows_.push_back(std::move(row));
    return true;
}

int rank_of(const std::vector<SparseRow>& rows, size_t width) {
    RowReducer red(width);
    for (const auto& r : rows) red.add_row(r);
    return red.rank();
}

} // namespace nck
