#include "doctest.h"

#include <vector>

#include "nck/linalg.hpp"

using nck::Rat;
using nck::RowReducer;
using nck::SparseRow;

namespace {

SparseRow dense(std::initializer_list<long long> v) {
    std::vector<Rat> r;
    for (long long x : v) r.emplace_back(x);
    return nck::sparse_from_dense(r);
}

} // namespace

TEST_CASE("row reduction rank and span membership") {
    RowReducer rr(4);
    CHECK(rr.add_row(dense({1, 2, 0, 1})));
    CHECK(rr.add_row(dense({0, 1, 1, 0})));
    CHECK(!rr.add_row(dense({2, 5, 1, 2})));  // row1 + 2*row0
    CHECK(rr.rank() == 2);
    CHECK(rr.in_span(dense({1, 0, -2, 1})));
    CHECK(!rr.in_span(dense({0, 0, 0, 1})));
    CHECK(!rr.add_row(SparseRow{}));
    CHECK(rr.add_row(dense({0, 0, 0, 7})));
    CHECK(rr.rank() == 3);

    // stored rows are pivot-normalized with distinct pivots
    for (const auto& [col, idx] : rr.pivots()) {
        const SparseRow& row = rr.rows()[idx];
        CHECK(row.begin()->first == col);
        CHECK(row.begin()->second == Rat(1));
    }
}

TEST_CASE("reduce returns exact remainders") {
    RowReducer rr(3);
    rr.add_row(dense({1, 1, 0}));
    SparseRow rem = rr.reduce(dense({2, 2, 3}));
    CHECK(rem == dense({0, 0, 3}));
    CHECK(rr.reduce(dense({-5, -5, 0})).empty());
}

TEST_CASE("fractional cascades reduce exactly") {
    // regression: reducing a row whose leading coefficient is consumed by the
    // first elimination step must not reuse a reference into the erased entry
    RowReducer rr(3);
    rr.add_row(dense({2, 1, 0}));
    rr.add_row(dense({0, 3, 1}));
    SparseRow row = dense({4, 8, 2});
    SparseRow rem = rr.reduce(row);
    // 4*(1,1/2,0) leaves (0,6,2); 6*(0,1,1/3) leaves (0,0,0)
    CHECK(rem.empty());
    CHECK(!rr.add_row(dense({4, 8, 2})));
    CHECK(rr.rank() == 2);

    std::vector<SparseRow> rows = {dense({1, 2, 3}), dense({2, 4, 6}), dense({0, 1, 1})};
    CHECK(nck::rank_of(rows, 3) == 2);
    CHECK(nck::rank_of({}, 3) == 0);
}

TEST_CASE("intersection dimension via trailing block pivots") {
    // span S of rows in a (U | V) column split with V columns last: a pivot
    // inside the V block certifies a row of S lying entirely in V, and those
    // rows are a basis of S ∩ V.
    // U = columns 0..1, V = columns 2..3.
    RowReducer rr(4);
    rr.add_row(dense({1, 0, 1, 0}));   // u + v1
    rr.add_row(dense({1, 0, 0, 1}));   // u + v2
    rr.add_row(dense({0, 1, 0, 0}));   // u only
    // S has rank 3; S ∩ V is spanned by v1 - v2
    int inside = 0;
    for (const auto& [col, idx] : rr.pivots())
        if (col >= 2) ++inside;
    CHECK(rr.rank() == 3);
    CHECK(inside == 1);
    CHECK(rr.in_span(dense({0, 0, 1, -1})));
    CHECK(!rr.in_span(dense({0, 0, 1, 0})));
}
