#include "doctest.h"

#include <algorithm>
#include <vector>

#include "nck/error.hpp"
#include "nck/partition.hpp"

using nck::conjugate;
using nck::Int;
using nck::Partition;
using nck::partitions_of;

namespace {

// Independent Littlewood–Richardson oracle: count LR skew tableaux of shape
// nu/lambda with content mu.  Cells are filled in reading order (rows top to
// bottom, each row right to left) so that at every step the reverse reading
// word built so far is a prefix of the full one.  Constraints per cell:
// weakly increasing along rows, strictly increasing down columns, content
// bounded by mu, and the lattice condition used[e] <= used[e-1].
struct LrOracle {
    const Partition& lam;
    const Partition& mu;
    const Partition& nu;
    std::vector<std::vector<int>> fill;
    std::vector<int> used;
    long long count = 0;

    LrOracle(const Partition& l, const Partition& m, const Partition& n)
        : lam(l), mu(m), nu(n) {
        fill.resize(static_cast<size_t>(nu.length()));
        for (int r = 0; r < nu.length(); ++r)
            fill[static_cast<size_t>(r)].assign(static_cast<size_t>(nu.part(r)), 0);
        used.assign(static_cast<size_t>(mu.length()) + 1, 0);
    }

    void place(int row, int col) {
        if (row == nu.length()) {
            ++count;
            return;
        }
        if (col < lam.part(row)) {
            place(row + 1, nu.part(row + 1) - 1);
            return;
        }
        int right = (col + 1 < nu.part(row)) ? fill[static_cast<size_t>(row)][static_cast<size_t>(col + 1)]
                                             : mu.length();
        bool above_in_shape = row > 0 && col >= lam.part(row - 1);
        int above = above_in_shape ? fill[static_cast<size_t>(row - 1)][static_cast<size_t>(col)] : 0;
        for (int e = above + 1; e <= right; ++e) {
            if (used[static_cast<size_t>(e)] >= mu.part(e - 1)) continue;
            if (e > 1 && used[static_cast<size_t>(e)] >= used[static_cast<size_t>(e - 1)]) continue;
            fill[static_cast<size_t>(row)][static_cast<size_t>(col)] = e;
            ++used[static_cast<size_t>(e)];
            place(row, col - 1);
            --used[static_cast<size_t>(e)];
        }
    }

    long long run() {
        if (nu.length() == 0) return (lam.empty() && mu.empty()) ? 1 : 0;
        place(0, nu.part(0) - 1);
        return count;
    }
};

long long lr_tableaux(const Partition& lam, const Partition& mu, const Partition& nu) {
    for (int r = 0; r < lam.length(); ++r)
        if (lam.part(r) > nu.part(r)) return 0;
    return LrOracle(lam, mu, nu).run();
}

} // namespace

TEST_CASE("partition basics") {
    Partition p({4, 2, 1});
    CHECK(p.weight() == 7);
    CHECK(p.length() == 3);
    CHECK(p.part(0) == 4);
    CHECK(p.part(5) == 0);
    CHECK(conjugate(p) == Partition({3, 2, 1, 1}));
    CHECK(conjugate(conjugate(p)) == p);
    CHECK(conjugate(Partition{}) == Partition{});
    CHECK(nck::to_string(p) == "(4,2,1)");

    CHECK_THROWS_AS(Partition({2, 3}), nck::SchemaError);
    CHECK_THROWS_AS(Partition({1, 0}), nck::SchemaError);
    CHECK_THROWS_AS(Partition({-1}), nck::SchemaError);
}

TEST_CASE("partitions_of counts and order") {
    const int expect[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
    for (int n = 0; n <= 8; ++n) {
        auto ps = partitions_of(n);
        CHECK(ps.size() == static_cast<size_t>(expect[n]));
        for (const auto& p : ps) CHECK(p.weight() == n);
        // first part descending, ties broken recursively the same way
        for (size_t i = 0; i + 1 < ps.size(); ++i)
            CHECK(ps[i].parts > ps[i + 1].parts);
    }
    CHECK(partitions_of(3) == std::vector<Partition>{
                                  Partition({3}), Partition({2, 1}), Partition({1, 1, 1})});
}

TEST_CASE("lr_coeff matches the tableau oracle up to weight 6") {
    for (int w = 0; w <= 6; ++w) {
        for (const auto& nu : partitions_of(w)) {
            for (int a = 0; a <= w; ++a) {
                for (const auto& lam : partitions_of(a)) {
                    for (const auto& mu : partitions_of(w - a)) {
                        Int got = nck::lr_coeff(lam, mu, nu);
                        long long want = lr_tableaux(lam, mu, nu);
                        CHECK(got == Int(want));
                    }
                }
            }
        }
    }
}

TEST_CASE("lr_coeff symmetry and conjugation covariance") {
    for (int w = 2; w <= 6; ++w) {
        for (const auto& nu : partitions_of(w)) {
            for (int a = 1; a < w; ++a) {
                for (const auto& lam : partitions_of(a)) {
                    for (const auto& mu : partitions_of(w - a)) {
                        Int c = nck::lr_coeff(lam, mu, nu);
                        CHECK(c == nck::lr_coeff(mu, lam, nu));
                        CHECK(c == nck::lr_coeff(conjugate(lam), conjugate(mu), conjugate(nu)));
                    }
                }
            }
        }
    }
}

TEST_CASE("lr_coeff weight mismatch is zero") {
    CHECK(nck::lr_coeff(Partition({2}), Partition({1}), Partition({2})) == 0);
    CHECK(nck::lr_coeff(Partition({1}), Partition({1}), Partition({3})) == 0);
}

TEST_CASE("lr_expand Pieri rules") {
    // s_lam * s_(k): add a horizontal strip of size k, all multiplicities 1
    Partition lam({3, 1});
    auto prod = nck::lr_expand(lam, Partition({2}));
    std::map<Partition, Int> want = {
        {Partition({5, 1}), Int(1)},   {Partition({4, 2}), Int(1)},
        {Partition({4, 1, 1}), Int(1)}, {Partition({3, 3}), Int(1)},
        {Partition({3, 2, 1}), Int(1)},
    };
    CHECK(prod == want);

    // s_lam * s_(1^k): vertical strips
    auto prod2 = nck::lr_expand(lam, Partition({1, 1}));
    std::map<Partition, Int> want2 = {
        {Partition({4, 2}), Int(1)},    {Partition({4, 1, 1}), Int(1)},
        {Partition({3, 2, 1}), Int(1)}, {Partition({3, 1, 1, 1}), Int(1)},
    };
    CHECK(prod2 == want2);

    // empty factor is the unit
    auto prod3 = nck::lr_expand(lam, Partition{});
    CHECK(prod3 == std::map<Partition, Int>{{lam, Int(1)}});
}

TEST_CASE("lr_expand total multiplicity: s_1^n expands with multinomial mass") {
    // (s_1)^3 = s_3 + 2 s_21 + s_111
    auto p1 = nck::lr_expand(Partition({1}), Partition({1}));
    std::map<Partition, Int> acc;
    for (const auto& [nu, c] : p1) {
        for (const auto& [rho, d] : nck::lr_expand(nu, Partition({1}))) {
            acc[rho] += c * d;
        }
    }
    std::map<Partition, Int> want = {
        {Partition({3}), Int(1)},
        {Partition({2, 1}), Int(2)},
        {Partition({1, 1, 1}), Int(1)},
    };
    CHECK(acc == want);
}
