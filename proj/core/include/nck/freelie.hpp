#pragma once

#include "nck/charring.hpp"

namespace nck {

// Characters of the graded pieces Lie_1..Lie_max_n of the free super Lie
// algebra on a generator character g, inside the tensor algebra T(W).
struct LieCharTable {
    SuperChar g;
    int max_n = 0;
    std::vector<SuperChar> table;  // table[n-1] = character of Lie_n

    const SuperChar& piece(int n) const;
};

// Solve the PBW factorization  Σ_k g^k t^k = Π_{m≥1} σ_{t^m}(Lie_m)
// order by order, σ being the super symmetric-power series.
LieCharTable lie_char_table(const SuperChar& g, int max_n);
SuperChar lie_char(int n, const SuperChar& g);

// Independent desk-scale oracle: dimension of the span of all left-normed
// iterated super-commutators [[..[x_{i1},x_{i2}],..],x_{in}] of basis
// generators inside the n-fold tensor power, by exact row reduction.
// Throws BudgetError when (even_dim+odd_dim)^n exceeds the word budget.
long long lie_bracket_span_oracle(int n, int even_dim, int odd_dim,
                                  long long budget = 100000);

} // namespace nck
