#pragma once

// Independent cross-checks used by both the unit suite and the acceptance
// gate: symmetric-group characters by border-strip removal and the Schur
// functor of a weighted super space via the explicit Young symmetrizer.

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "nck/charring.hpp"
#include "nck/partition.hpp"

namespace nck_oracles {

// chi^lam evaluated at the given cycle type (any order)
inline nck::Int mn_chi(const nck::Partition& lam, std::vector<int> cyc) {
    using nck::Int;
    if (cyc.empty()) return lam.empty() ? Int(1) : Int(0);
    int r = cyc.back();
    cyc.pop_back();
    int L = std::max(lam.length(), 1);
    std::vector<int> beta;
    for (int i = 0; i < L; ++i) beta.push_back(lam.part(i) + L - 1 - i);
    Int total = 0;
    for (int i = 0; i < L; ++i) {
        int nb = beta[static_cast<size_t>(i)] - r;
        if (nb < 0) continue;
        if (std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
        int height = 0;
        for (int b : beta)
            if (b > nb && b < beta[static_cast<size_t>(i)]) ++height;
        std::vector<int> nbeta = beta;
        nbeta[static_cast<size_t>(i)] = nb;
        std::sort(nbeta.rbegin(), nbeta.rend());
        std::vector<int> nparts;
        int LL = static_cast<int>(nbeta.size());
        for (int j = 0; j < LL; ++j) {
            int part = nbeta[static_cast<size_t>(j)] - (LL - 1 - j);
            if (part > 0) nparts.push_back(part);
        }
        Int sub = mn_chi(nck::Partition(nparts), cyc);
        total += (height % 2 == 0) ? sub : Int(-sub);
    }
    return total;
}

inline std::vector<int> cycle_type(const std::vector<int>& perm) {
    std::vector<bool> seen(perm.size(), false);
    std::vector<int> cyc;
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<size_t>(perm[j]);
            ++len;
        }
        cyc.push_back(len);
    }
    std::sort(cyc.rbegin(), cyc.rend());
    return cyc;
}

// Underlying character of S_lambda(V) for a weighted super basis, computed as
// (1/k!) Σ_σ chi^lam(σ) str(σ | V^{⊗k}): σ contributes on words constant on
// its cycles, with the Koszul sign from transporting odd letters.
inline nck::Character symmetrizer_schur(
    const nck::Partition& lam, int nv,
    const std::vector<std::pair<nck::Expvec, int>>& basis) {
    using nck::Character;
    using nck::Expvec;
    using nck::Int;
    int k = lam.weight();
    std::vector<int> perm(static_cast<size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    Character acc(nv);
    Int fact = 1;
    for (int i = 2; i <= k; ++i) fact *= i;
    do {
        Int chi = mn_chi(lam, cycle_type(perm));
        if (chi == 0) continue;
        std::vector<size_t> w(static_cast<size_t>(k), 0);
        auto fixed_by = [&](const std::vector<size_t>& word) {
            for (int i = 0; i < k; ++i)
                if (word[static_cast<size_t>(perm[static_cast<size_t>(i)])] !=
                    word[static_cast<size_t>(i)])
                    return false;
            return true;
        };
        auto rec = [&](auto&& self, int pos) -> void {
            if (pos == k) {
                if (!fixed_by(w)) return;
                int inv = 0;
                for (int i = 0; i < k; ++i)
                    for (int j = i + 1; j < k; ++j)
                        if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)] &&
                            basis[w[static_cast<size_t>(i)]].second == 1 &&
                            basis[w[static_cast<size_t>(j)]].second == 1)
                            ++inv;
                Expvec e(static_cast<size_t>(nv), 0);
                for (int i = 0; i < k; ++i)
                    for (int v = 0; v < nv; ++v)
                        e[static_cast<size_t>(v)] +=
                            basis[w[static_cast<size_t>(i)]].first[static_cast<size_t>(v)];
                acc.add_term(e, (inv % 2 == 0) ? chi : Int(-chi));
                return;
            }
            for (size_t b = 0; b < basis.size(); ++b) {
                w[static_cast<size_t>(pos)] = b;
                self(self, pos + 1);
            }
        };
        rec(rec, 0);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return nck::div_exact(acc, fact);
}

} // namespace nck_oracles
