#pragma once

#include <compare>
#include <map>
#include <vector>

#include "nck/rational.hpp"

namespace nck {

// Weakly decreasing positive parts, canonical (no trailing zeros). ∅ = {}.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);  // validates, throws SchemaError

    int weight() const;
    int length() const { return static_cast<int>(parts.size()); }
    bool empty() const { return parts.empty(); }
    // 0-based access, 0 beyond the last part
    int part(int i) const {
        return (i >= 0 && i < length()) ? parts[static_cast<size_t>(i)] : 0;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;
};

Partition conjugate(const Partition& p);

// All partitions of n, each once, first part descending then recursively the
// same order on the remainder ((3),(2,1),(1,1,1)).
std::vector<Partition> partitions_of(int n);

// N^nu_{lambda,mu}: multiplicity of S_nu in S_lambda (x) S_mu. Zero when the
// weights do not add up. Computed by exact Schur-polynomial multiplication in
// weight(nu) variables, expanded in the Schur basis; memoized, thread-safe.
Int lr_coeff(const Partition& lambda, const Partition& mu, const Partition& nu);

// Full product expansion s_lambda * s_mu = sum_nu N^nu_{lambda,mu} s_nu.
std::map<Partition, Int> lr_expand(const Partition& lambda, const Partition& mu);

std::string to_string(const Partition& p);

} // namespace nck
