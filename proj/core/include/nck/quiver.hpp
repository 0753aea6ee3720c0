#pragma once

#include <map>
#include <string>
#include <vector>

#include "nck/rational.hpp"

namespace nck {

// Truncated graded algebra A = C ⊕ m_1 ⊕ … with declared bases: dims[k-1] is
// dim m_k, and theta stores the multiplication m_i ⊗ m_j → m_{i+j} as sparse
// tensors over the declared bases.
struct GradedAlgebraPresentation {
    int p = 0, q = 0;          // vertex range [p, q]
    std::vector<int> dims;     // dim m_k for k = 1..q−p
    // theta[{i,j}][{α,β}] = ϑ(α ⊗ β) ∈ m_{i+j} for α ∈ m_i, β ∈ m_j
    std::map<std::pair<int, int>, std::map<std::pair<int, int>, std::map<int, Rat>>> theta;

    int span() const { return q - p; }
    int dim_m(int k) const {
        return (k >= 1 && k <= span()) ? dims[static_cast<size_t>(k - 1)] : 0;
    }
};

// Validates shape and associativity of ϑ on all in-range triples.
void validate(const GradedAlgebraPresentation& a);

struct Arrow {
    int tail = 0, head = 0;  // vertices, tail < head
    int basis = 0;           // index into the basis of m_{head−tail}
};

// Formal sum of paths; a path is a composable arrow-index sequence listed in
// traversal order (first arrow first).
struct PathElement {
    std::map<std::vector<int>, Rat> terms;
};

struct Quiver {
    int p = 0, q = 0;
    std::vector<Arrow> arrows;
    std::vector<PathElement> relations;

    int arrow_index(int tail, int head, int basis) const;  // −1 when absent
};

Quiver build_quiver(const GradedAlgebraPresentation& a);

using Matrix = std::vector<std::vector<Rat>>;  // row-major, rows = head dim

struct Rep {
    std::vector<int> gamma;       // dims at vertices p..q
    std::vector<Matrix> mats;     // one per quiver arrow
};

void validate_shapes(const Rep& rep, const Quiver& qv);

// Evaluate a path element on a representation: path [a, b] (a first) acts as
// M_b · M_a, matching left-module composition.
Matrix evaluate(const PathElement& pe, const Rep& rep, const Quiver& qv);

bool satisfies_relations(const Rep& rep, const Quiver& qv);

// Degree-1 element of the L_•-construction attached to a rep: for each weight
// k and basis index α of m_k, the block maps W_i → W_{i+k}.
struct LOne {
    // key (k, α, vertex i) → matrix W_i → W_{i+k}
    std::map<std::tuple<int, int, int>, Matrix> blocks;
};

LOne rep_to_lone(const Rep& rep, const Quiver& qv, const GradedAlgebraPresentation& a);

// dx + x∘x at n = 1: value on (a₁ ⊗ a₂) at vertex i is
// x(ϑ(a₁,a₂))|_i − x(a₁)|_{i+k₂} · x(a₂)|_i.
struct MCResidual {
    // key (k₁, α₁, k₂, α₂, vertex i) → matrix W_i → W_{i+k₁+k₂}
    std::map<std::tuple<int, int, int, int, int>, Matrix> blocks;

    bool is_zero() const;
};

MCResidual mc_residual(const LOne& x, const GradedAlgebraPresentation& a,
                       const std::vector<int>& gamma);

enum class Stability { stable, semistable_only, unstable };
std::string to_string(Stability s);

// Thin reps only (all γᵢ = 1): subrepresentations are the arrow-closed vertex
// subsets; classify by the slope inequality on (W_p, W_q).
Stability thin_stability(const Rep& rep, const Quiver& qv);

} // namespace nck
