#pragma once

#include "nck/freealg.hpp"

namespace nck {

struct MBasisElem {
    std::string name;
    int weight = 1;  // k ≥ 1
};

struct PBasisElem {
    std::string name;
    int degree = 0;
};

// Input data (R, m, ϑ, P, ê) for the NCDG algebra 𝔄 = T_R(𝔓) with
// 𝔓 = ⊕_{n≥2} (P^∨ ⊗ m^{⊗n} ⊗ P)₀, each length-n generator in degree 1−n.
struct NcdgData {
    std::string name;
    GradedGenSet r_gens;  // all |_•-degree 0
    std::vector<MBasisElem> m_basis;
    // ϑ(m_i ⊗ m_j) as a sparse combination of m-basis elements
    std::map<std::pair<int, int>, std::map<int, Rat>> theta;
    std::vector<PBasisElem> p_basis;
    // e_hat[a][{row, col}]: entry of ê(m_a) in R, acting u_col ↦ Σ u_row·entry
    std::vector<std::map<std::pair<int, int>, FreeAlgebraElement>> e_hat;
    int max_word_len = 4;  // m-tensor truncation n_max
};

// Grade preservation of ê and weight consistency of ϑ; associativity of ϑ is
// deliberately NOT enforced here — check_q_squared is what detects it.
void validate(const NcdgData& data);

struct PGen {
    int f = 0;              // row index: dual basis vector u_f^∨
    std::vector<int> word;  // m-basis indices a_1..a_n, n ≥ 2
    int x = 0;              // column index: basis vector u_x

    friend bool operator==(const PGen&, const PGen&) = default;
    friend auto operator<=>(const PGen&, const PGen&) = default;
};

std::string pgen_name(const NcdgData& data, const PGen& g);

// 𝔄 as the free algebra on r-letters 0..#r−1 (degree 0) followed by
// 𝔓-letters (degree 1 − word length), with Q stored per letter and extended
// by the Leibniz rule Q(ab) = Q(a)b + (−1)^{deg a} a Q(b).
struct Differential {
    NcdgData data;
    GradedGenSet letters;
    std::vector<PGen> pgens;
    std::vector<FreeAlgebraElement> q_letters;

    int letter_index(const PGen& g) const;  // throws SchemaError if absent
    const FreeAlgebraElement& q_of(const PGen& g) const;
    FreeAlgebraElement apply(const FreeAlgebraElement& x) const;
};

Differential build_q(const NcdgData& data);

struct QsqVerdict {
    bool ok = true;
    std::string generator;
    FreeAlgebraElement residue;
};

// Q² on every 𝔓-generator of m-length ≤ max_word_len; exact at the
// truncation because Q never increases total m-length.
QsqVerdict check_q_squared(const NcdgData& data);

// Q₀-images of the length-2 generators: relations presenting H₀(𝔄,Q) = R/J,
// returned as elements of the free algebra on r_gens.
std::vector<FreeAlgebraElement> h0_ideal_generators(const NcdgData& data);

// Euler characteristic of the complex C[x]·y → C[x], y ↦ x^n, summed weight
// by weight (weight x = 1, weight y = n) up to the cutoff; the tail of the
// scan must be exact or a SchemaError("cutoff too small...") is thrown.
int euler_char_xn(int n, int weight_cutoff);

} // namespace nck
