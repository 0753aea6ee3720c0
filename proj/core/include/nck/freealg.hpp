#pragma once

#include <map>
#include <string>
#include <vector>

#include "nck/rational.hpp"

namespace nck {

struct GeneratorInfo {
    std::string name;
    int degree = 0;  // |_•-degree; parity = degree mod 2
};

struct GradedGenSet {
    std::vector<GeneratorInfo> generators;

    int size() const { return static_cast<int>(generators.size()); }
    int degree(int i) const { return generators[static_cast<size_t>(i)].degree; }
};

void validate(const GradedGenSet& gens);  // unique nonempty names

// Element of the free algebra on an indexed generator set: finite map from
// words (generator index sequences) to nonzero rational coefficients.
struct FreeAlgebraElement {
    std::map<std::vector<int>, Rat> terms;

    static FreeAlgebraElement unit();
    static FreeAlgebraElement gen(int i);
    static FreeAlgebraElement word(std::vector<int> w, Rat c = 1);

    bool is_zero() const { return terms.empty(); }
    void add_term(const std::vector<int>& w, const Rat& c);

    friend bool operator==(const FreeAlgebraElement&, const FreeAlgebraElement&) = default;
};

FreeAlgebraElement operator+(const FreeAlgebraElement& a, const FreeAlgebraElement& b);
FreeAlgebraElement operator-(const FreeAlgebraElement& a, const FreeAlgebraElement& b);
FreeAlgebraElement operator*(const FreeAlgebraElement& a, const FreeAlgebraElement& b);
FreeAlgebraElement operator*(const FreeAlgebraElement& a, const Rat& c);
FreeAlgebraElement& operator+=(FreeAlgebraElement& a, const FreeAlgebraElement& b);

// |_•-degree of an element when homogeneous; throws SchemaError otherwise.
// The zero element is homogeneous of every degree (returns 0).
int homogeneous_degree(const FreeAlgebraElement& x, const GradedGenSet& gens);

// xy − (−1)^{deg x · deg y} yx; rejects inhomogeneous inputs
FreeAlgebraElement super_commutator(const FreeAlgebraElement& x, const FreeAlgebraElement& y,
                                    const GradedGenSet& gens);

std::string to_string(const FreeAlgebraElement& x, const GradedGenSet& gens);

struct FiltrationReport {
    int n = 0;                                       // tensor degree
    std::vector<std::pair<int, long long>> dims;     // (d, dim gr_F^d)
};

// dim gr_F^d inside the tensor-degree-n slice of T(W), where F^d is spanned
// by products of letters and left-normed bracket factors of total excess
// Σ(factor length − 1) ≥ d; exact row reduction over the word basis.
FiltrationReport nc_filtration_dims(const GradedGenSet& gens, int tensor_degree, int max_d,
                                    long long budget = 100000);

// Predicted dims of gr_F from S(L(W)): the coefficient of t^n u^d in the
// product over m of the super σ-series of Lie_m(W) placed at u^{m-1}.
FiltrationReport poisson_envelope_dims(const GradedGenSet& gens, int tensor_degree, int max_d);

} // namespace nck
