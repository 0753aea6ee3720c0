#pragma once

#include "nck/charring.hpp"

namespace nck {

// Perfect-obstruction-theory input: e is the class of the two-term complex
// (even = degree 0, odd = degree -1); ovir is the given virtual structure
// sheaf class, taken as input and never derived.
struct ObstructionTheory {
    SuperChar e;
    RationalCharacter ovir;

    Int virtual_rank() const { return e.even.rank() - e.odd.rank(); }
};

// u-degree coefficients, already folded by k_class, of the truncated series
// Π_{j=1..d} σ_{u^j}(Lie_{j+1}(e)); layer 0 is the constant 1.
std::vector<Character> s_l_plus_layers(const SuperChar& e, int d);

// [S L⁺(e)^{≤d}] = sum of the layers 0..d; d = 0 gives 1.
Character s_l_plus_truncated(const SuperChar& e, int d);

RationalCharacter ncvir_class(const ObstructionTheory& ot, int d);

} // namespace nck
