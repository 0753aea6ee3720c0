#pragma once

#include <cstdint>

#include "nck/ncdgq.hpp"
#include "nck/ncvirt.hpp"
#include "nck/quiver.hpp"

namespace nck::presets {

// Equivariant point of C³: even = Ω-character, odd = T-character, together
// with the displayed localization product and the alternative odd-part
// reading (Λ²Ω) that the display does not match.
struct C3Example {
    ObstructionTheory ot;
    Character bracket_target;   // the displayed degree-1 bracket polynomial
    RationalCharacter display;  // ovir times the displayed bracket
    SuperChar alt_e;            // same even part, odd = Λ²Ω character
};
C3Example c3();

// nvars = 0 acyclic obstruction data with ovir = n (the xy-point family)
ObstructionTheory xy_point(int n, int rank = 2);

// R = C⟨x⟩, one length-2 generator y with Q(y) = x^n
NcdgData xn_instance(int n);

// homogeneous coordinate data of the projective plane: 10 R-generators,
// m = m₁ ⊕ m₂ with the symmetrized product, P = u₀ ⊕ u₁ ⊕ u₂
NcdgData p2_ncdg();

GradedAlgebraPresentation p2_presentation();
Rep p2_point_rep(const Quiver& qv);

// seeded deterministic random data (plain mt19937_64 + modular draws)
SuperChar random_superchar(std::uint64_t seed, int max_nvars = 3, int max_rank = 4,
                           int max_exp = 3);

// alternates between two associative shapes: weights {1,2,3} over degrees
// {0,1,3} exercising the length-3 differential, and weights {1,2} over
// degrees {0,2,4} exercising the length-4 splitting term
NcdgData random_associative_ncdg(std::uint64_t seed);

// breaks ϑ associativity at one slot while keeping ê nonzero on the product,
// so the squared differential has a visible residue
NcdgData nonassociative_mutant(std::uint64_t seed);

// rescaled truncation of C[s,t]/(t²): dims ≤ 3, exactly associative
GradedAlgebraPresentation random_presentation(std::uint64_t seed, int span);

Rep random_rep(const Quiver& qv, std::uint64_t seed, int max_dim = 3);

// restriction of the left regular module A (shifted to start at vertex p)
Rep regular_module_rep(const GradedAlgebraPresentation& a, const Quiver& qv);

} // namespace nck::presets
