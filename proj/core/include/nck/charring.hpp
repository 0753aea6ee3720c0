#pragma once

#include <map>
#include <string>
#include <vector>

#include "nck/partition.hpp"
#include "nck/rational.hpp"

namespace nck {

using Expvec = std::vector<int>;

// Graded lexicographic: total degree first, then lex. Deterministic term
// order for serialization and printing.
struct GrlexLess {
    bool operator()(const Expvec& a, const Expvec& b) const;
};

// Process-wide guardrail against runaway Adams compositions: any operation
// producing an exponent with |e_i| beyond the budget throws BudgetError.
int exponent_budget();
void set_exponent_budget(int b);

// Sparse integer Laurent polynomial in nvars torus variables t1..tk.
// nvars = 0 degenerates to a single integer (the rank).
struct Character {
    int nvars = 0;
    std::map<Expvec, Int, GrlexLess> terms;  // no zero coefficients stored

    Character() = default;
    explicit Character(int nv) : nvars(nv) {}

    static Character constant(int nvars, Int c);
    static Character monomial(int nvars, Expvec e, Int c);
    static Character var(int nvars, int i, int power = 1);  // t_{i+1}^power

    bool is_zero() const { return terms.empty(); }
    Int rank() const;  // evaluation at t_i = 1
    void add_term(const Expvec& e, const Int& c);  // accumulates, keeps canonical

    friend bool operator==(const Character&, const Character&) = default;
};

Character operator+(const Character& a, const Character& b);
Character operator-(const Character& a, const Character& b);
Character operator-(const Character& a);
Character operator*(const Character& a, const Character& b);
Character operator*(const Character& a, const Int& c);
Character& operator+=(Character& a, const Character& b);
Character& operator-=(Character& a, const Character& b);

// psi^d: substitute t_i -> t_i^d
Character adams(int d, const Character& a);

// exact division by an integer (used by Newton recursions; divisibility is a
// theorem there, so failure is a logic error, not a user error)
Character div_exact(const Character& a, const Int& k);

// drop terms of total degree > cutoff (series bookkeeping helper)
Character truncate_degree(const Character& a, int cutoff);

std::string to_string(const Character& a);

// Complete/elementary symmetric functions h_0..h_kmax / e_0..e_kmax of a
// character via Newton recursions on the given power sums p[1..].
std::vector<Character> h_from_power_sums(const std::vector<Character>& p, int kmax, int nvars);
std::vector<Character> e_from_power_sums(const std::vector<Character>& p, int kmax, int nvars);
std::vector<Character> h_list(const Character& a, int kmax);
std::vector<Character> e_list(const Character& a, int kmax);

// Jacobi–Trudi determinant det(h_{rho_i - i + j}) over a supplied h-list.
Character jacobi_trudi(const Partition& rho, const std::vector<Character>& h, int nvars);

// s_rho of an ordinary (even) character, via Jacobi–Trudi on h_list(a).
Character schur_of_character(const Partition& rho, const Character& a);

// Z/2-graded character.
struct SuperChar {
    Character even, odd;

    SuperChar() = default;
    SuperChar(Character e, Character o);  // checks matching nvars
    explicit SuperChar(int nvars) : even(nvars), odd(nvars) {}

    int nvars() const { return even.nvars; }
    friend bool operator==(const SuperChar&, const SuperChar&) = default;
};

SuperChar operator+(const SuperChar& a, const SuperChar& b);
SuperChar operator-(const SuperChar& a, const SuperChar& b);
// (a1,b1)(a2,b2) = (a1a2 + b1b2, a1b2 + b1a2)
SuperChar operator*(const SuperChar& a, const SuperChar& b);

Character k_class(const SuperChar& g);                 // even - odd
Character underlying(const SuperChar& g);              // even + odd
SuperChar parity_shift(const SuperChar& g);            // (odd, even)

// psi^d(even) - (-1)^d psi^d(odd); the power-sum rule matching the super
// symmetric-product convention (sigma-series of the underlying character).
Character power_sum(int d, const SuperChar& g);

// S^k(V) = ⊕_{i+j=k} S^i(V_even) ⊗ Λ^j(V_odd), summand parity j mod 2
SuperChar sym_power(int k, const SuperChar& g);
// Λ^k(V) = ⊕_{i+j=k} Λ^i(V_even) ⊗ S^j(V_odd), summand parity j mod 2
SuperChar ext_power(int k, const SuperChar& g);

// Schur functor of a Z/2-graded object:
//   S_lambda(g) = Σ_{mu,nu} N^lambda_{mu,nu} s_mu(g.even)·s_{nu'}(g.odd),
// the (mu,nu) summand carrying parity weight(nu) mod 2.
SuperChar schur_super(const Partition& lambda, const SuperChar& g);

// Cohomologically graded class; K-theory only sees the parity fold.
struct GradedClass {
    int nvars = 0;
    std::map<int, Character> components;  // degree -> character

    SuperChar fold_to_super() const;
};

struct RationalCharacter {
    Character num, den;

    RationalCharacter() = default;
    RationalCharacter(Character n, Character d);  // rejects zero denominator
};

RationalCharacter rational_mul(const RationalCharacter& r, const Character& c);
// cross-multiplication equality p/q = r/s iff p·s = r·q
bool rat_equal(const RationalCharacter& a, const RationalCharacter& b);
std::string to_string(const RationalCharacter& r);

} // namespace nck
