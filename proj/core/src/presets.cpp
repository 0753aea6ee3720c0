#include "nck/presets.hpp"

#include <array>
#include <random>
#include <utility>

#include "nck/error.hpp"

namespace nck::presets {

namespace {

// deterministic draw in [lo, hi] from the raw engine; distribution objects
// are avoided because their output is not pinned across standard libraries
int draw(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rat nonzero_rat(std::mt19937_64& rng, int lo, int hi) {
    int v = 0;
    while (v == 0) v = draw(rng, lo, hi);
    return Rat(v);
}

FreeAlgebraElement random_word_elem(std::mt19937_64& rng, int ngens) {
    FreeAlgebraElement x;
    int nterms = draw(rng, 1, 2);
    for (int t = 0; t < nterms; ++t) {
        std::vector<int> w(static_cast<size_t>(draw(rng, 1, 2)));
        for (int& l : w) l = draw(rng, 0, ngens - 1);
        x.add_term(w, nonzero_rat(rng, -3, 3));
    }
    if (x.is_zero()) x = FreeAlgebraElement::gen(0);
    return x;
}

// flat position of z_{ij} (1 ≤ i ≤ j ≤ 3) in the order z11,z12,z13,z22,z23,z33
int zpos(int i, int j) {
    static const int row_start[4] = {0, 0, 3, 5};
    return row_start[i] + (j - i);
}

std::pair<int, int> zunflat(int t) {
    static const std::pair<int, int> tab[6] = {{1, 1}, {1, 2}, {1, 3},
                                               {2, 2}, {2, 3}, {3, 3}};
    return tab[t];
}

} // namespace

C3Example c3() {
    const int nv = 3;
    Character even(nv), odd(nv), alt_odd(nv);
    for (int i = 0; i < 3; ++i) {
        even += Character::var(nv, i, -1);
        odd += Character::var(nv, i);
    }
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            alt_odd += Character::var(nv, i, -1) * Character::var(nv, j, -1);

    const Character one = Character::constant(nv, 1);
    Character num = one, den = one;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            num = num * (one - Character::var(nv, i, -1) * Character::var(nv, j, -1));
    for (int i = 0; i < 3; ++i) den = den * (one - Character::var(nv, i, -1));

    // the displayed degree-1 bracket:
    //   -2 + Σ_{i<j} t_i⁻¹t_j⁻¹ − Σ_{i≠j} t_i⁻¹t_j + Σ_i t_i² + Σ_{i<j} t_i t_j
    Character bracket = Character::constant(nv, -2);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            Expvec inv_inv(3, 0), inv_plain(3, 0);
            inv_inv[i] = -1;
            inv_inv[j] = -1;
            inv_plain[i] = -1;
            inv_plain[j] = 1;
            if (i < j) bracket.add_term(inv_inv, 1);
            bracket.add_term(inv_plain, -1);
        }
        Expvec sq(3, 0);
        sq[i] = 2;
        bracket.add_term(sq, 1);
        for (int j = i + 1; j < 3; ++j) {
            Expvec mix(3, 0);
            mix[i] = 1;
            mix[j] = 1;
            bracket.add_term(mix, 1);
        }
    }

    C3Example ex;
    ex.ot.e = SuperChar(even, odd);
    ex.ot.ovir = RationalCharacter(num, den);
    ex.bracket_target = bracket;
    ex.display = RationalCharacter(num * bracket, den);
    ex.alt_e = SuperChar(even, alt_odd);
    return ex;
}

ObstructionTheory xy_point(int n, int rank) {
    ObstructionTheory ot;
    Character r = Character::constant(0, rank);
    ot.e = SuperChar(r, r);
    ot.ovir = RationalCharacter(Character::constant(0, n), Character::constant(0, 1));
    return ot;
}

NcdgData xn_instance(int n) {
    if (n < 1) throw SchemaError("xn instance needs n >= 1");
    NcdgData d;
    d.name = "xn";
    d.r_gens.generators = {{"x", 0}};
    d.m_basis = {{"a", 1}, {"b", 2}};
    d.theta[{0, 0}] = {{1, Rat(1)}};
    d.p_basis = {{"u0", 0}, {"u1", 1}, {"u2", 2}};
    d.e_hat.resize(2);
    d.e_hat[1][{2, 0}] = FreeAlgebraElement::word(std::vector<int>(static_cast<size_t>(n), 0));
    return d;
}

NcdgData p2_ncdg() {
    NcdgData d;
    d.name = "p2";
    d.r_gens.generators = {{"x1", 0}, {"x2", 0}, {"y1", 0},  {"y2", 0},  {"z11", 0},
                           {"z12", 0}, {"z13", 0}, {"z22", 0}, {"z23", 0}, {"z33", 0}};
    d.m_basis = {{"m1", 1},  {"m2", 1},  {"m3", 1},  {"m11", 2}, {"m12", 2},
                 {"m13", 2}, {"m22", 2}, {"m23", 2}, {"m33", 2}};
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            d.theta[{a, b}] = {{3 + zpos(std::min(a, b) + 1, std::max(a, b) + 1), Rat(1)}};
    d.p_basis = {{"u0", 0}, {"u1", 1}, {"u2", 2}};
    d.e_hat.resize(9);
    auto xcoord = [](int a) {
        return a < 2 ? FreeAlgebraElement::gen(a) : FreeAlgebraElement::unit();
    };
    auto ycoord = [](int a) {
        return a < 2 ? FreeAlgebraElement::gen(2 + a) : FreeAlgebraElement::unit();
    };
    for (int a = 0; a < 3; ++a) {
        d.e_hat[static_cast<size_t>(a)][{1, 0}] = xcoord(a);
        d.e_hat[static_cast<size_t>(a)][{2, 1}] = ycoord(a);
    }
    for (int t = 0; t < 6; ++t)
        d.e_hat[static_cast<size_t>(3 + t)][{2, 0}] = FreeAlgebraElement::gen(4 + t);
    return d;
}

GradedAlgebraPresentation p2_presentation() {
    GradedAlgebraPresentation a;
    a.p = 0;
    a.q = 2;
    a.dims = {3, 6};
    for (int al = 0; al < 3; ++al)
        for (int be = 0; be < 3; ++be)
            a.theta[{1, 1}][{al, be}] = {
                {zpos(std::min(al, be) + 1, std::max(al, be) + 1), Rat(1)}};
    return a;
}

Rep p2_point_rep(const Quiver& qv) {
    // the point [2 : 3 : 1] of the plane
    const std::array<Rat, 3> x = {Rat(2), Rat(3), Rat(1)};
    Rep rep;
    rep.gamma = {1, 1, 1};
    rep.mats.resize(qv.arrows.size());
    for (size_t k = 0; k < qv.arrows.size(); ++k) {
        const Arrow& ar = qv.arrows[k];
        Rat v;
        if (ar.head - ar.tail == 1) {
            v = x[static_cast<size_t>(ar.basis)];
        } else {
            auto [i, j] = zunflat(ar.basis);
            v = x[static_cast<size_t>(i - 1)] * x[static_cast<size_t>(j - 1)];
        }
        rep.mats[k] = {{v}};
    }
    return rep;
}

SuperChar random_superchar(std::uint64_t seed, int max_nvars, int max_rank, int max_exp) {
    std::mt19937_64 rng(seed);
    int nv = draw(rng, 1, max_nvars);
    SuperChar g(nv);
    for (Character* part : {&g.even, &g.odd}) {
        int r = draw(rng, 0, max_rank);
        for (int t = 0; t < r; ++t) {
            Expvec e(static_cast<size_t>(nv));
            for (int& ei : e) ei = draw(rng, -max_exp, max_exp);
            part->add_term(e, 1);
        }
    }
    return g;
}

NcdgData random_associative_ncdg(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    NcdgData d;
    d.r_gens.generators = {{"r1", 0}, {"r2", 0}};
    if (seed % 2 == 0) {
        // truncated power shape: a·a = c1 b, a·b = b·a = c2 c; associativity
        // needs the two mixed coefficients equal, which is arranged
        d.name = "rand-c";
        d.m_basis = {{"a", 1}, {"b", 2}, {"c", 3}};
        Rat c1 = nonzero_rat(rng, -3, 3), c2 = nonzero_rat(rng, -3, 3);
        d.theta[{0, 0}] = {{1, c1}};
        d.theta[{0, 1}] = {{2, c2}};
        d.theta[{1, 0}] = {{2, c2}};
        d.p_basis = {{"u0", 0}, {"u1", 1}, {"u3", 3}};
        d.e_hat.resize(3);
        d.e_hat[0][{1, 0}] = random_word_elem(rng, 2);
        d.e_hat[1][{2, 1}] = random_word_elem(rng, 2);
        d.e_hat[2][{2, 0}] = random_word_elem(rng, 2);
        return d;
    }
    // gapped degrees force ê(a) = 0; the length-4 generator over (a,a,a,a)
    // exercises the splitting term of the differential
    d.name = "rand-b";
    d.m_basis = {{"a", 1}, {"b", 2}};
    d.theta[{0, 0}] = {{1, nonzero_rat(rng, -3, 3)}};
    d.p_basis = {{"v0", 0}, {"v2", 2}, {"v4", 4}};
    d.e_hat.resize(2);
    d.e_hat[1][{1, 0}] = random_word_elem(rng, 2);
    d.e_hat[1][{2, 1}] = random_word_elem(rng, 2);
    return d;
}

NcdgData nonassociative_mutant(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    NcdgData d;
    d.name = "mutant";
    d.r_gens.generators = {{"r1", 0}, {"r2", 0}};
    d.m_basis = {{"a", 1}, {"b", 2}, {"c", 3}};
    Rat c1 = nonzero_rat(rng, -3, 3);
    Rat c2 = nonzero_rat(rng, -3, 3);
    Rat c3 = c2 + nonzero_rat(rng, 1, 3);  // a(ab-slot) ≠ (ba-slot): breaks (a,a,a)
    d.theta[{0, 0}] = {{1, c1}};
    d.theta[{0, 1}] = {{2, c2}};
    d.theta[{1, 0}] = {{2, c3}};
    d.p_basis = {{"u0", 0}, {"u1", 1}, {"u3", 3}};
    d.e_hat.resize(3);
    d.e_hat[0][{1, 0}] = random_word_elem(rng, 2);
    d.e_hat[1][{2, 1}] = random_word_elem(rng, 2);
    d.e_hat[2][{2, 0}] = random_word_elem(rng, 2);  // nonzero: the residue survives
    return d;
}

GradedAlgebraPresentation random_presentation(std::uint64_t seed, int span) {
    if (span < 1) throw SchemaError("presentation span must be positive");
    std::mt19937_64 rng(seed);
    GradedAlgebraPresentation a;
    a.p = draw(rng, 0, 2);
    a.q = a.p + span;
    // rescaled monomial truncation: width 1 is C[s]/(s^{span+1}), width 2
    // adjoins t with t² = 0; basis of m_k is (s^k, s^{k−1}t) up to scale
    int width = draw(rng, 1, 2);
    a.dims.assign(static_cast<size_t>(span), width);
    std::vector<std::array<Rat, 2>> scale(static_cast<size_t>(span) + 1, {Rat(1), Rat(1)});
    for (int k = 1; k <= span; ++k)
        for (int e = 0; e < width; ++e)
            scale[static_cast<size_t>(k)][static_cast<size_t>(e)] = nonzero_rat(rng, -3, 3);
    for (int i = 1; i <= span; ++i)
        for (int j = 1; i + j <= span; ++j)
            for (int e1 = 0; e1 < width; ++e1)
                for (int e2 = 0; e2 < width; ++e2) {
                    if (e1 + e2 >= 2) continue;  // t² = 0
                    Rat c = scale[static_cast<size_t>(i)][static_cast<size_t>(e1)] *
                            scale[static_cast<size_t>(j)][static_cast<size_t>(e2)] /
                            scale[static_cast<size_t>(i + j)][static_cast<size_t>(e1 + e2)];
                    a.theta[{i, j}][{e1, e2}] = {{e1 + e2, c}};
                }
    return a;
}

Rep random_rep(const Quiver& qv, std::uint64_t seed, int max_dim) {
    std::mt19937_64 rng(seed);
    Rep rep;
    rep.gamma.resize(static_cast<size_t>(qv.q - qv.p + 1));
    for (int& g : rep.gamma) g = draw(rng, 0, max_dim);
    rep.mats.reserve(qv.arrows.size());
    for (const Arrow& ar : qv.arrows) {
        int rows = rep.gamma[static_cast<size_t>(ar.head - qv.p)];
        int cols = rep.gamma[static_cast<size_t>(ar.tail - qv.p)];
        Matrix m(static_cast<size_t>(rows), std::vector<Rat>(static_cast<size_t>(cols)));
        for (auto& row : m)
            for (Rat& v : row) v = Rat(draw(rng, -2, 2));
        rep.mats.push_back(std::move(m));
    }
    return rep;
}

Rep regular_module_rep(const GradedAlgebraPresentation& a, const Quiver& qv) {
    // W_i = A_{i−p} with A_0 = C·1; arrows act by left multiplication
    Rep rep;
    int span = a.span();
    rep.gamma.resize(static_cast<size_t>(span) + 1);
    rep.gamma[0] = 1;
    for (int k = 1; k <= span; ++k) rep.gamma[static_cast<size_t>(k)] = a.dim_m(k);
    rep.mats.reserve(qv.arrows.size());
    for (const Arrow& ar : qv.arrows) {
        int grade = ar.tail - a.p;
        int w = ar.head - ar.tail;
        int rows = rep.gamma[static_cast<size_t>(grade + w)];
        int cols = rep.gamma[static_cast<size_t>(grade)];
        Matrix m(static_cast<size_t>(rows), std::vector<Rat>(static_cast<size_t>(cols)));
        if (grade == 0) {
            m[static_cast<size_t>(ar.basis)][0] = 1;
        } else if (auto it = a.theta.find({w, grade}); it != a.theta.end()) {
            for (const auto& [ab, targets] : it->second) {
                if (ab.first != ar.basis) continue;
                for (const auto& [tgt, c] : targets)
                    m[static_cast<size_t>(tgt)][static_cast<size_t>(ab.second)] += c;
            }
        }
        rep.mats.push_back(std::move(m));
    }
    return rep;
}

} // namespace nck::presets
