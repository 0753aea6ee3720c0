#include "nck/selftest.hpp"

#include <functional>

#include "nck/freealg.hpp"
#include "nck/freelie.hpp"
#include "nck/io.hpp"
#include "nck/ncdgq.hpp"
#include "nck/ncvirt.hpp"
#include "nck/partition.hpp"
#include "nck/presets.hpp"
#include "nck/quiver.hpp"

namespace nck {

namespace {

// both reductions of a super Schur class, each rebuilt through Jacobi–Trudi
// from scratch: the underlying character from the super power sums, the
// K-class from Adams operations on even − odd
bool two_route_agree(const Partition& lambda, const SuperChar& g) {
    SuperChar s = schur_super(lambda, g);
    int kmax = lambda.weight();
    std::vector<Character> p_under(static_cast<size_t>(kmax) + 1, Character(g.nvars()));
    std::vector<Character> p_k(static_cast<size_t>(kmax) + 1, Character(g.nvars()));
    for (int d = 1; d <= kmax; ++d) {
        p_under[static_cast<size_t>(d)] = power_sum(d, g);
        p_k[static_cast<size_t>(d)] = adams(d, k_class(g));
    }
    auto h_under = h_from_power_sums(p_under, kmax, g.nvars());
    auto h_k = h_from_power_sums(p_k, kmax, g.nvars());
    return underlying(s) == jacobi_trudi(lambda, h_under, g.nvars()) &&
           k_class(s) == jacobi_trudi(lambda, h_k, g.nvars());
}

long long witt_dim(int n, long long r) {
    static const int mu[] = {0, 1, -1, -1, 0, -1, 1, -1, 0, 0, 1};
    long long total = 0;
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        long long pw = 1;
        for (int i = 0; i < n / d; ++i) pw *= r;
        total += mu[d] * pw;
    }
    return total / n;
}

} // namespace

std::vector<SelftestResult> run_selftest(std::uint64_t seed) {
    std::vector<SelftestResult> out;
    auto check = [&out](const std::string& name, const std::function<bool()>& body) {
        bool ok = false;
        try {
            ok = body();
        } catch (...) {
            ok = false;
        }
        out.push_back({name, ok});
    };

    check("partition/lr-symmetry", [&] {
        for (int w = 2; w <= 5; ++w)
            for (const Partition& nu : partitions_of(w))
                for (int k = 0; k <= w; ++k)
                    for (const Partition& la : partitions_of(k))
                        for (const Partition& mu : partitions_of(w - k))
                            if (lr_coeff(la, mu, nu) != lr_coeff(mu, la, nu)) return false;
        return true;
    });

    check("charring/two-route-schur", [&] {
        const std::vector<Partition> lams = {Partition({2, 1}), Partition({3}),
                                             Partition({1, 1, 1}), Partition({2, 2})};
        for (int i = 0; i < 3; ++i) {
            SuperChar g = presets::random_superchar(seed * 1000 + static_cast<std::uint64_t>(i));
            for (const Partition& la : lams)
                if (!two_route_agree(la, g)) return false;
        }
        return true;
    });

    check("charring/cauchy", [&] {
        SuperChar g = presets::random_superchar(seed * 1000 + 10);
        for (int k = 1; k <= 4; ++k) {
            Character acc(g.nvars());
            for (int i = 0; i <= k; ++i) {
                Character term = k_class(sym_power(i, g)) * k_class(ext_power(k - i, g));
                acc += (k - i) % 2 == 0 ? term : -term;
            }
            if (!acc.is_zero()) return false;
        }
        return true;
    });

    check("freelie/witt", [&] {
        long long r = 1 + static_cast<long long>(seed % 3);
        SuperChar g(1);
        g.even = Character::var(1, 0) * Int(r);
        LieCharTable t = lie_char_table(g, 4);
        for (int n = 1; n <= 4; ++n)
            if (t.piece(n).even.rank() != witt_dim(n, r) || !t.piece(n).odd.is_zero())
                return false;
        return true;
    });

    check("freelie/bracket-oracle", [&] {
        SuperChar g(0);
        g.even = Character::constant(0, 2);
        g.odd = Character::constant(0, 1);
        LieCharTable t = lie_char_table(g, 4);
        for (int n = 2; n <= 4; ++n)
            if (underlying(t.piece(n)).rank() != Int(lie_bracket_span_oracle(n, 2, 1)))
                return false;
        return true;
    });

    check("ncvirt/degree-1-layer", [&] {
        for (int i = 0; i < 3; ++i) {
            SuperChar e = presets::random_superchar(seed * 1000 + 20 + static_cast<std::uint64_t>(i));
            Character expect = Character::constant(e.nvars(), 1) +
                               k_class(schur_super(Partition({1, 1}), e));
            if (s_l_plus_truncated(e, 1) != expect) return false;
        }
        return true;
    });

    check("ncvirt/acyclic-is-trivial", [&] {
        SuperChar g = presets::random_superchar(seed * 1000 + 30);
        SuperChar e(g.even, g.even);
        return s_l_plus_truncated(e, 3) == Character::constant(g.nvars(), 1);
    });

    check("ncvirt/c3-display", [&] {
        presets::C3Example ex = presets::c3();
        return s_l_plus_truncated(ex.ot.e, 1) == ex.bracket_target &&
               rat_equal(ncvir_class(ex.ot, 1), ex.display);
    });

    check("freealg/filtration-vs-envelope", [&] {
        GradedGenSet mixed{{{"x", 0}, {"y", 1}}};
        GradedGenSet both_even{{{"x", 0}, {"y", 0}}};
        for (const GradedGenSet& gens : {mixed, both_even})
            for (int n = 1; n <= 4; ++n) {
                FiltrationReport got = nc_filtration_dims(gens, n, n - 1);
                FiltrationReport want = poisson_envelope_dims(gens, n, n - 1);
                if (got.dims != want.dims) return false;
            }
        return true;
    });

    check("ncdgq/p2", [&] {
        NcdgData d = presets::p2_ncdg();
        validate(d);
        return check_q_squared(d).ok && h0_ideal_generators(d).size() == 9;
    });

    check("ncdgq/xn", [&] {
        NcdgData d = presets::xn_instance(3);
        auto h0 = h0_ideal_generators(d);
        return check_q_squared(d).ok && h0.size() == 1 &&
               h0[0] == FreeAlgebraElement::word({0, 0, 0}) && euler_char_xn(3, 30) == 3;
    });

    check("ncdgq/mutant-detected", [&] {
        QsqVerdict v = check_q_squared(presets::nonassociative_mutant(seed * 1000 + 40));
        return !v.ok && !v.residue.is_zero();
    });

    check("ncdgq/random-associative", [&] {
        for (std::uint64_t s : {seed * 1000 + 50, seed * 1000 + 51})
            if (!check_q_squared(presets::random_associative_ncdg(s)).ok) return false;
        return true;
    });

    check("quiver/p2", [&] {
        GradedAlgebraPresentation a = presets::p2_presentation();
        validate(a);
        Quiver qv = build_quiver(a);
        if (qv.arrows.size() != 12 || qv.relations.size() != 9) return false;
        Rep rep = presets::p2_point_rep(qv);
        if (!satisfies_relations(rep, qv)) return false;
        if (!mc_residual(rep_to_lone(rep, qv, a), a, rep.gamma).is_zero()) return false;
        return thin_stability(rep, qv) == Stability::stable;
    });

    check("quiver/regular-module", [&] {
        for (int span = 2; span <= 3; ++span) {
            GradedAlgebraPresentation a =
                presets::random_presentation(seed * 1000 + 60 + static_cast<std::uint64_t>(span), span);
            Quiver qv = build_quiver(a);
            Rep rep = presets::regular_module_rep(a, qv);
            if (!satisfies_relations(rep, qv)) return false;
            if (!mc_residual(rep_to_lone(rep, qv, a), a, rep.gamma).is_zero()) return false;
        }
        return true;
    });

    check("io/round-trip", [&] {
        SuperChar g = presets::random_superchar(seed * 1000 + 70);
        if (!(io::superchar_from_json(io::to_json(g)) == g)) return false;
        io::json jd = io::to_json(presets::p2_ncdg());
        if (io::to_json(io::ncdg_from_json(jd)) != jd) return false;
        GradedAlgebraPresentation a = presets::p2_presentation();
        io::json jq = io::to_json(build_quiver(a));
        return io::to_json(io::quiver_from_json(jq)) == jq;
    });

    return out;
}

} // namespace nck
