#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "embedded_data.hpp"
#include "nck/error.hpp"
#include "nck/freealg.hpp"
#include "nck/freelie.hpp"
#include "nck/io.hpp"
#include "nck/ncdgq.hpp"
#include "nck/ncvirt.hpp"
#include "nck/presets.hpp"
#include "nck/quiver.hpp"
#include "nck/selftest.hpp"

namespace {

using nck::io::json;

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

const json& member(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw nck::SchemaError(std::string("input needs field \"") + key + "\"");
    return j.at(key);
}

int run_ncvir(const std::string& input, int d, const std::string& format) {
    nck::ObstructionTheory ot = nck::io::obstruction_from_json(nck::io::parse_file(input));
    nck::RationalCharacter v = nck::ncvir_class(ot, d);
    if (format == "json") {
        emit(json{{"d", d},
                  {"virtual_rank", nck::to_string(ot.virtual_rank())},
                  {"ncvir", nck::io::to_json(v)}});
    } else {
        std::cout << "virtual rank = " << nck::to_string(ot.virtual_rank()) << "\n"
                  << "ncvir (d = " << d << ") = " << nck::to_string(v) << "\n";
    }
    return 0;
}

int run_schur(const std::string& input, const std::string& format) {
    json in = nck::io::parse_file(input);
    nck::Partition lam = nck::io::partition_from_json(member(in, "lambda"));
    nck::SuperChar g = nck::io::superchar_from_json(member(in, "g"));
    nck::SuperChar s = nck::schur_super(lam, g);
    if (format == "json") {
        emit(json{{"lambda", nck::io::to_json(lam)},
                  {"schur", nck::io::to_json(s)},
                  {"k_class", nck::io::to_json(nck::k_class(s))}});
    } else {
        std::cout << "S_" << nck::to_string(lam) << ":\n"
                  << "  even    = " << nck::to_string(s.even) << "\n"
                  << "  odd     = " << nck::to_string(s.odd) << "\n"
                  << "  k-class = " << nck::to_string(nck::k_class(s)) << "\n";
    }
    return 0;
}

int run_lie(const std::string& input, int max_n, const std::string& format) {
    nck::SuperChar g = nck::io::superchar_from_json(nck::io::parse_file(input));
    nck::LieCharTable t = nck::lie_char_table(g, max_n);
    if (format == "json") {
        json pieces = json::array();
        for (int n = 1; n <= max_n; ++n)
            pieces.push_back(json::array({n, nck::io::to_json(t.piece(n))}));
        emit(json{{"max_n", max_n}, {"pieces", std::move(pieces)}});
    } else {
        for (int n = 1; n <= max_n; ++n)
            std::cout << "Lie_" << n << ": even = " << nck::to_string(t.piece(n).even)
                      << "; odd = " << nck::to_string(t.piece(n).odd) << "\n";
    }
    return 0;
}

int run_grfilt(const std::string& input, int n, int d_opt, long long budget,
               const std::string& format) {
    nck::GradedGenSet gens = nck::io::genset_from_json(nck::io::parse_file(input));
    int d = d_opt >= 0 ? d_opt : std::max(0, n - 1);
    nck::FiltrationReport filt = nck::nc_filtration_dims(gens, n, d, budget);
    nck::FiltrationReport env = nck::poisson_envelope_dims(gens, n, d);
    bool match = filt.dims == env.dims;
    if (format == "json") {
        emit(json{{"n", n},
                  {"filtration", nck::io::to_json(filt)},
                  {"envelope", nck::io::to_json(env)},
                  {"match", match}});
    } else {
        std::cout << "tensor degree n = " << n << "\n";
        for (size_t i = 0; i < filt.dims.size(); ++i)
            std::cout << "  gr^" << filt.dims[i].first << ": filtration " << filt.dims[i].second
                      << ", envelope " << env.dims[i].second << "\n";
        std::cout << "match: " << (match ? "yes" : "NO") << "\n";
    }
    return 0;
}

int run_qsq(const std::string& input, const std::string& format) {
    nck::NcdgData data = nck::io::ncdg_from_json(nck::io::parse_file(input));
    nck::Differential dq = nck::build_q(data);
    nck::QsqVerdict v = nck::check_q_squared(data);
    if (format == "json") {
        json out = nck::io::qsq_verdict_to_json(v, dq.letters);
        out["generators"] = dq.pgens.size();
        emit(out);
    } else {
        std::cout << "generators: " << dq.pgens.size() << "\n";
        if (v.ok) {
            std::cout << "Q^2 = 0: yes\n";
        } else {
            std::cout << "Q^2 = 0: NO\n"
                      << "  witness: " << v.generator << "\n"
                      << "  residue: " << nck::to_string(v.residue, dq.letters) << "\n";
        }
    }
    return 0;
}

int run_quiver(const std::string& input, const std::string& format) {
    json in = nck::io::parse_file(input);
    const json& pj = (in.is_object() && in.contains("presentation")) ? in.at("presentation") : in;
    nck::GradedAlgebraPresentation a = nck::io::presentation_from_json(pj);
    nck::Quiver qv = nck::build_quiver(a);
    bool have_rep = in.is_object() && in.contains("rep");
    bool sat = false, mc = false, thin = false;
    nck::Stability st = nck::Stability::unstable;
    if (have_rep) {
        nck::Rep rep = nck::io::rep_from_json(in.at("rep"));
        nck::validate_shapes(rep, qv);
        sat = nck::satisfies_relations(rep, qv);
        mc = nck::mc_residual(nck::rep_to_lone(rep, qv, a), a, rep.gamma).is_zero();
        thin = true;
        for (int g : rep.gamma) thin = thin && g == 1;
        if (thin) st = nck::thin_stability(rep, qv);
    }
    if (format == "json") {
        json out{{"quiver", nck::io::to_json(qv)}};
        if (have_rep) {
            out["satisfies_relations"] = sat;
            out["mc_zero"] = mc;
            out["stability"] = thin ? json(nck::to_string(st)) : json(nullptr);
        }
        emit(out);
    } else {
        std::cout << "vertices " << qv.p << ".." << qv.q << ", arrows " << qv.arrows.size()
                  << ", relations " << qv.relations.size() << "\n";
        if (have_rep) {
            std::cout << "relations satisfied: " << (sat ? "yes" : "NO") << "\n"
                      << "mc residual zero:    " << (mc ? "yes" : "NO") << "\n";
            if (thin) std::cout << "thin stability:      " << nck::to_string(st) << "\n";
        }
    }
    return 0;
}

int run_example_c3(const std::string& format) {
    json target = nck::io::parse_text(nck::tools::kC3TargetJson);
    nck::SuperChar e = nck::io::superchar_from_json(target.at("e"));
    nck::Character alt_odd = nck::io::character_from_json(target.at("alt_odd"));
    nck::RationalCharacter ovir = nck::io::rational_character_from_json(target.at("ovir"));
    nck::Character btarget = nck::io::character_from_json(target.at("bracket"));

    nck::Character bracket = nck::s_l_plus_truncated(e, 1);
    bool bracket_match = bracket == btarget;
    nck::ObstructionTheory ot{e, ovir};
    nck::RationalCharacter display(ovir.num * btarget, ovir.den);
    bool product_match = nck::rat_equal(nck::ncvir_class(ot, 1), display);
    nck::ObstructionTheory alt{nck::SuperChar(e.even, alt_odd), ovir};
    bool alt_match = nck::rat_equal(nck::ncvir_class(alt, 1), display);
    bool ok = bracket_match && product_match && !alt_match;

    if (format == "json") {
        emit(json{{"example", "c3"},
                  {"bracket", nck::io::to_json(bracket)},
                  {"bracket_target", nck::io::to_json(btarget)},
                  {"bracket_match", bracket_match},
                  {"product_match", product_match},
                  {"alt_product_match", alt_match},
                  {"match", ok}});
    } else {
        std::cout << "bracket          = " << nck::to_string(bracket) << "\n"
                  << "bracket target   = " << nck::to_string(btarget) << "\n"
                  << "bracket match:     " << (bracket_match ? "yes" : "NO") << "\n"
                  << "product match:     " << (product_match ? "yes" : "NO") << "\n"
                  << "alt-odd matches:   " << (alt_match ? "yes (unexpected)" : "no (as it should)")
                  << "\n"
                  << "overall: " << (ok ? "ok" : "MISMATCH") << "\n";
    }
    return ok ? 0 : 4;
}

int run_example_p2(const std::string& format) {
    json target = nck::io::parse_text(nck::tools::kP2TargetJson);
    nck::NcdgData data = nck::presets::p2_ncdg();
    nck::QsqVerdict v = nck::check_q_squared(data);
    std::vector<nck::FreeAlgebraElement> h0 = nck::h0_ideal_generators(data);
    const json& relj = target.at("h0_relations");
    bool h0_match = h0.size() == relj.size();
    if (h0_match)
        for (size_t i = 0; i < h0.size(); ++i)
            h0_match = h0_match &&
                       h0[i] == nck::io::element_from_json(relj[i], data.r_gens);

    nck::GradedAlgebraPresentation a = nck::presets::p2_presentation();
    nck::Quiver qv = nck::build_quiver(a);
    std::map<std::pair<int, int>, int> counts;
    for (const nck::Arrow& ar : qv.arrows) ++counts[{ar.tail, ar.head}];
    bool arrow_match = counts.size() == target.at("arrow_counts").size();
    for (const json& t : target.at("arrow_counts"))
        arrow_match = arrow_match && counts[{t[0].get<int>(), t[1].get<int>()}] == t[2].get<int>();
    bool rel_match = qv.relations.size() == target.at("relation_count").get<size_t>();

    nck::Rep rep = nck::presets::p2_point_rep(qv);
    bool point_ok = nck::satisfies_relations(rep, qv);
    bool mc = nck::mc_residual(nck::rep_to_lone(rep, qv, a), a, rep.gamma).is_zero();
    nck::Stability st = nck::thin_stability(rep, qv);
    bool ok = v.ok && h0_match && arrow_match && rel_match && point_ok && mc &&
              st == nck::Stability::stable;

    if (format == "json") {
        emit(json{{"example", "p2"},
                  {"qsq_ok", v.ok},
                  {"h0_count", h0.size()},
                  {"h0_match", h0_match},
                  {"arrow_match", arrow_match},
                  {"relation_count", qv.relations.size()},
                  {"relation_match", rel_match},
                  {"point_rep_ok", point_ok},
                  {"mc_zero", mc},
                  {"stability", nck::to_string(st)},
                  {"match", ok}});
    } else {
        std::cout << "Q^2 = 0:          " << (v.ok ? "yes" : "NO") << "\n"
                  << "H0 relations:     " << h0.size() << (h0_match ? " (match)" : " (MISMATCH)")
                  << "\n"
                  << "arrow counts:     " << (arrow_match ? "match" : "MISMATCH") << "\n"
                  << "relations:        " << qv.relations.size()
                  << (rel_match ? " (match)" : " (MISMATCH)") << "\n"
                  << "point rep:        " << (point_ok ? "ok" : "FAILS relations") << "\n"
                  << "mc residual zero: " << (mc ? "yes" : "NO") << "\n"
                  << "thin stability:   " << nck::to_string(st) << "\n"
                  << "overall: " << (ok ? "ok" : "MISMATCH") << "\n";
    }
    return ok ? 0 : 4;
}

int run_example_xn(int n, const std::string& format) {
    nck::NcdgData data = nck::presets::xn_instance(n);
    nck::QsqVerdict v = nck::check_q_squared(data);
    std::vector<nck::FreeAlgebraElement> h0 = nck::h0_ideal_generators(data);
    bool h0_match =
        h0.size() == 1 &&
        h0[0] == nck::FreeAlgebraElement::word(std::vector<int>(static_cast<size_t>(n), 0));
    int euler = nck::euler_char_xn(n, 10 * n);
    bool ok = v.ok && h0_match && euler == n;
    if (format == "json") {
        emit(json{{"example", "xn"},
                  {"n", n},
                  {"qsq_ok", v.ok},
                  {"h0_match", h0_match},
                  {"euler", euler},
                  {"match", ok}});
    } else {
        std::cout << "n = " << n << "\n"
                  << "Q^2 = 0:   " << (v.ok ? "yes" : "NO") << "\n"
                  << "H0 ideal:  " << (h0_match ? "{x^n} (match)" : "MISMATCH") << "\n"
                  << "euler:     " << euler << (euler == n ? " (match)" : " (MISMATCH)") << "\n"
                  << "overall: " << (ok ? "ok" : "MISMATCH") << "\n";
    }
    return ok ? 0 : 4;
}

int run_selftest(std::uint64_t seed, const std::string& format) {
    std::vector<nck::SelftestResult> results = nck::run_selftest(seed);
    bool all = true;
    for (const nck::SelftestResult& r : results) all = all && r.ok;
    if (format == "json") {
        json arr = json::array();
        for (const nck::SelftestResult& r : results)
            arr.push_back(json::array({r.name, r.ok}));
        emit(json{{"seed", seed}, {"results", std::move(arr)}, {"ok", all}});
    } else {
        for (const nck::SelftestResult& r : results)
            std::cout << (r.ok ? "ok:   " : "FAIL: ") << r.name << "\n";
        std::cout << (all ? "all checks passed" : "CHECKS FAILED") << "\n";
    }
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact equivariant K-theory of noncommutative virtual structure data"};
    app.require_subcommand(1);

    std::string input, format = "table", which;
    int d = 1, max_n = 6, nval = 2, d_opt = -1;
    std::uint64_t seed = 0;
    long long budget = 100000;

    auto add_common = [&](CLI::App* s, bool need_input) {
        if (need_input) s->add_option("--input", input, "input JSON file")->required();
        s->add_option("--format", format, "output format (json|table)")
            ->check(CLI::IsMember({"json", "table"}));
    };

    CLI::App* c_ncvir = app.add_subcommand("ncvir", "virtual structure class from obstruction data");
    add_common(c_ncvir, true);
    c_ncvir->add_option("--d", d, "series truncation order")->check(CLI::NonNegativeNumber);

    CLI::App* c_schur = app.add_subcommand("schur", "Schur functor of a Z/2-graded character");
    add_common(c_schur, true);

    CLI::App* c_lie = app.add_subcommand("lie", "free super Lie algebra characters");
    add_common(c_lie, true);
    c_lie->add_option("--max-n", max_n, "largest tensor degree")->check(CLI::PositiveNumber);

    CLI::App* c_grfilt = app.add_subcommand("grfilt", "bracket filtration vs Poisson envelope");
    add_common(c_grfilt, true);
    c_grfilt->add_option("--max-n", nval, "tensor degree")->check(CLI::PositiveNumber);
    c_grfilt->add_option("--d", d_opt, "largest filtration degree (default n-1)");
    c_grfilt->add_option("--budget", budget, "word enumeration budget");

    CLI::App* c_qsq = app.add_subcommand("qsq", "check Q^2 = 0 for NCDG input data");
    add_common(c_qsq, true);

    CLI::App* c_quiver = app.add_subcommand("quiver", "quiver with relations from a graded algebra");
    add_common(c_quiver, true);

    CLI::App* c_example = app.add_subcommand("example", "built-in worked examples");
    add_common(c_example, false);
    c_example->add_option("which", which, "one of c3, p2, xn")
        ->required()
        ->check(CLI::IsMember({"c3", "p2", "xn"}));
    c_example->add_option("--n", nval, "parameter for the xn example")->check(CLI::PositiveNumber);

    CLI::App* c_selftest = app.add_subcommand("selftest", "seeded cross-module property sweep");
    add_common(c_selftest, false);
    c_selftest->add_option("--seed", seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (c_ncvir->parsed()) return run_ncvir(input, d, format);
        if (c_schur->parsed()) return run_schur(input, format);
        if (c_lie->parsed()) return run_lie(input, max_n, format);
        if (c_grfilt->parsed()) return run_grfilt(input, nval, d_opt, budget, format);
        if (c_qsq->parsed()) return run_qsq(input, format);
        if (c_quiver->parsed()) return run_quiver(input, format);
        if (c_example->parsed()) {
            if (which == "c3") return run_example_c3(format);
            if (which == "p2") return run_example_p2(format);
            return run_example_xn(nval, format);
        }
        if (c_selftest->parsed()) return run_selftest(seed, format);
    } catch (const nck::SchemaError& ex) {
        std::cerr << "schema error: " << ex.what() << "\n";
        return 2;
    } catch (const nck::BudgetError& ex) {
        std::cerr << "budget exceeded: " << ex.what() << "\n";
        return 3;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
