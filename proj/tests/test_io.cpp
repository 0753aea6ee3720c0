#include "doctest.h"

#include <string>

#include "nck/error.hpp"
#include "nck/io.hpp"
#include "nck/presets.hpp"

using nck::Character;
using nck::Int;
using nck::Rat;
using json = nlohmann::json;

TEST_CASE("character round trip, including huge coefficients") {
    Character a(2);
    a.add_term({1, -2}, Int(3));
    Int big("123456789012345678901234567890");
    a.add_term({0, 0}, big);
    json j = nck::io::to_json(a);
    CHECK(nck::io::character_from_json(j) == a);
    // the big coefficient travels as a decimal string, the small as a number
    bool saw_string = false, saw_number = false;
    for (const auto& term : j.at("terms")) {
        if (term.at(1).is_string()) saw_string = true;
        if (term.at(1).is_number()) saw_number = true;
    }
    CHECK(saw_string);
    CHECK(saw_number);

    // parser accepts both spellings of the same coefficient
    json alt = json::parse(R"({"nvars":1,"terms":[[[2],"7"],[[0],7]]})");
    Character b = nck::io::character_from_json(alt);
    CHECK(b.terms.at({2}) == Int(7));
    CHECK(b.terms.at({0}) == Int(7));
}

TEST_CASE("super, rational, partition, obstruction round trips") {
    nck::presets::C3Example ex = nck::presets::c3();
    json g = nck::io::to_json(ex.ot.e);
    CHECK(nck::io::superchar_from_json(g) == ex.ot.e);

    json r = nck::io::to_json(ex.ot.ovir);
    nck::RationalCharacter rr = nck::io::rational_character_from_json(r);
    CHECK(rr.num == ex.ot.ovir.num);
    CHECK(rr.den == ex.ot.ovir.den);

    json p = nck::io::to_json(nck::Partition({3, 1, 1}));
    CHECK(nck::io::partition_from_json(p) == nck::Partition({3, 1, 1}));

    json ot = nck::io::to_json(ex.ot);
    nck::ObstructionTheory back = nck::io::obstruction_from_json(ot);
    CHECK(back.e == ex.ot.e);
    CHECK(back.ovir.num == ex.ot.ovir.num);
    CHECK(back.ovir.den == ex.ot.ovir.den);
}

TEST_CASE("free algebra elements serialize against their generator set") {
    nck::GradedGenSet gens;
    gens.generators = {{"x", 0}, {"th", 1}};
    nck::FreeAlgebraElement e =
        nck::FreeAlgebraElement::word({0, 1}, Rat(-5, 3)) + nck::FreeAlgebraElement::unit();
    json j = nck::io::to_json(e, gens);
    CHECK(nck::io::element_from_json(j, gens) == e);
    // words are spelled with generator names
    CHECK(j.dump().find("\"x\"") != std::string::npos);

    json gj = nck::io::to_json(gens);
    nck::GradedGenSet gens2 = nck::io::genset_from_json(gj);
    CHECK(gens2.generators.size() == 2);
    CHECK(gens2.generators[1].name == "th");
    CHECK(gens2.generators[1].degree == 1);

    json badword = json::parse(R"([[["nope"],"1"]])");
    CHECK_THROWS_AS(nck::io::element_from_json(badword, gens), nck::SchemaError);
}

TEST_CASE("ncdg data and verdict round trips") {
    for (const nck::NcdgData& d :
         {nck::presets::p2_ncdg(), nck::presets::xn_instance(3),
          nck::presets::random_associative_ncdg(5)}) {
        json j = nck::io::to_json(d);
        nck::NcdgData back = nck::io::ncdg_from_json(j);
        CHECK(nck::io::to_json(back) == j);
        CHECK(nck::check_q_squared(back).ok == nck::check_q_squared(d).ok);
    }
    nck::NcdgData mut = nck::presets::nonassociative_mutant(11);
    nck::QsqVerdict v = nck::check_q_squared(mut);
    nck::Differential dq = nck::build_q(mut);
    json vj = nck::io::qsq_verdict_to_json(v, dq.letters);
    CHECK(vj.at("ok") == false);
    CHECK(vj.at("witness").at("generator") == v.generator);
    CHECK(!vj.at("witness").at("residue").empty());
}

TEST_CASE("presentation, quiver, rep round trips") {
    nck::GradedAlgebraPresentation a = nck::presets::p2_presentation();
    json aj = nck::io::to_json(a);
    nck::GradedAlgebraPresentation a2 = nck::io::presentation_from_json(aj);
    CHECK(nck::io::to_json(a2) == aj);

    nck::Quiver qv = build_quiver(a);
    json qj = nck::io::to_json(qv);
    nck::Quiver qv2 = nck::io::quiver_from_json(qj);
    CHECK(nck::io::to_json(qv2) == qj);
    CHECK(qv2.arrows.size() == qv.arrows.size());
    CHECK(qv2.relations.size() == qv.relations.size());

    nck::Rep pt = nck::presets::p2_point_rep(qv);
    json rj = nck::io::to_json(pt);
    nck::Rep pt2 = nck::io::rep_from_json(rj);
    CHECK(nck::io::to_json(pt2) == rj);
    CHECK(satisfies_relations(pt2, qv2));
}

TEST_CASE("filtration report round trip") {
    nck::GradedGenSet g;
    g.generators = {{"w1", 0}, {"w2", 1}};
    nck::FiltrationReport rep = nck::nc_filtration_dims(g, 3, 2);
    json j = nck::io::to_json(rep);
    nck::FiltrationReport back = nck::io::filtration_from_json(j);
    CHECK(back.n == rep.n);
    CHECK(back.dims == rep.dims);
}

TEST_CASE("malformed input is a schema error, not a crash") {
    CHECK_THROWS_AS(nck::io::parse_text("{nope"), nck::SchemaError);
    CHECK_THROWS_AS(nck::io::parse_file("/no/such/file.json"), nck::SchemaError);
    CHECK_THROWS_AS(nck::io::character_from_json(json::parse("[]")), nck::SchemaError);
    CHECK_THROWS_AS(nck::io::character_from_json(json::parse(R"({"nvars":2})")),
                    nck::SchemaError);
    CHECK_THROWS_AS(
        nck::io::character_from_json(json::parse(R"({"nvars":2,"terms":[[[1],1]]})")),
        nck::SchemaError);  // exponent arity mismatch
    CHECK_THROWS_AS(
        nck::io::character_from_json(json::parse(R"({"nvars":1,"terms":[[[1],"x"]]})")),
        nck::SchemaError);
    CHECK_THROWS_AS(nck::io::partition_from_json(json::parse("[2,3]")), nck::SchemaError);
    CHECK_THROWS_AS(nck::io::rational_character_from_json(
                        json::parse(R"({"num":{"nvars":0,"terms":[[[],1]]}})")),
                    nck::SchemaError);

    // rationals must be p/q strings or integers
    nck::GradedGenSet gens;
    gens.generators = {{"x", 0}};
    CHECK(nck::io::element_from_json(json::parse(R"([[["x"],2]])"), gens) ==
          nck::FreeAlgebraElement::word({0}, Rat(2)));
    CHECK_THROWS_AS(nck::io::element_from_json(json::parse(R"([[["x"],2.5]])"), gens),
                    nck::SchemaError);
    CHECK_THROWS_AS(nck::io::element_from_json(json::parse(R"([[["x"],"2/0"]])"), gens),
                    nck::SchemaError);
}

TEST_CASE("emission is deterministic") {
    nck::NcdgData d = nck::presets::p2_ncdg();
    CHECK(nck::io::to_json(d).dump(2) == nck::io::to_json(nck::presets::p2_ncdg()).dump(2));
    nck::presets::C3Example ex = nck::presets::c3();
    CHECK(nck::io::to_json(ex.ot).dump() == nck::io::to_json(nck::presets::c3().ot).dump());
}
