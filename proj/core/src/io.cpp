#include "nck/io.hpp"

#include <cstdint>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "nck/error.hpp"

namespace nck::io {

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object()) throw SchemaError(std::string("expected an object with field \"") + key + "\"");
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(std::string("missing field \"") + key + "\"");
    return *it;
}

int as_int(const json& j, const char* what) {
    if (!j.is_number_integer()) throw SchemaError(std::string(what) + " must be an integer");
    auto v = j.get<std::int64_t>();
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
        throw SchemaError(std::string(what) + " out of range");
    return static_cast<int>(v);
}

std::string as_string(const json& j, const char* what) {
    if (!j.is_string()) throw SchemaError(std::string(what) + " must be a string");
    return j.get<std::string>();
}

const json& as_array(const json& j, const char* what) {
    if (!j.is_array()) throw SchemaError(std::string(what) + " must be an array");
    return j;
}

json int_to_json(const Int& c) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (c >= lo && c <= hi) return static_cast<std::int64_t>(c);
    return c.str();
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
    if (j.is_string()) return parse_int(j.get<std::string>());
    throw SchemaError("coefficient must be an integer or a decimal string");
}

json rat_to_json(const Rat& c) { return to_string(c); }

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
    if (j.is_number_unsigned()) return Rat(Int(j.get<std::uint64_t>()));
    if (j.is_string()) return parse_rat(j.get<std::string>());
    throw SchemaError("rational must be a \"p/q\" string or an integer");
}

std::map<std::string, int> name_index(const GradedGenSet& gens) {
    std::map<std::string, int> idx;
    for (int i = 0; i < gens.size(); ++i)
        idx[gens.generators[static_cast<size_t>(i)].name] = i;
    return idx;
}

} // namespace

json to_json(const Character& a) {
    json terms = json::array();
    for (const auto& [e, c] : a.terms) terms.push_back(json::array({e, int_to_json(c)}));
    return json{{"nvars", a.nvars}, {"terms", std::move(terms)}};
}

Character character_from_json(const json& j) {
    int nv = as_int(field(j, "nvars"), "nvars");
    if (nv < 0) throw SchemaError("nvars must be nonnegative");
    Character a(nv);
    for (const json& t : as_array(field(j, "terms"), "terms")) {
        const json& arr = as_array(t, "character term");
        if (arr.size() != 2) throw SchemaError("character term must be [exponents, coefficient]");
        const json& je = as_array(arr[0], "exponent vector");
        if (static_cast<int>(je.size()) != nv)
            throw SchemaError("exponent vector length must equal nvars");
        Expvec e;
        e.reserve(je.size());
        for (const json& x : je) e.push_back(as_int(x, "exponent"));
        a.add_term(e, int_from_json(arr[1]));
    }
    return a;
}

json to_json(const SuperChar& g) {
    return json{{"even", to_json(g.even)}, {"odd", to_json(g.odd)}};
}

SuperChar superchar_from_json(const json& j) {
    Character even = character_from_json(field(j, "even"));
    Character odd = character_from_json(field(j, "odd"));
    if (even.nvars != odd.nvars) throw SchemaError("even and odd parts use different nvars");
    return SuperChar(std::move(even), std::move(odd));
}

json to_json(const RationalCharacter& r) {
    return json{{"num", to_json(r.num)}, {"den", to_json(r.den)}};
}

RationalCharacter rational_character_from_json(const json& j) {
    Character num = character_from_json(field(j, "num"));
    Character den = character_from_json(field(j, "den"));
    if (num.nvars != den.nvars) throw SchemaError("num and den use different nvars");
    if (den.is_zero()) throw SchemaError("zero denominator");
    return RationalCharacter(std::move(num), std::move(den));
}

json to_json(const Partition& p) { return json(p.parts); }

Partition partition_from_json(const json& j) {
    std::vector<int> parts;
    for (const json& x : as_array(j, "partition")) parts.push_back(as_int(x, "partition part"));
    return Partition(std::move(parts));
}

json to_json(const ObstructionTheory& ot) {
    return json{{"e", to_json(ot.e)}, {"ovir", to_json(ot.ovir)}};
}

ObstructionTheory obstruction_from_json(const json& j) {
    ObstructionTheory ot;
    ot.e = superchar_from_json(field(j, "e"));
    ot.ovir = rational_character_from_json(field(j, "ovir"));
    if (ot.e.nvars() != ot.ovir.num.nvars)
        throw SchemaError("e and ovir use different nvars");
    return ot;
}

json to_json(const GradedGenSet& gens) {
    json arr = json::array();
    for (const GeneratorInfo& g : gens.generators)
        arr.push_back(json::array({g.name, g.degree}));
    return arr;
}

GradedGenSet genset_from_json(const json& j) {
    GradedGenSet gens;
    for (const json& t : as_array(j, "generator list")) {
        const json& arr = as_array(t, "generator");
        if (arr.size() != 2) throw SchemaError("generator must be [name, degree]");
        gens.generators.push_back({as_string(arr[0], "generator name"),
                                   as_int(arr[1], "generator degree")});
    }
    validate(gens);
    return gens;
}

json to_json(const FreeAlgebraElement& x, const GradedGenSet& gens) {
    json arr = json::array();
    for (const auto& [w, c] : x.terms) {
        json word = json::array();
        for (int l : w) {
            if (l < 0 || l >= gens.size()) throw SchemaError("word letter out of range");
            word.push_back(gens.generators[static_cast<size_t>(l)].name);
        }
        arr.push_back(json::array({std::move(word), rat_to_json(c)}));
    }
    return arr;
}

FreeAlgebraElement element_from_json(const json& j, const GradedGenSet& gens) {
    auto idx = name_index(gens);
    FreeAlgebraElement x;
    for (const json& t : as_array(j, "element")) {
        const json& arr = as_array(t, "element term");
        if (arr.size() != 2) throw SchemaError("element term must be [word, coefficient]");
        std::vector<int> w;
        for (const json& l : as_array(arr[0], "word")) {
            auto it = idx.find(as_string(l, "word letter"));
            if (it == idx.end())
                throw SchemaError("unknown generator \"" + l.get<std::string>() + "\" in word");
            w.push_back(it->second);
        }
        x.add_term(w, rat_from_json(arr[1]));
    }
    return x;
}

json to_json(const FiltrationReport& r) {
    json dims = json::array();
    for (const auto& [d, dim] : r.dims) dims.push_back(json::array({d, dim}));
    return json{{"n", r.n}, {"dims", std::move(dims)}};
}

FiltrationReport filtration_from_json(const json& j) {
    FiltrationReport r;
    r.n = as_int(field(j, "n"), "n");
    for (const json& t : as_array(field(j, "dims"), "dims")) {
        const json& arr = as_array(t, "dims entry");
        if (arr.size() != 2) throw SchemaError("dims entry must be [d, dim]");
        if (!arr[1].is_number_integer()) throw SchemaError("dim must be an integer");
        r.dims.emplace_back(as_int(arr[0], "d"), arr[1].get<long long>());
    }
    return r;
}

json to_json(const NcdgData& d) {
    json r_gens = json::array();
    for (const GeneratorInfo& g : d.r_gens.generators) r_gens.push_back(g.name);
    json m_basis = json::array();
    for (const MBasisElem& m : d.m_basis) m_basis.push_back(json::array({m.name, m.weight}));
    json p_basis = json::array();
    for (const PBasisElem& p : d.p_basis) p_basis.push_back(json::array({p.name, p.degree}));
    json theta = json::array();
    for (const auto& [ab, targets] : d.theta) {
        json combo = json::array();
        for (const auto& [tgt, c] : targets) combo.push_back(json::array({tgt, rat_to_json(c)}));
        theta.push_back(json::array({ab.first, ab.second, std::move(combo)}));
    }
    json e_hat = json::array();
    for (const auto& mat : d.e_hat) {
        json entries = json::array();
        for (const auto& [rc, elem] : mat)
            entries.push_back(json::array({rc.first, rc.second, to_json(elem, d.r_gens)}));
        e_hat.push_back(std::move(entries));
    }
    return json{{"name", d.name},         {"r_gens", std::move(r_gens)},
                {"m_basis", std::move(m_basis)}, {"theta", std::move(theta)},
                {"p_basis", std::move(p_basis)}, {"e_hat", std::move(e_hat)},
                {"max_word_len", d.max_word_len}};
}

NcdgData ncdg_from_json(const json& j) {
    NcdgData d;
    if (j.is_object() && j.contains("name")) d.name = as_string(field(j, "name"), "name");
    for (const json& g : as_array(field(j, "r_gens"), "r_gens"))
        d.r_gens.generators.push_back({as_string(g, "r generator name"), 0});
    for (const json& t : as_array(field(j, "m_basis"), "m_basis")) {
        const json& arr = as_array(t, "m-basis element");
        if (arr.size() != 2) throw SchemaError("m-basis element must be [name, weight]");
        d.m_basis.push_back({as_string(arr[0], "m name"), as_int(arr[1], "m weight")});
    }
    for (const json& t : as_array(field(j, "theta"), "theta")) {
        const json& arr = as_array(t, "theta entry");
        if (arr.size() != 3) throw SchemaError("theta entry must be [i, j, combination]");
        std::map<int, Rat> combo;
        for (const json& c : as_array(arr[2], "theta combination")) {
            const json& pr = as_array(c, "theta term");
            if (pr.size() != 2) throw SchemaError("theta term must be [target, coefficient]");
            combo[as_int(pr[0], "theta target")] = rat_from_json(pr[1]);
        }
        d.theta[{as_int(arr[0], "theta row"), as_int(arr[1], "theta col")}] = std::move(combo);
    }
    for (const json& t : as_array(field(j, "p_basis"), "p_basis")) {
        const json& arr = as_array(t, "P-basis element");
        if (arr.size() != 2) throw SchemaError("P-basis element must be [name, degree]");
        d.p_basis.push_back({as_string(arr[0], "P name"), as_int(arr[1], "P degree")});
    }
    for (const json& mat : as_array(field(j, "e_hat"), "e_hat")) {
        std::map<std::pair<int, int>, FreeAlgebraElement> entries;
        for (const json& t : as_array(mat, "e_hat matrix")) {
            const json& arr = as_array(t, "e_hat entry");
            if (arr.size() != 3) throw SchemaError("e_hat entry must be [row, col, element]");
            entries[{as_int(arr[0], "row"), as_int(arr[1], "col")}] =
                element_from_json(arr[2], d.r_gens);
        }
        d.e_hat.push_back(std::move(entries));
    }
    if (j.is_object() && j.contains("max_word_len"))
        d.max_word_len = as_int(field(j, "max_word_len"), "max_word_len");
    validate(d);
    return d;
}

json to_json(const GradedAlgebraPresentation& a) {
    json theta = json::array();
    for (const auto& [ij, block] : a.theta) {
        json entries = json::array();
        for (const auto& [ab, targets] : block) {
            json combo = json::array();
            for (const auto& [tgt, c] : targets)
                combo.push_back(json::array({tgt, rat_to_json(c)}));
            entries.push_back(json::array({ab.first, ab.second, std::move(combo)}));
        }
        theta.push_back(json::array({ij.first, ij.second, std::move(entries)}));
    }
    return json{{"p", a.p}, {"q", a.q}, {"dims", a.dims}, {"theta", std::move(theta)}};
}

GradedAlgebraPresentation presentation_from_json(const json& j) {
    GradedAlgebraPresentation a;
    a.p = as_int(field(j, "p"), "p");
    a.q = as_int(field(j, "q"), "q");
    for (const json& d : as_array(field(j, "dims"), "dims"))
        a.dims.push_back(as_int(d, "dimension"));
    for (const json& t : as_array(field(j, "theta"), "theta")) {
        const json& arr = as_array(t, "theta block");
        if (arr.size() != 3) throw SchemaError("theta block must be [i, j, entries]");
        auto& block = a.theta[{as_int(arr[0], "theta i"), as_int(arr[1], "theta j")}];
        for (const json& e : as_array(arr[2], "theta entries")) {
            const json& ent = as_array(e, "theta entry");
            if (ent.size() != 3) throw SchemaError("theta entry must be [alpha, beta, combination]");
            auto& combo = block[{as_int(ent[0], "alpha"), as_int(ent[1], "beta")}];
            for (const json& c : as_array(ent[2], "theta combination")) {
                const json& pr = as_array(c, "theta term");
                if (pr.size() != 2) throw SchemaError("theta term must be [target, coefficient]");
                combo[as_int(pr[0], "theta target")] = rat_from_json(pr[1]);
            }
        }
    }
    validate(a);
    return a;
}

json to_json(const Quiver& qv) {
    json arrows = json::array();
    for (const Arrow& a : qv.arrows) arrows.push_back(json::array({a.tail, a.head, a.basis}));
    json relations = json::array();
    for (const PathElement& r : qv.relations) {
        json rel = json::array();
        for (const auto& [path, c] : r.terms) rel.push_back(json::array({path, rat_to_json(c)}));
        relations.push_back(std::move(rel));
    }
    return json{{"p", qv.p}, {"q", qv.q}, {"arrows", std::move(arrows)},
                {"relations", std::move(relations)}};
}

Quiver quiver_from_json(const json& j) {
    Quiver qv;
    qv.p = as_int(field(j, "p"), "p");
    qv.q = as_int(field(j, "q"), "q");
    for (const json& t : as_array(field(j, "arrows"), "arrows")) {
        const json& arr = as_array(t, "arrow");
        if (arr.size() != 3) throw SchemaError("arrow must be [tail, head, basis]");
        qv.arrows.push_back({as_int(arr[0], "tail"), as_int(arr[1], "head"),
                             as_int(arr[2], "basis")});
    }
    for (const json& t : as_array(field(j, "relations"), "relations")) {
        PathElement rel;
        for (const json& term : as_array(t, "relation")) {
            const json& pr = as_array(term, "relation term");
            if (pr.size() != 2) throw SchemaError("relation term must be [path, coefficient]");
            std::vector<int> path;
            for (const json& s : as_array(pr[0], "path"))
                path.push_back(as_int(s, "path step"));
            for (int s : path)
                if (s < 0 || s >= static_cast<int>(qv.arrows.size()))
                    throw SchemaError("path step out of range");
            Rat c = rat_from_json(pr[1]);
            if (c != 0) rel.terms[path] += c;
        }
        qv.relations.push_back(std::move(rel));
    }
    return qv;
}

json to_json(const Rep& rep) {
    json mats = json::array();
    for (const Matrix& m : rep.mats) {
        json rows = json::array();
        for (const auto& row : m) {
            json r = json::array();
            for (const Rat& v : row) r.push_back(rat_to_json(v));
            rows.push_back(std::move(r));
        }
        mats.push_back(std::move(rows));
    }
    return json{{"gamma", rep.gamma}, {"mats", std::move(mats)}};
}

Rep rep_from_json(const json& j) {
    Rep rep;
    for (const json& g : as_array(field(j, "gamma"), "gamma"))
        rep.gamma.push_back(as_int(g, "gamma entry"));
    for (const json& m : as_array(field(j, "mats"), "mats")) {
        Matrix mat;
        for (const json& row : as_array(m, "matrix")) {
            std::vector<Rat> r;
            for (const json& v : as_array(row, "matrix row")) r.push_back(rat_from_json(v));
            mat.push_back(std::move(r));
        }
        for (const auto& row : mat)
            if (row.size() != mat[0].size()) throw SchemaError("ragged matrix");
        rep.mats.push_back(std::move(mat));
    }
    return rep;
}

json qsq_verdict_to_json(const QsqVerdict& v, const GradedGenSet& letters) {
    json out{{"ok", v.ok}};
    if (!v.ok)
        out["witness"] = json{{"generator", v.generator},
                              {"residue", to_json(v.residue, letters)}};
    return out;
}

json parse_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw SchemaError("malformed JSON input");
    return j;
}

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_text(ss.str());
}

} // namespace nck::io
