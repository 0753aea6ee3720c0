#include "nck/freealg.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "nck/charring.hpp"
#include "nck/error.hpp"
#include "nck/freelie.hpp"
#include "nck/linalg.hpp"

namespace nck {

void validate(const GradedGenSet& gens) {
    std::set<std::string> names;
    for (const auto& g : gens.generators) {
        if (g.name.empty()) throw SchemaError("generator name must be nonempty");
        if (!names.insert(g.name).second)
            throw SchemaError("duplicate generator name \"" + g.name + "\"");
    }
}

FreeAlgebraElement FreeAlgebraElement::unit() { return word({}, 1); }
FreeAlgebraElement FreeAlgebraElement::gen(int i) { return word({i}, 1); }

FreeAlgebraElement FreeAlgebraElement::word(std::vector<int> w, Rat c) {
    FreeAlgebraElement out;
    if (c != 0) out.terms.emplace(std::move(w), std::move(c));
    return out;
}

void FreeAlgebraElement::add_term(const std::vector<int>& w, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms.try_emplace(w, c);
    if (!inserted && (it->second += c) == 0) terms.erase(it);
}

FreeAlgebraElement operator+(const FreeAlgebraElement& a, const FreeAlgebraElement& b) {
    FreeAlgebraElement out = a;
    for (const auto& [w, c] : b.terms) out.add_term(w, c);
    return out;
}

FreeAlgebraElement operator-(const FreeAlgebraElement& a, const FreeAlgebraElement& b) {
    FreeAlgebraElement out = a;
    for (const auto& [w, c] : b.terms) out.add_term(w, -c);
    return out;
}

FreeAlgebraElement operator*(const FreeAlgebraElement& a, const FreeAlgebraElement& b) {
    FreeAlgebraElement out;
    for (const auto& [wa, ca] : a.terms) {
        for (const auto& [wb, cb] : b.terms) {
            std::vector<int> w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add_term(w, ca * cb);
        }
    }
    return out;
}

FreeAlgebraElement operator*(const FreeAlgebraElement& a, const Rat& c) {
    FreeAlgebraElement out;
    if (c == 0) return out;
    for (const auto& [w, k] : a.terms) out.terms.emplace(w, k * c);
    return out;
}

FreeAlgebraElement& operator+=(FreeAlgebraElement& a, const FreeAlgebraElement& b) {
    for (const auto& [w, c] : b.terms) a.add_term(w, c);
    return a;
}

int homogeneous_degree(const FreeAlgebraElement& x, const GradedGenSet& gens) {
    bool first = true;
    int deg = 0;
    for (const auto& [w, c] : x.terms) {
        int d = 0;
        for (int i : w) {
            if (i < 0 || i >= gens.size()) throw SchemaError("word refers to unknown generator");
            d += gens.degree(i);
        }
        if (first) {
            deg = d;
            first = false;
        } else if (d != deg) {
            throw SchemaError("element is not homogeneous in the grading");
        }
    }
    return deg;
}

FreeAlgebraElement super_commutator(const FreeAlgebraElement& x, const FreeAlgebraElement& y,
                                    const GradedGenSet& gens) {
    int dx = homogeneous_degree(x, gens);
    int dy = homogeneous_degree(y, gens);
    int sign = (dx % 2 != 0 && dy % 2 != 0) ? -1 : 1;
    return x * y - (y * x) * Rat(sign);
}

std::string to_string(const FreeAlgebraElement& x, const GradedGenSet& gens) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : x.terms) {
        Rat abs_c = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (abs_c != 1 || w.empty()) {
            os << to_string(abs_c);
            if (!w.empty()) os << "*";
        }
        for (size_t i = 0; i < w.size(); ++i) {
            if (i) os << "*";
            os << gens.generators[static_cast<size_t>(w[i])].name;
        }
    }
    return os.str();
}

namespace {

long long checked_pow(long long base, int n, long long budget, const char* who) {
    long long v = 1;
    for (int i = 0; i < n; ++i) {
        v *= base;
        if (v > budget)
            throw BudgetError(std::string(who) + ": " + std::to_string(base) + "^" +
                              std::to_string(n) + " words exceed budget " + std::to_string(budget));
    }
    return v;
}

size_t word_column(const std::vector<int>& w, long long gens) {
    size_t c = 0;
    for (int letter : w) c = c * static_cast<size_t>(gens) + static_cast<size_t>(letter);
    return c;
}

// left-normed bracket [[..[g_{s0},g_{s1}],..],g_{sk}]
FreeAlgebraElement left_normed(const std::vector<int>& seq, const GradedGenSet& gens) {
    FreeAlgebraElement b = FreeAlgebraElement::gen(seq[0]);
    for (size_t t = 1; t < seq.size(); ++t)
        b = super_commutator(b, FreeAlgebraElement::gen(seq[t]), gens);
    return b;
}

// enumerate factor shapes: split n into ordered segments, each segment of
// size 1 a plain letter and of size ≥ 2 a left-normed bracket over every
// generator sequence; group resulting rows by total excess Σ(size−1)
void enumerate_products(const GradedGenSet& gens, int n, int pos, int excess,
                        const FreeAlgebraElement& acc,
                        std::vector<std::vector<FreeAlgebraElement>>& by_excess) {
    if (pos == n) {
        by_excess[static_cast<size_t>(excess)].push_back(acc);
        return;
    }
    int G = gens.size();
    for (int s = 1; pos + s <= n; ++s) {
        std::vector<int> seq(static_cast<size_t>(s), 0);
        while (true) {
            FreeAlgebraElement factor =
                s == 1 ? FreeAlgebraElement::gen(seq[0]) : left_normed(seq, gens);
            if (!factor.is_zero())
                enumerate_products(gens, n, pos + s, excess + s - 1, acc * factor, by_excess);
            int t = s - 1;
            while (t >= 0 && seq[static_cast<size_t>(t)] == G - 1) {
                seq[static_cast<size_t>(t)] = 0;
                --t;
            }
            if (t < 0) break;
            ++seq[static_cast<size_t>(t)];
        }
    }
}

} // namespace

FiltrationReport nc_filtration_dims(const GradedGenSet& gens, int tensor_degree, int max_d,
                                    long long budget) {
    validate(gens);
    if (tensor_degree < 0) throw SchemaError("nc_filtration_dims: negative tensor degree");
    if (max_d < 0) throw SchemaError("nc_filtration_dims: negative max_d");
    FiltrationReport report;
    report.n = tensor_degree;
    if (tensor_degree == 0) {
        report.dims.emplace_back(0, 1);
        for (int d = 1; d <= max_d; ++d) report.dims.emplace_back(d, 0);
        return report;
    }
    long long G = gens.size();
    if (G == 0) {
        for (int d = 0; d <= max_d; ++d) report.dims.emplace_back(d, 0);
        return report;
    }
    long long words = checked_pow(G, tensor_degree, budget, "nc_filtration_dims");

    std::vector<std::vector<FreeAlgebraElement>> by_excess(static_cast<size_t>(tensor_degree));
    enumerate_products(gens, tensor_degree, 0, 0, FreeAlgebraElement::unit(), by_excess);

    // descending excess: after consuming excess ≥ d the reducer rank is dim F^d
    std::vector<long long> dim_f(static_cast<size_t>(tensor_degree) + 1, 0);
    RowReducer red(static_cast<size_t>(words));
    for (int e = tensor_degree - 1; e >= 0; --e) {
        for (const auto& elem : by_excess[static_cast<size_t>(e)]) {
            SparseRow row;
            for (const auto& [w, c] : elem.terms) row.emplace(word_column(w, G), c);
            red.add_row(std::move(row));
        }
        dim_f[static_cast<size_t>(e)] = red.rank();
    }
    for (int d = 0; d <= max_d; ++d) {
        long long fd = d <= tensor_degree ? dim_f[static_cast<size_t>(d)] : 0;
        long long fd1 = d + 1 <= tensor_degree ? dim_f[static_cast<size_t>(d) + 1] : 0;
        report.dims.emplace_back(d, fd - fd1);
    }
    return report;
}

FiltrationReport poisson_envelope_dims(const GradedGenSet& gens, int tensor_degree, int max_d) {
    validate(gens);
    if (tensor_degree < 0) throw SchemaError("poisson_envelope_dims: negative tensor degree");
    if (max_d < 0) throw SchemaError("poisson_envelope_dims: negative max_d");
    FiltrationReport report;
    report.n = tensor_degree;
    if (tensor_degree == 0) {
        report.dims.emplace_back(0, 1);
        for (int d = 1; d <= max_d; ++d) report.dims.emplace_back(d, 0);
        return report;
    }

    // one auxiliary variable t tracks tensor degree; parities from |_•-degrees
    SuperChar w(1);
    for (const auto& g : gens.generators) {
        Character t = Character::var(1, 0);
        if (g.degree % 2 == 0) w.even += t;
        else w.odd += t;
    }
    int n = tensor_degree;
    SuperChar unit(1);
    unit.even = Character::constant(1, 1);

    LieCharTable lie = lie_char_table(w, n);
    int top_d = std::min(max_d, n - 1);
    // series[u] = u-degree-u coefficient of Π_m σ_{u^{m-1}}(Lie_m), t ≤ n
    std::vector<SuperChar> series(static_cast<size_t>(top_d) + 1, SuperChar(1));
    series[0] = unit;
    for (int m = 1; m <= n; ++m) {
        const SuperChar& lm = lie.piece(m);
        int ustep = m - 1;
        std::vector<SuperChar> next(static_cast<size_t>(top_d) + 1, SuperChar(1));
        for (int k = 0; k * m <= n && k * ustep <= top_d; ++k) {
            SuperChar sk = sym_power(k, lm);
            sk.even = truncate_degree(sk.even, n);
            sk.odd = truncate_degree(sk.odd, n);
            for (int u = k * ustep; u <= top_d; ++u) {
                SuperChar prod = series[static_cast<size_t>(u - k * ustep)] * sk;
                prod.even = truncate_degree(prod.even, n);
                prod.odd = truncate_degree(prod.odd, n);
                next[static_cast<size_t>(u)] = next[static_cast<size_t>(u)] + prod;
            }
        }
        series = std::move(next);
    }
    for (int d = 0; d <= max_d; ++d) {
        long long dim = 0;
        if (d <= top_d) {
            Character total = underlying(series[static_cast<size_t>(d)]);
            Expvec e{n};
            auto it = total.terms.find(e);
            if (it != total.terms.end()) dim = static_cast<long long>(it->second);
        }
        report.dims.emplace_back(d, dim);
    }
    return report;
}

} // namespace nck
