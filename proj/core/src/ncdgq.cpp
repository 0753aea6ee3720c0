#include "nck/ncdgq.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "nck/error.hpp"

namespace nck {

namespace {

int m_weight(const NcdgData& d, int a) { return d.m_basis[static_cast<size_t>(a)].weight; }
int p_degree(const NcdgData& d, int i) { return d.p_basis[static_cast<size_t>(i)].degree; }

int word_weight(const NcdgData& d, const std::vector<int>& w) {
    int s = 0;
    for (int a : w) s += m_weight(d, a);
    return s;
}

using RMatrix = std::map<std::pair<int, int>, FreeAlgebraElement>;

const RMatrix& e_hat_of(const NcdgData& d, int a) { return d.e_hat[static_cast<size_t>(a)]; }

RMatrix mat_mul(const RMatrix& A, const RMatrix& B) {
    RMatrix out;
    for (const auto& [ij, a] : A) {
        for (const auto& [jk, b] : B) {
            if (ij.second != jk.first) continue;
            auto key = std::make_pair(ij.first, jk.second);
            auto it = out.find(key);
            FreeAlgebraElement prod = a * b;
            if (it == out.end()) out.emplace(key, std::move(prod));
            else it->second += prod;
        }
    }
    return out;
}

RMatrix mat_add_scaled(RMatrix acc, const RMatrix& B, const Rat& c) {
    for (const auto& [key, b] : B) {
        auto it = acc.find(key);
        if (it == acc.end()) acc.emplace(key, b * c);
        else it->second += b * c;
    }
    return acc;
}

std::map<int, Rat> theta_of(const NcdgData& d, int i, int j) {
    auto it = d.theta.find({i, j});
    return it == d.theta.end() ? std::map<int, Rat>{} : it->second;
}

// ê applied to the ϑ-product of two m-basis elements
RMatrix e_hat_of_product(const NcdgData& d, int i, int j) {
    RMatrix out;
    for (const auto& [c, coeff] : theta_of(d, i, j))
        out = mat_add_scaled(std::move(out), e_hat_of(d, c), coeff);
    return out;
}

} // namespace

void validate(const NcdgData& data) {
    validate(data.r_gens);
    for (const auto& g : data.r_gens.generators)
        if (g.degree != 0) throw SchemaError("r generators must have |_.|-degree 0");
    std::set<std::string> names;
    for (const auto& m : data.m_basis) {
        if (m.weight < 1) throw SchemaError("m-basis weights must be >= 1");
        if (m.name.empty() || !names.insert(m.name).second)
            throw SchemaError("m-basis names must be unique and nonempty");
    }
    names.clear();
    for (const auto& p : data.p_basis)
        if (p.name.empty() || !names.insert(p.name).second)
            throw SchemaError("p-basis names must be unique and nonempty");

    int M = static_cast<int>(data.m_basis.size());
    int P = static_cast<int>(data.p_basis.size());
    for (const auto& [key, combo] : data.theta) {
        auto [i, j] = key;
        if (i < 0 || i >= M || j < 0 || j >= M)
            throw SchemaError("theta: m-basis index out of range");
        for (const auto& [c, coeff] : combo) {
            if (c < 0 || c >= M) throw SchemaError("theta: target index out of range");
            if (coeff != 0 && m_weight(data, c) != m_weight(data, i) + m_weight(data, j))
                throw SchemaError("theta does not respect weights at (" +
                                  data.m_basis[static_cast<size_t>(i)].name + ", " +
                                  data.m_basis[static_cast<size_t>(j)].name + ")");
        }
    }
    if (data.e_hat.size() != data.m_basis.size())
        throw SchemaError("e_hat must list one matrix per m-basis element");
    for (int a = 0; a < M; ++a) {
        for (const auto& [rc, entry] : data.e_hat[static_cast<size_t>(a)]) {
            auto [row, col] = rc;
            if (row < 0 || row >= P || col < 0 || col >= P)
                throw SchemaError("e_hat: p-basis index out of range");
            if (entry.is_zero()) continue;
            if (p_degree(data, row) != p_degree(data, col) + m_weight(data, a))
                throw SchemaError("e_hat(" + data.m_basis[static_cast<size_t>(a)].name +
                                  ") is not grade preserving at entry (" +
                                  data.p_basis[static_cast<size_t>(row)].name + ", " +
                                  data.p_basis[static_cast<size_t>(col)].name + ")");
            for (const auto& [w, c] : entry.terms)
                for (int letter : w)
                    if (letter < 0 || letter >= data.r_gens.size())
                        throw SchemaError("e_hat entry refers to unknown R generator");
        }
    }
    if (data.max_word_len < 2) throw SchemaError("max_word_len must be >= 2");
}

std::string pgen_name(const NcdgData& data, const PGen& g) {
    std::ostringstream os;
    os << "(" << data.p_basis[static_cast<size_t>(g.f)].name << "*|";
    for (size_t i = 0; i < g.word.size(); ++i) {
        if (i) os << ",";
        os << data.m_basis[static_cast<size_t>(g.word[i])].name;
    }
    os << "|" << data.p_basis[static_cast<size_t>(g.x)].name << ")";
    return os.str();
}

int Differential::letter_index(const PGen& g) const {
    auto it = std::lower_bound(pgens.begin(), pgens.end(), g);
    if (it == pgens.end() || !(*it == g))
        throw SchemaError("unknown generator " + pgen_name(data, g));
    return data.r_gens.size() + static_cast<int>(it - pgens.begin());
}

const FreeAlgebraElement& Differential::q_of(const PGen& g) const {
    return q_letters[static_cast<size_t>(letter_index(g))];
}

FreeAlgebraElement Differential::apply(const FreeAlgebraElement& x) const {
    FreeAlgebraElement out;
    for (const auto& [w, c] : x.terms) {
        int sign = 1;
        for (size_t pos = 0; pos < w.size(); ++pos) {
            int letter = w[pos];
            const FreeAlgebraElement& ql = q_letters[static_cast<size_t>(letter)];
            if (!ql.is_zero()) {
                FreeAlgebraElement mid =
                    FreeAlgebraElement::word(std::vector<int>(w.begin(), w.begin() + static_cast<long>(pos)),
                                             c * sign) *
                    ql *
                    FreeAlgebraElement::word(std::vector<int>(w.begin() + static_cast<long>(pos) + 1, w.end()));
                out += mid;
            }
            if (letters.degree(letter) % 2 != 0) sign = -sign;
        }
    }
    return out;
}

Differential build_q(const NcdgData& data) {
    validate(data);
    Differential d;
    d.data = data;

    int M = static_cast<int>(data.m_basis.size());
    int P = static_cast<int>(data.p_basis.size());
    for (int n = 2; M > 0 && n <= data.max_word_len; ++n) {
        std::vector<int> word(static_cast<size_t>(n), 0);
        while (true) {
            int wt = word_weight(data, word);
            for (int f = 0; f < P; ++f)
                for (int x = 0; x < P; ++x)
                    if (p_degree(data, f) == p_degree(data, x) + wt)
                        d.pgens.push_back({f, word, x});
            int t = n - 1;
            while (t >= 0 && word[static_cast<size_t>(t)] == M - 1) {
                word[static_cast<size_t>(t)] = 0;
                --t;
            }
            if (t < 0) break;
            ++word[static_cast<size_t>(t)];
        }
    }
    std::sort(d.pgens.begin(), d.pgens.end());

    d.letters = data.r_gens;
    for (const PGen& g : d.pgens)
        d.letters.generators.push_back(
            {pgen_name(data, g), 1 - static_cast<int>(g.word.size())});

    int R = data.r_gens.size();
    d.q_letters.assign(static_cast<size_t>(d.letters.size()), FreeAlgebraElement{});
    for (size_t gi = 0; gi < d.pgens.size(); ++gi) {
        const PGen& g = d.pgens[gi];
        int n = static_cast<int>(g.word.size());
        FreeAlgebraElement q;
        if (n == 2) {
            RMatrix mu = mat_add_scaled(e_hat_of_product(data, g.word[0], g.word[1]),
                                        mat_mul(e_hat_of(data, g.word[0]), e_hat_of(data, g.word[1])),
                                        Rat(-1));
            auto it = mu.find({g.f, g.x});
            if (it != mu.end()) q = it->second;
        } else {
            int lead_sign = (n + 1) % 2 == 0 ? 1 : -1;
            // f ↦ f∘ê(a₁): R-coefficients multiply from the left
            for (const auto& [rc, entry] : e_hat_of(data, g.word[0])) {
                if (rc.first != g.f) continue;
                PGen tail{rc.second, {g.word.begin() + 1, g.word.end()}, g.x};
                q += entry * FreeAlgebraElement::gen(d.letter_index(tail)) * Rat(lead_sign);
            }
            // contract a_j, a_{j+1} through ϑ
            for (int j = 1; j <= n - 1; ++j) {
                int sign = (n + 1 - j) % 2 == 0 ? 1 : -1;
                for (const auto& [c, coeff] :
                     theta_of(data, g.word[static_cast<size_t>(j - 1)], g.word[static_cast<size_t>(j)])) {
                    std::vector<int> w;
                    w.insert(w.end(), g.word.begin(), g.word.begin() + (j - 1));
                    w.push_back(c);
                    w.insert(w.end(), g.word.begin() + (j + 1), g.word.end());
                    PGen merged{g.f, std::move(w), g.x};
                    q += FreeAlgebraElement::gen(d.letter_index(merged)) * (coeff * sign);
                }
            }
            // x ↦ ê(a_n)(x): R-coefficients multiply from the right
            for (const auto& [rc, entry] : e_hat_of(data, g.word[static_cast<size_t>(n - 1)])) {
                if (rc.second != g.x) continue;
                PGen head{g.f, {g.word.begin(), g.word.end() - 1}, rc.first};
                q += FreeAlgebraElement::gen(d.letter_index(head)) * entry * Rat(-1);
            }
            for (int k = 2; k <= n - 2; ++k) {
                int sign = (n * (k - 2) + 1) % 2 == 0 ? 1 : -1;
                int mid_degree = p_degree(data, g.f) - word_weight(data, {g.word.begin(), g.word.begin() + k});
                for (int i = 0; i < P; ++i) {
                    if (p_degree(data, i) != mid_degree) continue;
                    PGen left{g.f, {g.word.begin(), g.word.begin() + k}, i};
                    PGen right{i, {g.word.begin() + k, g.word.end()}, g.x};
                    q += FreeAlgebraElement::gen(d.letter_index(left)) *
                         FreeAlgebraElement::gen(d.letter_index(right)) * Rat(sign);
                }
            }
        }
        d.q_letters[static_cast<size_t>(R) + gi] = std::move(q);
    }
    return d;
}

QsqVerdict check_q_squared(const NcdgData& data) {
    Differential d = build_q(data);
    for (size_t gi = 0; gi < d.pgens.size(); ++gi) {
        FreeAlgebraElement r = d.apply(d.q_letters[static_cast<size_t>(d.data.r_gens.size()) + gi]);
        if (!r.is_zero()) {
            return {false, pgen_name(data, d.pgens[gi]), std::move(r)};
        }
    }
    return {};
}

std::vector<FreeAlgebraElement> h0_ideal_generators(const NcdgData& data) {
    Differential d = build_q(data);
    std::vector<FreeAlgebraElement> out;
    for (size_t gi = 0; gi < d.pgens.size(); ++gi)
        if (d.pgens[gi].word.size() == 2)
            out.push_back(d.q_letters[static_cast<size_t>(d.data.r_gens.size()) + gi]);
    return out;
}

int euler_char_xn(int n, int weight_cutoff) {
    if (n < 1) throw SchemaError("euler_char_xn: n must be >= 1");
    if (weight_cutoff < 1) throw SchemaError("euler_char_xn: cutoff must be >= 1");
    // weight-w slice: C·x^{w-n}y → C·x^w when w ≥ n, else 0 → C·x^w;
    // the differential is multiplication by x^n, injective whenever defined
    long long chi = 0;
    int tail_nonzero = 0;  // largest weight with nonzero homology
    for (int w = 0; w <= weight_cutoff; ++w) {
        int deg0 = 1;
        int degm1 = w >= n ? 1 : 0;
        int rank = degm1;  // x^{w-n}y ↦ x^w ≠ 0
        int h0 = deg0 - rank;
        int h1 = degm1 - rank;
        chi += h0 - h1;
        if (h0 != 0 || h1 != 0) tail_nonzero = w;
    }
    if (tail_nonzero > weight_cutoff - (weight_cutoff + 1) / 2)
        throw SchemaError("euler_char_xn: cutoff too small to stabilize (homology nonzero at weight " +
                          std::to_string(tail_nonzero) + " of " + std::to_string(weight_cutoff) + ")");
    return static_cast<int>(chi);
}

} // namespace nck
