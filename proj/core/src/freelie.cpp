#include "nck/freelie.hpp"

#include "nck/error.hpp"
#include "nck/linalg.hpp"

namespace nck {

const SuperChar& LieCharTable::piece(int n) const {
    if (n < 1 || n > max_n) throw SchemaError("LieCharTable: n out of range");
    return table[static_cast<size_t>(n - 1)];
}

LieCharTable lie_char_table(const SuperChar& g, int max_n) {
    if (max_n < 1) throw SchemaError("lie_char_table: max_n must be >= 1");
    int nv = g.nvars();
    SuperChar unit(nv);
    unit.even = Character::constant(nv, 1);

    // tensor powers g^k, k = 0..max_n
    std::vector<SuperChar> tensor(static_cast<size_t>(max_n) + 1, unit);
    for (int k = 1; k <= max_n; ++k)
        tensor[static_cast<size_t>(k)] = tensor[static_cast<size_t>(k - 1)] * g;

    // series = Π_{m'≤m} σ_{t^m'}(Lie_m'), truncated at t^max_n
    std::vector<SuperChar> series(static_cast<size_t>(max_n) + 1, SuperChar(nv));
    series[0] = unit;

    LieCharTable out;
    out.g = g;
    out.max_n = max_n;
    for (int m = 1; m <= max_n; ++m) {
        SuperChar lie_m = tensor[static_cast<size_t>(m)] - series[static_cast<size_t>(m)];
        out.table.push_back(lie_m);
        std::vector<SuperChar> next(static_cast<size_t>(max_n) + 1, SuperChar(nv));
        for (int k = 0; m * k <= max_n; ++k) {
            SuperChar sk = sym_power(k, lie_m);
            for (int j = m * k; j <= max_n; ++j)
                next[static_cast<size_t>(j)] =
                    next[static_cast<size_t>(j)] + series[static_cast<size_t>(j - m * k)] * sk;
        }
        series = std::move(next);
    }
    return out;
}

SuperChar lie_char(int n, const SuperChar& g) { return lie_char_table(g, n).piece(n); }

namespace {

// minimal word arithmetic, deliberately separate from the freealg module so
// the oracle shares no code with what it checks
using Word = std::vector<int>;
using Elem = std::map<Word, Int>;

Elem concat(const Elem& a, const Elem& b) {
    Elem out;
    for (const auto& [wa, ca] : a) {
        for (const auto& [wb, cb] : b) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            auto [it, inserted] = out.try_emplace(w, Int(ca * cb));
            if (!inserted && (it->second += ca * cb) == 0) out.erase(it);
        }
    }
    return out;
}

} // namespace

long long lie_bracket_span_oracle(int n, int even_dim, int odd_dim, long long budget) {
    if (n < 1) throw SchemaError("lie_bracket_span_oracle: n must be >= 1");
    if (even_dim < 0 || odd_dim < 0) throw SchemaError("lie_bracket_span_oracle: negative dimension");
    long long gens = even_dim + odd_dim;
    if (gens == 0) return 0;
    long long words = 1;
    for (int i = 0; i < n; ++i) {
        words *= gens;
        if (words > budget)
            throw BudgetError("lie_bracket_span_oracle: " + std::to_string(gens) + "^" +
                              std::to_string(n) + " words exceed budget " + std::to_string(budget));
    }

    auto parity = [&](int letter) { return letter >= even_dim ? 1 : 0; };
    auto col_of = [&](const Word& w) {
        size_t c = 0;
        for (int letter : w) c = c * static_cast<size_t>(gens) + static_cast<size_t>(letter);
        return c;
    };

    RowReducer red(static_cast<size_t>(words));
    std::vector<int> seq(static_cast<size_t>(n), 0);
    while (true) {
        Elem bracket{{Word{seq[0]}, Int(1)}};
        int bracket_parity = parity(seq[0]);
        for (int t = 1; t < n; ++t) {
            Elem letter{{Word{seq[static_cast<size_t>(t)]}, Int(1)}};
            Elem lhs = concat(bracket, letter);
            Elem rhs = concat(letter, bracket);
            int sign = (bracket_parity * parity(seq[static_cast<size_t>(t)])) % 2 ? -1 : 1;
            for (const auto& [w, c] : rhs) {
                auto [it, inserted] = lhs.try_emplace(w, Int(c * -sign));
                if (!inserted && (it->second -= sign * c) == 0) lhs.erase(it);
            }
            bracket = std::move(lhs);
            bracket_parity = (bracket_parity + parity(seq[static_cast<size_t>(t)])) % 2;
        }
        SparseRow row;
        for (const auto& [w, c] : bracket) row.emplace(col_of(w), Rat(c));
        red.add_row(std::move(row));

        int pos = n - 1;
        while (pos >= 0 && seq[static_cast<size_t>(pos)] == gens - 1) {
            seq[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++seq[static_cast<size_t>(pos)];
    }
    return red.rank();
}

} // namespace nck
