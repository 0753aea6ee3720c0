#include "nck/charring.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

#include "nck/error.hpp"

namespace nck {

bool GrlexLess::operator()(const Expvec& a, const Expvec& b) const {
    long long sa = 0, sb = 0;
    for (int x : a) sa += x;
    for (int x : b) sb += x;
    if (sa != sb) return sa < sb;
    return a < b;
}

namespace {
std::atomic<int> g_exp_budget{64};

void check_budget(const Expvec& e) {
    int budget = g_exp_budget.load(std::memory_order_relaxed);
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] > budget || e[i] < -budget)
            throw BudgetError("exponent budget exceeded: |exponent| of t" + std::to_string(i + 1) +
                              " is " + std::to_string(e[i]) + " > " + std::to_string(budget) +
                              " (adjust with set_exponent_budget / --budget)");
    }
}
} // namespace

int exponent_budget() { return g_exp_budget.load(std::memory_order_relaxed); }
void set_exponent_budget(int b) {
    if (b < 1) throw SchemaError("exponent budget must be positive");
    g_exp_budget.store(b, std::memory_order_relaxed);
}

Character Character::constant(int nvars, Int c) {
    Character out(nvars);
    out.add_term(Expvec(static_cast<size_t>(nvars), 0), c);
    return out;
}

Character Character::monomial(int nvars, Expvec e, Int c) {
    if (static_cast<int>(e.size()) != nvars)
        throw SchemaError("monomial: exponent vector length != nvars");
    Character out(nvars);
    out.add_term(e, c);
    return out;
}

Character Character::var(int nvars, int i, int power) {
    if (i < 0 || i >= nvars) throw SchemaError("var: index out of range");
    Expvec e(static_cast<size_t>(nvars), 0);
    e[static_cast<size_t>(i)] = power;
    return monomial(nvars, e, 1);
}

Int Character::rank() const {
    Int r = 0;
    for (const auto& [e, c] : terms) r += c;
    return r;
}

void Character::add_term(const Expvec& e, const Int& c) {
    if (c == 0) return;
    if (static_cast<int>(e.size()) != nvars)
        throw SchemaError("add_term: exponent vector length != nvars");
    check_budget(e);
    auto [it, inserted] = terms.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

namespace {
void require_same_nvars(const Character& a, const Character& b, const char* op) {
    if (a.nvars != b.nvars)
        throw SchemaError(std::string(op) + ": mixed variable counts (" +
                          std::to_string(a.nvars) + " vs " + std::to_string(b.nvars) + ")");
}
} // namespace

Character operator+(const Character& a, const Character& b) {
    require_same_nvars(a, b, "add");
    Character out = a;
    for (const auto& [e, c] : b.terms) out.add_term(e, c);
    return out;
}

Character operator-(const Character& a, const Character& b) {
    require_same_nvars(a, b, "sub");
    Character out = a;
    for (const auto& [e, c] : b.terms) out.add_term(e, -c);
    return out;
}

Character operator-(const Character& a) {
    Character out(a.nvars);
    for (const auto& [e, c] : a.terms) out.terms.emplace(e, -c);
    return out;
}

Character operator*(const Character& a, const Character& b) {
    require_same_nvars(a, b, "mul");
    Character out(a.nvars);
    Expvec e(static_cast<size_t>(a.nvars));
    for (const auto& [ea, ca] : a.terms) {
        for (const auto& [eb, cb] : b.terms) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Character operator*(const Character& a, const Int& c) {
    Character out(a.nvars);
    if (c == 0) return out;
    for (const auto& [e, k] : a.terms) out.terms.emplace(e, k * c);
    return out;
}

Character& operator+=(Character& a, const Character& b) {
    require_same_nvars(a, b, "add");
    for (const auto& [e, c] : b.terms) a.add_term(e, c);
    return a;
}

Character& operator-=(Character& a, const Character& b) {
    require_same_nvars(a, b, "sub");
    for (const auto& [e, c] : b.terms) a.add_term(e, -c);
    return a;
}

Character adams(int d, const Character& a) {
    if (d < 1) throw SchemaError("adams: d must be >= 1");
    Character out(a.nvars);
    Expvec e(static_cast<size_t>(a.nvars));
    for (const auto& [ea, c] : a.terms) {
        for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] * d;
        out.add_term(e, c);
    }
    return out;
}

Character div_exact(const Character& a, const Int& k) {
    if (k == 0) throw std::logic_error("div_exact by zero");
    Character out(a.nvars);
    for (const auto& [e, c] : a.terms) {
        if (c % k != 0)
            throw std::logic_error("div_exact: coefficient not divisible (internal invariant broken)");
        out.terms.emplace(e, c / k);
    }
    return out;
}

Character truncate_degree(const Character& a, int cutoff) {
    Character out(a.nvars);
    for (const auto& [e, c] : a.terms) {
        long long deg = 0;
        for (int x : e) deg += x;
        if (deg <= cutoff) out.terms.emplace(e, c);
    }
    return out;
}

std::string to_string(const Character& a) {
    if (a.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print highest degree last, matching series intuition; grlex order of the map
    for (const auto& [e, c] : a.terms) {
        Int abs_c = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool all_zero = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
        bool sep = (abs_c != 1 || all_zero);
        if (sep) os << abs_c.str();
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (sep) os << "*";
            sep = true;
            os << "t" << (i + 1);
            if (e[i] != 1) os << "^" << e[i];
        }
    }
    return os.str();
}

std::vector<Character> h_from_power_sums(const std::vector<Character>& p, int kmax, int nvars) {
    std::vector<Character> h(static_cast<size_t>(kmax) + 1, Character(nvars));
    h[0] = Character::constant(nvars, 1);
    for (int k = 1; k <= kmax; ++k) {
        Character acc(nvars);
        for (int d = 1; d <= k; ++d) acc += p[static_cast<size_t>(d)] * h[static_cast<size_t>(k - d)];
        h[static_cast<size_t>(k)] = div_exact(acc, k);
    }
    return h;
}

std::vector<Character> e_from_power_sums(const std::vector<Character>& p, int kmax, int nvars) {
    std::vector<Character> e(static_cast<size_t>(kmax) + 1, Character(nvars));
    e[0] = Character::constant(nvars, 1);
    for (int k = 1; k <= kmax; ++k) {
        Character acc(nvars);
        for (int d = 1; d <= k; ++d) {
            Character t = p[static_cast<size_t>(d)] * e[static_cast<size_t>(k - d)];
            if (d % 2 == 0) acc -= t;
            else acc += t;
        }
        e[static_cast<size_t>(k)] = div_exact(acc, k);
    }
    return e;
}

namespace {
std::vector<Character> adams_powers(const Character& a, int kmax) {
    std::vector<Character> p(static_cast<size_t>(kmax) + 1, Character(a.nvars));
    for (int d = 1; d <= kmax; ++d) p[static_cast<size_t>(d)] = adams(d, a);
    return p;
}
} // namespace

std::vector<Character> h_list(const Character& a, int kmax) {
    return h_from_power_sums(adams_powers(a, kmax), kmax, a.nvars);
}

std::vector<Character> e_list(const Character& a, int kmax) {
    return e_from_power_sums(adams_powers(a, kmax), kmax, a.nvars);
}

namespace {
// determinant over the commutative character ring, Laplace expansion along
// the first remaining row with a column bitmask memo (n <= ~8 here)
Character det_memo(const std::vector<std::vector<Character>>& m, unsigned cols, size_t row,
                   std::map<unsigned, Character>& memo, int nvars) {
    size_t n = m.size();
    if (row == n) return Character::constant(nvars, 1);
    auto it = memo.find(cols);
    if (it != memo.end()) return it->second;
    Character acc(nvars);
    int sign = 1;
    for (size_t j = 0; j < n; ++j) {
        if (!(cols & (1u << j))) continue;
        if (!m[row][j].is_zero()) {
            Character sub = det_memo(m, cols & ~(1u << j), row + 1, memo, nvars);
            Character term = m[row][j] * sub;
            if (sign < 0) acc -= term;
            else acc += term;
        }
        sign = -sign;
    }
    memo.emplace(cols, acc);
    return acc;
}
} // namespace

Character jacobi_trudi(const Partition& rho, const std::vector<Character>& h, int nvars) {
    int l = rho.length();
    if (l == 0) return Character::constant(nvars, 1);
    std::vector<std::vector<Character>> m(static_cast<size_t>(l),
                                          std::vector<Character>(static_cast<size_t>(l), Character(nvars)));
    for (int i = 0; i < l; ++i) {
        for (int j = 0; j < l; ++j) {
            int idx = rho.part(i) - (i + 1) + (j + 1);
            if (idx >= 0 && idx < static_cast<int>(h.size()))
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] = h[static_cast<size_t>(idx)];
        }
    }
    std::map<unsigned, Character> memo;
    return det_memo(m, (1u << l) - 1u, 0, memo, nvars);
}

Character schur_of_character(const Partition& rho, const Character& a) {
    int need = rho.part(0) + rho.length();  // max index h_{rho_i - i + j} can reach
    return jacobi_trudi(rho, h_list(a, need), a.nvars);
}

SuperChar::SuperChar(Character e, Character o) : even(std::move(e)), odd(std::move(o)) {
    if (even.nvars != odd.nvars)
        throw SchemaError("SuperChar: even/odd variable counts differ");
}

SuperChar operator+(const SuperChar& a, const SuperChar& b) {
    return SuperChar(a.even + b.even, a.odd + b.odd);
}

SuperChar operator-(const SuperChar& a, const SuperChar& b) {
    return SuperChar(a.even - b.even, a.odd - b.odd);
}

SuperChar operator*(const SuperChar& a, const SuperChar& b) {
    return SuperChar(a.even * b.even + a.odd * b.odd, a.even * b.odd + a.odd * b.even);
}

Character k_class(const SuperChar& g) { return g.even - g.odd; }
Character underlying(const SuperChar& g) { return g.even + g.odd; }
SuperChar parity_shift(const SuperChar& g) { return SuperChar(g.odd, g.even); }

Character power_sum(int d, const SuperChar& g) {
    Character p = adams(d, g.even);
    // - (-1)^d psi^d(odd)
    if (d % 2 == 0) p -= adams(d, g.odd);
    else p += adams(d, g.odd);
    return p;
}

SuperChar sym_power(int k, const SuperChar& g) {
    if (k < 0) throw SchemaError("sym_power: k must be >= 0");
    auto h = h_list(g.even, k);
    auto e = e_list(g.odd, k);
    SuperChar out(g.nvars());
    for (int i = 0; i <= k; ++i) {
        int j = k - i;
        Character part = h[static_cast<size_t>(i)] * e[static_cast<size_t>(j)];
        if (j % 2 == 0) out.even += part;
        else out.odd += part;
    }
    return out;
}

SuperChar ext_power(int k, const SuperChar& g) {
    if (k < 0) throw SchemaError("ext_power: k must be >= 0");
    auto e = e_list(g.even, k);
    auto h = h_list(g.odd, k);
    SuperChar out(g.nvars());
    for (int i = 0; i <= k; ++i) {
        int j = k - i;
        Character part = e[static_cast<size_t>(i)] * h[static_cast<size_t>(j)];
        if (j % 2 == 0) out.even += part;
        else out.odd += part;
    }
    return out;
}

SuperChar schur_super(const Partition& lambda, const SuperChar& g) {
    int w = lambda.weight();
    SuperChar out(g.nvars());
    if (w == 0) {
        out.even = Character::constant(g.nvars(), 1);
        return out;
    }
    for (int m = 0; m <= w; ++m) {
        for (const Partition& mu : partitions_of(m)) {
            Character s_mu = schur_of_character(mu, g.even);
            if (s_mu.is_zero() && m > 0) continue;
            for (const Partition& nu : partitions_of(w - m)) {
                Int c = lr_coeff(mu, nu, lambda);
                if (c == 0) continue;
                Character term = s_mu * schur_of_character(conjugate(nu), g.odd) * c;
                if ((w - m) % 2 == 0) out.even += term;
                else out.odd += term;
            }
        }
    }
    return out;
}

SuperChar GradedClass::fold_to_super() const {
    SuperChar out(nvars);
    for (const auto& [deg, ch] : components) {
        if (ch.nvars != nvars) throw SchemaError("GradedClass: component nvars mismatch");
        int parity = ((deg % 2) + 2) % 2;
        if (parity == 0) out.even += ch;
        else out.odd += ch;
    }
    return out;
}

RationalCharacter::RationalCharacter(Character n, Character d)
    : num(std::move(n)), den(std::move(d)) {
    if (num.nvars != den.nvars)
        throw SchemaError("RationalCharacter: numerator/denominator variable counts differ");
    if (den.is_zero()) throw SchemaError("RationalCharacter: zero denominator");
}

RationalCharacter rational_mul(const RationalCharacter& r, const Character& c) {
    return RationalCharacter(r.num * c, r.den);
}

bool rat_equal(const RationalCharacter& a, const RationalCharacter& b) {
    return a.num * b.den == b.num * a.den;
}

std::string to_string(const RationalCharacter& r) {
    return "(" + to_string(r.num) + ") / (" + to_string(r.den) + ")";
}

} // namespace nck
