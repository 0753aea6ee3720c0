#include "nck/quiver.hpp"

#include <tuple>

#include "nck/error.hpp"

namespace nck {

namespace {

std::map<int, Rat> theta_of(const GradedAlgebraPresentation& a, int i, int j, int alpha, int beta) {
    auto it = a.theta.find({i, j});
    if (it == a.theta.end()) return {};
    auto jt = it->second.find({alpha, beta});
    return jt == it->second.end() ? std::map<int, Rat>{} : jt->second;
}

Matrix zero_matrix(int rows, int cols) {
    return Matrix(static_cast<size_t>(rows), std::vector<Rat>(static_cast<size_t>(cols), Rat(0)));
}

bool matrix_is_zero(const Matrix& m) {
    for (const auto& row : m)
        for (const auto& v : row)
            if (v != 0) return false;
    return true;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    size_t rows = a.size();
    size_t inner = b.size();
    size_t cols = inner ? b[0].size() : 0;
    for (const auto& row : a)
        if (row.size() != inner) throw SchemaError("matrix shape mismatch in product");
    Matrix out = zero_matrix(static_cast<int>(rows), static_cast<int>(cols));
    for (size_t i = 0; i < rows; ++i)
        for (size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

void mat_acc(Matrix& acc, const Matrix& m, const Rat& c) {
    if (acc.empty()) {
        acc = zero_matrix(static_cast<int>(m.size()), m.empty() ? 0 : static_cast<int>(m[0].size()));
    }
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j) acc[i][j] += c * m[i][j];
}

} // namespace

void validate(const GradedAlgebraPresentation& a) {
    if (a.q < a.p) throw SchemaError("presentation range must satisfy q >= p");
    if (static_cast<int>(a.dims.size()) != a.span())
        throw SchemaError("dims must list m_1..m_{q-p}");
    for (int d : a.dims)
        if (d < 0) throw SchemaError("negative m_k dimension");
    for (const auto& [ij, table] : a.theta) {
        auto [i, j] = ij;
        if (i < 1 || j < 1 || i + j > a.span())
            throw SchemaError("theta block (m_" + std::to_string(i) + ", m_" + std::to_string(j) +
                              ") is out of range");
        for (const auto& [ab, combo] : table) {
            if (ab.first < 0 || ab.first >= a.dim_m(i) || ab.second < 0 || ab.second >= a.dim_m(j))
                throw SchemaError("theta basis index out of range");
            for (const auto& [c, coeff] : combo) {
                (void)coeff;
                if (c < 0 || c >= a.dim_m(i + j)) throw SchemaError("theta target index out of range");
            }
        }
    }
    // associativity on every in-range basis triple
    for (int i = 1; i <= a.span(); ++i)
        for (int j = 1; i + j <= a.span(); ++j)
            for (int k = 1; i + j + k <= a.span(); ++k)
                for (int x = 0; x < a.dim_m(i); ++x)
                    for (int y = 0; y < a.dim_m(j); ++y)
                        for (int z = 0; z < a.dim_m(k); ++z) {
                            std::map<int, Rat> lhs, rhs;
                            for (const auto& [c, co] : theta_of(a, i, j, x, y))
                                for (const auto& [e, ce] : theta_of(a, i + j, k, c, z)) {
                                    if ((lhs[e] += co * ce) == 0) lhs.erase(e);
                                }
                            for (const auto& [c, co] : theta_of(a, j, k, y, z))
                                for (const auto& [e, ce] : theta_of(a, i, j + k, x, c)) {
                                    if ((rhs[e] += co * ce) == 0) rhs.erase(e);
                                }
                            if (lhs != rhs)
                                throw SchemaError("theta is not associative at weights (" +
                                                  std::to_string(i) + "," + std::to_string(j) + "," +
                                                  std::to_string(k) + ")");
                        }
}

int Quiver::arrow_index(int tail, int head, int basis) const {
    for (size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].tail == tail && arrows[i].head == head && arrows[i].basis == basis)
            return static_cast<int>(i);
    return -1;
}

Quiver build_quiver(const GradedAlgebraPresentation& a) {
    validate(a);
    Quiver qv;
    qv.p = a.p;
    qv.q = a.q;
    for (int i = a.p; i <= a.q; ++i)
        for (int j = i + 1; j <= a.q; ++j)
            for (int b = 0; b < a.dim_m(j - i); ++b) qv.arrows.push_back({i, j, b});

    // one relation per composable ordered pair: first arrow i→j labeled β,
    // second arrow j→k labeled α, relating ϑ(α⊗β) to the traversed path
    for (int i = a.p; i <= a.q; ++i)
        for (int j = i + 1; j <= a.q; ++j)
            for (int k = j + 1; k <= a.q; ++k)
                for (int beta = 0; beta < a.dim_m(j - i); ++beta)
                    for (int alpha = 0; alpha < a.dim_m(k - j); ++alpha) {
                        PathElement rel;
                        for (const auto& [l, c] : theta_of(a, k - j, j - i, alpha, beta)) {
                            int ai = qv.arrow_index(i, k, l);
                            if (ai < 0) throw SchemaError("missing arrow for theta target");
                            rel.terms[{ai}] = c;
                        }
                        std::vector<int> path{qv.arrow_index(i, j, beta), qv.arrow_index(j, k, alpha)};
                        auto [it, inserted] = rel.terms.try_emplace(path, Rat(-1));
                        if (!inserted && (it->second += Rat(-1)) == 0) rel.terms.erase(it);
                        qv.relations.push_back(std::move(rel));
                    }
    return qv;
}

void validate_shapes(const Rep& rep, const Quiver& qv) {
    int nv = qv.q - qv.p + 1;
    if (static_cast<int>(rep.gamma.size()) != nv)
        throw SchemaError("dimension vector length does not match vertex range");
    for (int g : rep.gamma)
        if (g < 0) throw SchemaError("negative dimension in gamma");
    if (rep.mats.size() != qv.arrows.size())
        throw SchemaError("representation must assign a matrix to every arrow");
    for (size_t i = 0; i < qv.arrows.size(); ++i) {
        const Arrow& a = qv.arrows[i];
        int rows = rep.gamma[static_cast<size_t>(a.head - qv.p)];
        int cols = rep.gamma[static_cast<size_t>(a.tail - qv.p)];
        const Matrix& m = rep.mats[i];
        if (static_cast<int>(m.size()) != rows)
            throw SchemaError("matrix row count mismatch on an arrow");
        for (const auto& row : m)
            if (static_cast<int>(row.size()) != cols)
                throw SchemaError("matrix column count mismatch on an arrow");
    }
}

Matrix evaluate(const PathElement& pe, const Rep& rep, const Quiver& qv) {
    validate_shapes(rep, qv);
    // products through a zero-dimensional vertex degenerate to empty row
    // vectors, so the accumulator is sized from the endpoints, not the terms
    Matrix acc;
    int tail = -1, head = -1;
    for (const auto& [path, c] : pe.terms) {
        if (path.empty()) throw SchemaError("empty path in path element");
        const Arrow& first = qv.arrows[static_cast<size_t>(path[0])];
        Matrix m = rep.mats[static_cast<size_t>(path[0])];
        int at = first.head;
        for (size_t s = 1; s < path.size(); ++s) {
            const Arrow& next = qv.arrows[static_cast<size_t>(path[s])];
            if (next.tail != at) throw SchemaError("non-composable path in path element");
            m = mat_mul(rep.mats[static_cast<size_t>(path[s])], m);
            at = next.head;
        }
        if (tail < 0) {
            tail = first.tail;
            head = at;
            acc = zero_matrix(rep.gamma[static_cast<size_t>(head - qv.p)],
                              rep.gamma[static_cast<size_t>(tail - qv.p)]);
        } else if (first.tail != tail || at != head) {
            throw SchemaError("path element mixes endpoints");
        }
        mat_acc(acc, m, c);
    }
    return acc;
}

bool satisfies_relations(const Rep& rep, const Quiver& qv) {
    for (const PathElement& rel : qv.relations) {
        if (rel.terms.empty()) continue;
        if (!matrix_is_zero(evaluate(rel, rep, qv))) return false;
    }
    return true;
}

LOne rep_to_lone(const Rep& rep, const Quiver& qv, const GradedAlgebraPresentation& a) {
    validate_shapes(rep, qv);
    LOne x;
    for (int k = 1; k <= a.span(); ++k)
        for (int alpha = 0; alpha < a.dim_m(k); ++alpha)
            for (int i = a.p; i + k <= a.q; ++i) {
                int ai = qv.arrow_index(i, i + k, alpha);
                if (ai < 0) throw SchemaError("quiver/presentation arrow mismatch");
                x.blocks[{k, alpha, i}] = rep.mats[static_cast<size_t>(ai)];
            }
    return x;
}

bool MCResidual::is_zero() const {
    for (const auto& [key, m] : blocks) {
        (void)key;
        if (!matrix_is_zero(m)) return false;
    }
    return true;
}

namespace {
Matrix block_or_zero(const LOne& x, int k, int alpha, int i, const GradedAlgebraPresentation& a,
                     const std::vector<int>& gamma) {
    auto it = x.blocks.find({k, alpha, i});
    if (it != x.blocks.end()) return it->second;
    int rows = (i + k >= a.p && i + k <= a.q) ? gamma[static_cast<size_t>(i + k - a.p)] : 0;
    int cols = (i >= a.p && i <= a.q) ? gamma[static_cast<size_t>(i - a.p)] : 0;
    return zero_matrix(rows, cols);
}
} // namespace

MCResidual mc_residual(const LOne& x, const GradedAlgebraPresentation& a,
                       const std::vector<int>& gamma) {
    if (static_cast<int>(gamma.size()) != a.q - a.p + 1)
        throw SchemaError("dimension vector length does not match vertex range");
    MCResidual res;
    for (int k1 = 1; k1 <= a.span(); ++k1)
        for (int k2 = 1; k1 + k2 <= a.span(); ++k2)
            for (int a1 = 0; a1 < a.dim_m(k1); ++a1)
                for (int a2 = 0; a2 < a.dim_m(k2); ++a2)
                    for (int i = a.p; i + k1 + k2 <= a.q; ++i) {
                        Matrix acc = zero_matrix(gamma[static_cast<size_t>(i + k1 + k2 - a.p)],
                                                 gamma[static_cast<size_t>(i - a.p)]);
                        for (const auto& [c, co] : theta_of(a, k1, k2, a1, a2))
                            mat_acc(acc, block_or_zero(x, k1 + k2, c, i, a, gamma), co);
                        Matrix comp = mat_mul(block_or_zero(x, k1, a1, i + k2, a, gamma),
                                              block_or_zero(x, k2, a2, i, a, gamma));
                        mat_acc(acc, comp, Rat(-1));
                        if (!matrix_is_zero(acc)) res.blocks[{k1, a1, k2, a2, i}] = std::move(acc);
                    }
    return res;
}

std::string to_string(Stability s) {
    switch (s) {
        case Stability::stable: return "stable";
        case Stability::semistable_only: return "semistable-only";
        default: return "unstable";
    }
}

Stability thin_stability(const Rep& rep, const Quiver& qv) {
    validate_shapes(rep, qv);
    int nv = qv.q - qv.p + 1;
    for (int g : rep.gamma)
        if (g != 1) throw SchemaError("thin_stability requires all gamma_i = 1");
    if (nv > 20) throw BudgetError("thin_stability: vertex range too large for subset search");

    bool semistable = true, stable = true;
    for (unsigned mask = 1; mask + 1 < (1u << nv); ++mask) {
        bool closed = true;
        for (size_t ai = 0; ai < qv.arrows.size() && closed; ++ai) {
            if (matrix_is_zero(rep.mats[ai])) continue;
            int t = qv.arrows[ai].tail - qv.p;
            int h = qv.arrows[ai].head - qv.p;
            if ((mask >> t & 1u) && !(mask >> h & 1u)) closed = false;
        }
        if (!closed) continue;
        bool has_p = (mask >> 0 & 1u) != 0;
        bool has_q = (mask >> (nv - 1) & 1u) != 0;
        // thin slope test: W_p·W'_q vs W_q·W'_p reduces to [q∈S] vs [p∈S]
        if (!(has_q && !has_p)) stable = false;
        if (has_p && !has_q) semistable = false;
    }
    if (!semistable) return Stability::unstable;
    return stable ? Stability::stable : Stability::semistable_only;
}

} // namespace nck
