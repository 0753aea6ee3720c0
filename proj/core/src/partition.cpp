#include "nck/partition.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "nck/charring.hpp"
#include "nck/error.hpp"

namespace nck {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1)
            throw SchemaError("partition parts must be positive, got " + std::to_string(parts[i]));
        if (i > 0 && parts[i] > parts[i - 1])
            throw SchemaError("partition parts must be weakly decreasing");
    }
}

int Partition::weight() const {
    int w = 0;
    for (int x : parts) w += x;
    return w;
}

Partition conjugate(const Partition& p) {
    Partition out;
    if (p.empty()) return out;
    int cols = p.parts[0];
    out.parts.reserve(static_cast<size_t>(cols));
    for (int c = 1; c <= cols; ++c) {
        int h = 0;
        for (int x : p.parts) h += (x >= c) ? 1 : 0;
        out.parts.push_back(h);
    }
    return out;
}

namespace {

void gen_partitions(int n, int maxpart, std::vector<int>& acc, std::vector<Partition>& out) {
    if (n == 0) {
        Partition p;
        p.parts = acc;
        out.push_back(std::move(p));
        return;
    }
    for (int k = std::min(n, maxpart); k >= 1; --k) {
        acc.push_back(k);
        gen_partitions(n - k, k, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw SchemaError("partitions_of: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> acc;
    gen_partitions(n, n == 0 ? 1 : n, acc, out);
    return out;
}

namespace {

std::mutex lr_mutex;
std::map<std::pair<Partition, Partition>, std::map<Partition, Int>> lr_cache;

// Peel a symmetric polynomial (homogeneous, in n variables) into the Schur
// basis: repeatedly subtract c·s_rho for the lex-greatest exponent rho, which
// is always weakly decreasing by symmetry and strictly decreases at each step.
Character all_vars_sum(int n) {
    Character base(n);
    for (int i = 0; i < n; ++i) {
        Expvec e(static_cast<size_t>(n), 0);
        e[static_cast<size_t>(i)] = 1;
        base.add_term(e, 1);
    }
    return base;
}

std::map<Partition, Int> schur_expand(Character f, int n) {
    std::map<Partition, Int> out;
    Character base = all_vars_sum(n);
    while (!f.is_zero()) {
        // lex-greatest exponent among terms (all have equal total degree);
        // by symmetry it is weakly decreasing, and peeling strictly lowers it
        Expvec best = f.terms.begin()->first;
        for (const auto& [e, c] : f.terms)
            if (e > best) best = e;
        Int coeff = f.terms.at(best);
        std::vector<int> rho;
        for (int x : best) {
            if (x < 0) throw SchemaError("schur_expand: negative exponent in symmetric polynomial");
            if (x > 0) rho.push_back(x);
        }
        if (!std::is_sorted(rho.rbegin(), rho.rend()))
            throw SchemaError("schur_expand: input polynomial is not symmetric");
        Partition p(rho);
        f -= schur_of_character(p, base) * coeff;
        out[p] += coeff;
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second == 0) it = out.erase(it);
        else ++it;
    }
    return out;
}

} // namespace

std::map<Partition, Int> lr_expand(const Partition& lambda, const Partition& mu) {
    {
        std::lock_guard<std::mutex> lock(lr_mutex);
        auto it = lr_cache.find({lambda, mu});
        if (it != lr_cache.end()) return it->second;
    }
    int n = lambda.weight() + mu.weight();
    std::map<Partition, Int> result;
    if (n == 0) {
        result[Partition{}] = 1;
    } else {
        Character base = all_vars_sum(n);
        Character prod = schur_of_character(lambda, base) * schur_of_character(mu, base);
        result = schur_expand(std::move(prod), n);
    }
    std::lock_guard<std::mutex> lock(lr_mutex);
    lr_cache[{lambda, mu}] = result;
    return result;
}

Int lr_coeff(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.weight() + mu.weight() != nu.weight()) return 0;
    auto expansion = lr_expand(lambda, mu);
    auto it = expansion.find(nu);
    return it == expansion.end() ? Int(0) : it->second;
}

std::string to_string(const Partition& p) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < p.parts.size(); ++i) {
        if (i) os << ",";
        os << p.parts[i];
    }
    os << ")";
    return os.str();
}

} // namespace nck
