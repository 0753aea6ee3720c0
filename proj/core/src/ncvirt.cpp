#include "nck/ncvirt.hpp"

#include "nck/error.hpp"
#include "nck/freelie.hpp"

namespace nck {

std::vector<Character> s_l_plus_layers(const SuperChar& e, int d) {
    if (d < 0) throw SchemaError("s_l_plus_layers: d must be >= 0");
    int nv = e.nvars();
    SuperChar unit(nv);
    unit.even = Character::constant(nv, 1);

    std::vector<SuperChar> series(static_cast<size_t>(d) + 1, SuperChar(nv));
    series[0] = unit;
    if (d > 0) {
        LieCharTable lie = lie_char_table(e, d + 1);
        for (int j = 1; j <= d; ++j) {
            const SuperChar& lj = lie.piece(j + 1);  // carries u-degree j
            std::vector<SuperChar> next(static_cast<size_t>(d) + 1, SuperChar(nv));
            for (int k = 0; j * k <= d; ++k) {
                SuperChar sk = sym_power(k, lj);
                for (int u = j * k; u <= d; ++u)
                    next[static_cast<size_t>(u)] =
                        next[static_cast<size_t>(u)] + series[static_cast<size_t>(u - j * k)] * sk;
            }
            series = std::move(next);
        }
    }
    std::vector<Character> layers;
    layers.reserve(series.size());
    for (const SuperChar& s : series) layers.push_back(k_class(s));
    return layers;
}

Character s_l_plus_truncated(const SuperChar& e, int d) {
    std::vector<Character> layers = s_l_plus_layers(e, d);
    Character out(e.nvars());
    for (const Character& l : layers) out += l;
    return out;
}

RationalCharacter ncvir_class(const ObstructionTheory& ot, int d) {
    return rational_mul(ot.ovir, s_l_plus_truncated(ot.e, d));
}

} // namespace nck
