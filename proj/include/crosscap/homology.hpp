#pragma once

// Action on H_1(N_g; Z_2): a Dehn twist about c is the transvection
// x -> x + <x,[c]>[c], a crosscap pushing map acts as the identity.
// Cheap independent oracle for relator triviality.

#include <optional>

#include "crosscap/gf2.hpp"
#include "crosscap/word.hpp"

namespace crosscap {

inline Z2Matrix generator_matrix(const SurfaceSpec& spec, const GeneratorSymbol& g) {
    if (g.kind == GeneratorSymbol::Kind::twist)
        return Z2Matrix::transvection(curve_class(spec, g.curve));
    return Z2Matrix::identity(spec.genus);
}

inline Z2Matrix word_matrix(const SurfaceSpec& spec, const Word& w) {
    Z2Matrix acc = Z2Matrix::identity(spec.genus);
    for (const Term& t : w.terms) {
        Z2Matrix m = generator_matrix(spec, t.gen);
        if (t.exp < 0) m = m.inverse();
        int count = t.exp < 0 ? -t.exp : t.exp;
        Z2Matrix p = Z2Matrix::identity(spec.genus);
        Z2Matrix base = m;
        while (count > 0) {
            if (count & 1) p = p * base;
            base = base * base;
            count >>= 1;
        }
        acc = acc * p;
    }
    return acc;
}

struct RelatorCheck {
    bool ok = false;
    std::optional<int> first_moved;   // smallest i with M e_i != e_i
    Z2Matrix image;
};

inline RelatorCheck check_relator(const SurfaceSpec& spec, const Word& w) {
    RelatorCheck r;
    r.image = word_matrix(spec, w);
    r.ok = r.image.is_identity();
    if (!r.ok) {
        for (int i = 1; i <= spec.genus; ++i) {
            if (!(r.image.column(i) == Z2Vector::basis(spec.genus, i))) {
                r.first_moved = i;
                break;
            }
        }
    }
    return r;
}

} // namespace crosscap
