#pragma once

// Finite presentations of the mapping class groups M(N_{g,n}) for g >= 2,
// n <= 1: the three small closed-form cases and the general relator table
// (families A*, B*, C*) over the generators a_1..a_{g-1}, y, and b.

#include <string>
#include <vector>

#include "crosscap/errors.hpp"
#include "crosscap/word.hpp"

namespace crosscap {

struct Relator {
    std::string family;
    Word word;

    bool operator==(const Relator&) const = default;
};

struct Presentation {
    SurfaceSpec spec;
    std::vector<GeneratorSymbol> generators;
    std::vector<Relator> relators;
};

namespace detail {

inline Word gen_word(const GeneratorSymbol& g, int exp = 1) {
    return word_of({Term{g, exp}});
}

inline Word commutator(const Word& u, const Word& v) {
    return concat(concat(u, v), concat(inverse(u), inverse(v)));
}

} // namespace detail

// b_0 = a_1, b_1 = b, and the recursion
// b_{i+1} = (b_{i-1} a_{2i} a_{2i+1} a_{2i+2} a_{2i+3} b_i)^5
//           (b_{i-1} a_{2i} a_{2i+1} a_{2i+2} a_{2i+3})^{-6}
inline Word b_chain_word(const SurfaceSpec& spec, int idx) {
    if (spec.genus < 4)
        throw validation_error("b-chain words need genus >= 4");
    if (idx < 0 || idx > (spec.genus - 2) / 2)
        throw validation_error("b-chain index " + std::to_string(idx) +
                               " out of range for genus " + std::to_string(spec.genus));
    Word prev = detail::gen_word(GeneratorSymbol::a(spec, 1));
    Word cur = detail::gen_word(GeneratorSymbol::b(spec));
    if (idx == 0) return prev;
    for (int i = 1; i < idx; ++i) {
        Word run = prev;
        for (int j = 2 * i; j <= 2 * i + 3; ++j)
            run = concat(run, detail::gen_word(GeneratorSymbol::a(spec, j)));
        Word next = reduce(concat(power(concat(run, cur), 5), power(run, -6)));
        prev = cur;
        cur = next;
    }
    return cur;
}

// rho = (a_1 a_2 ... a_{g-1})^g for odd g,
// rho = (y^{-1} a_2 ... a_{g-1} y a_2 ... a_{g-1})^{(g-2)/2} y^{-1} a_2 ... a_{g-1}
// for even g; defined for closed surfaces of genus >= 4
inline Word rho_word(const SurfaceSpec& spec) {
    if (spec.boundary != 0 || spec.genus < 4)
        throw validation_error("rho is defined for closed surfaces of genus >= 4");
    const int g = spec.genus;
    if (g % 2 == 1) {
        Word run;
        for (int i = 1; i <= g - 1; ++i)
            run = concat(run, detail::gen_word(GeneratorSymbol::a(spec, i)));
        return reduce(power(run, g));
    }
    Word tail;
    for (int i = 2; i <= g - 1; ++i)
        tail = concat(tail, detail::gen_word(GeneratorSymbol::a(spec, i)));
    Word y_inv = detail::gen_word(GeneratorSymbol::y(spec), -1);
    Word y_pos = detail::gen_word(GeneratorSymbol::y(spec));
    Word period = concat(concat(y_inv, tail), concat(y_pos, tail));
    return reduce(concat(power(period, (g - 2) / 2), concat(y_inv, tail)));
}

inline Presentation stukow_presentation(const SurfaceSpec& spec) {
    const int g = spec.genus;
    const int n = spec.boundary;
    if (g < 2)
        throw validation_error("presentations start at genus 2 (genus-1 groups are trivial)");

    Presentation p;
    p.spec = spec;
    for (int i = 1; i <= g - 1; ++i) p.generators.push_back(GeneratorSymbol::a(spec, i));
    p.generators.push_back(GeneratorSymbol::y(spec));
    if (g >= 4) p.generators.push_back(GeneratorSymbol::b(spec));

    auto a = [&](int i) { return detail::gen_word(GeneratorSymbol::a(spec, i)); };
    auto add = [&](const std::string& family, const Word& w) {
        Word r = reduce(w);
        if (r.empty()) throw validation_error("relator reduced to the empty word: " + family);
        p.relators.push_back(Relator{family, r});
    };
    const Word y = detail::gen_word(GeneratorSymbol::y(spec));

    if (g == 2) {
        if (n == 0) {
            add("small-case", power(a(1), 2));
            add("small-case", power(y, 2));
            add("small-case", power(concat(a(1), y), 2));
        } else {
            add("small-case", concat(concat(y, a(1)), concat(inverse(y), a(1))));
        }
        return p;
    }
    if (g == 3 && n == 0) {
        add("small-case", concat(concat(a(1), a(2)), concat(a(1), inverse(concat(concat(a(2), a(1)), a(2))))));
        add("small-case", power(y, 2));
        add("small-case", power(concat(a(1), y), 2));
        add("small-case", power(concat(a(2), y), 2));
        add("small-case", power(concat(a(1), a(2)), 6));
        return p;
    }

    const Word b = g >= 4 ? detail::gen_word(GeneratorSymbol::b(spec)) : Word{};
    auto run_a = [&](int lo, int hi) {
        Word w;
        for (int i = lo; i <= hi; ++i) w = concat(w, a(i));
        return w;
    };

    if (g >= 4)
        for (int i = 1; i <= g - 1; ++i)
            for (int j = i + 2; j <= g - 1; ++j)
                add("A1", detail::commutator(a(i), a(j)));
    for (int i = 1; i <= g - 2; ++i)
        add("A2", concat(concat(a(i), a(i + 1)), concat(a(i), inverse(concat(concat(a(i + 1), a(i)), a(i + 1))))));
    if (g >= 4)
        for (int i = 1; i <= g - 1; ++i)
            if (i != 4) add("A3", detail::commutator(a(i), b));
    if (g >= 5)
        add("A4", concat(concat(a(4), b), concat(a(4), inverse(concat(concat(b, a(4)), b)))));
    if (g >= 5)
        add("A5", concat(power(concat(run_a(2, 4), b), 10), power(concat(run_a(1, 4), b), -6)));
    if (g >= 7)
        add("A6", concat(power(concat(run_a(2, 6), b), 12), power(concat(run_a(1, 6), b), -9)));
    if (g == 6)
        add("A9a", detail::commutator(b_chain_word(spec, 2), b));
    if (g >= 8 && g % 2 == 0)
        add("A9b", detail::commutator(a(g - 5), b_chain_word(spec, (g - 2) / 2)));

    if (g >= 4) {
        Word k = concat(concat(concat(a(2), a(3)), concat(a(1), a(2))),
                        concat(y, inverse(concat(concat(a(2), a(3)), concat(a(1), a(2))))));
        add("B1", detail::commutator(y, k));
    }
    {
        Word l = concat(concat(concat(a(2), a(1)), inverse(y)),
                        concat(inverse(a(2)), concat(y, concat(a(1), a(2)))));
        add("B2", concat(concat(y, concat(l, y)), inverse(concat(a(1), concat(l, a(1))))));
    }
    if (g >= 4)
        for (int i = 3; i <= g - 1; ++i)
            add("B3", detail::commutator(a(i), y));
    add("B4", detail::commutator(a(2), concat(y, concat(a(2), inverse(y)))));
    add("B5", concat(concat(y, a(1)), inverse(concat(inverse(a(1)), y))));
    if (g >= 4) {
        Word conj_in = concat(run_a(1, 3), concat(concat(inverse(y), concat(a(2), y)), inverse(run_a(1, 3))));
        Word conj_out = concat(concat(inverse(a(2)), inverse(a(3))),
                               concat(concat(y, concat(a(2), inverse(y))), concat(a(3), a(2))));
        add("B6", concat(concat(concat(b, y), concat(b, inverse(y))), inverse(concat(conj_in, conj_out))));
    }
    if (g >= 6) {
        Word f = concat(concat(concat(a(4), a(5)), concat(a(3), a(4))),
                        concat(concat(a(2), a(3)), concat(a(1), a(2))));
        add("B7", detail::commutator(concat(f, concat(y, inverse(f))), b));
    }
    if (g >= 5) {
        Word r4 = concat(concat(a(4), a(3)), concat(a(2), a(1)));
        Word lhs = concat(concat(concat(y, inverse(r4)), concat(b, concat(r4, inverse(y)))),
                          concat(inverse(r4), concat(inverse(b), r4)));
        Word rhs = concat(concat(concat(inverse(concat(concat(a(2), a(3)), a(4))), concat(y, concat(concat(a(2), a(3)), a(4)))),
                                 concat(inverse(concat(a(2), a(3))), concat(inverse(y), concat(a(2), a(3))))),
                          concat(concat(inverse(a(2)), concat(y, a(2))), inverse(y)));
        add("B8", concat(lhs, inverse(rhs)));
    }

    if (n == 0) {
        if (g % 2 == 0) add("C1", power(run_a(1, g - 1), g));
        add("C2", detail::commutator(a(1), rho_word(spec)));
        add("C3", power(rho_word(spec), 2));
        if (g % 2 == 1 && g >= 5) {
            Word period = concat(concat(inverse(y), run_a(2, g - 1)), concat(y, run_a(2, g - 1)));
            add("C4", power(period, (g - 1) / 2));
        }
    }
    return p;
}

struct FlatPresentation {
    std::vector<std::string> names;
    std::vector<std::vector<int>> relators;   // signed 1-based generator indices
    std::vector<std::string> families;
};

inline std::vector<int> flatten_word(const Presentation& p, const Word& w) {
    std::vector<int> row;
    for (const Letter& l : letters(w)) {
        int idx = 0;
        for (std::size_t i = 0; i < p.generators.size(); ++i)
            if (p.generators[i] == l.gen) {
                idx = static_cast<int>(i) + 1;
                break;
            }
        if (idx == 0)
            throw validation_error("word uses a generator outside the presentation: " +
                                   format_generator(l.gen));
        row.push_back(l.sign * idx);
    }
    return row;
}

inline FlatPresentation flatten(const Presentation& p) {
    FlatPresentation flat;
    for (const GeneratorSymbol& g : p.generators)
        flat.names.push_back(format_generator(g));
    for (const Relator& r : p.relators) {
        flat.relators.push_back(flatten_word(p, r.word));
        flat.families.push_back(r.family);
    }
    return flat;
}

} // namespace crosscap
