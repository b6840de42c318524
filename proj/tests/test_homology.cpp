#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <crosscap/homology.hpp>

using namespace crosscap;

static const SurfaceSpec g5 = SurfaceSpec::make(5, 0);

namespace {

Word random_word(std::mt19937& rng, const SurfaceSpec& spec, int len) {
    std::uniform_int_distribution<int> pick(0, spec.genus - 1);
    std::uniform_int_distribution<int> expd(-2, 2);
    Word w;
    for (int i = 0; i < len; ++i) {
        int e = expd(rng);
        if (e == 0) continue;
        int k = pick(rng);
        GeneratorSymbol gen = k == 0 ? GeneratorSymbol::y(spec)
                                     : GeneratorSymbol::a(spec, k);
        w.terms.push_back(Term{gen, e});
    }
    return w;
}

} // namespace

TEST_CASE("twists act as transvections, pushing maps act trivially") {
    GeneratorSymbol a2 = GeneratorSymbol::a(g5, 2);
    REQUIRE(generator_matrix(g5, a2) ==
            Z2Matrix::transvection(curve_class(g5, CurveSymbol::alpha(2))));
    GeneratorSymbol y = GeneratorSymbol::y(g5);
    REQUIRE(generator_matrix(g5, y).is_identity());

    // the slide conversion: a_2 maps [alpha_1] to [gamma_{1,3}]
    Z2Vector img = generator_matrix(g5, a2).apply(curve_class(g5, CurveSymbol::alpha(1)));
    REQUIRE(img == curve_class(g5, CurveSymbol::gamma({1, 3})));
}

TEST_CASE("word matrix respects word order and inverses") {
    Word w = parse_word(g5, "a1 a2");
    Z2Matrix m1 = generator_matrix(g5, GeneratorSymbol::a(g5, 1));
    Z2Matrix m2 = generator_matrix(g5, GeneratorSymbol::a(g5, 2));
    REQUIRE(word_matrix(g5, w) == m1 * m2);
    REQUIRE(word_matrix(g5, inverse(w)) == word_matrix(g5, w).inverse());
    REQUIRE(word_matrix(g5, parse_word(g5, "a1^-5")) ==
            word_matrix(g5, parse_word(g5, "a1")));   // involutive over Z2
}

TEST_CASE("word matrix is a homomorphism") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 1000; ++trial) {
        Word u = random_word(rng, g5, 6);
        Word v = random_word(rng, g5, 6);
        REQUIRE(word_matrix(g5, concat(u, v)) ==
                word_matrix(g5, u) * word_matrix(g5, v));
    }
}

TEST_CASE("check_relator reports the first moved basis vector") {
    RelatorCheck ok = check_relator(g5, parse_word(g5, "a1^2"));
    REQUIRE(ok.ok);
    REQUIRE(!ok.first_moved);

    RelatorCheck bad = check_relator(g5, parse_word(g5, "a3"));
    REQUIRE(!bad.ok);
    REQUIRE(bad.first_moved);
    REQUIRE(*bad.first_moved == 3);   // e_3 -> e_3 + (e_3+e_4)

    RelatorCheck conj = check_relator(g5, parse_word(g5, "y a1 y^-1 a1^-1"));
    REQUIRE(conj.ok);
}
