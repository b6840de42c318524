#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <crosscap/word.hpp>

using namespace crosscap;

static const SurfaceSpec g5 = SurfaceSpec::make(5, 0);

namespace {

Word random_word(std::mt19937& rng, const SurfaceSpec& spec, int len) {
    std::uniform_int_distribution<int> pick(0, spec.genus - 1);
    std::uniform_int_distribution<int> expd(-3, 3);
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

TEST_CASE("generator construction is validated") {
    REQUIRE_NOTHROW(GeneratorSymbol::twist(g5, CurveSymbol::alpha(1)));
    // twists need a two-sided curve
    REQUIRE_THROWS_AS(GeneratorSymbol::twist(g5, CurveSymbol::mu(1)), validation_error);
    // pushing maps need a one-sided mu meeting alpha once
    REQUIRE_NOTHROW(GeneratorSymbol::push(g5, CurveSymbol::mu(1), CurveSymbol::alpha(1)));
    REQUIRE_NOTHROW(
        GeneratorSymbol::push(g5, CurveSymbol::mu(1), CurveSymbol::gamma({1, 2, 3})));
    REQUIRE_THROWS_AS(GeneratorSymbol::push(g5, CurveSymbol::alpha(1), CurveSymbol::mu(1)),
                      validation_error);
    REQUIRE_THROWS_AS(GeneratorSymbol::push(g5, CurveSymbol::mu(2), CurveSymbol::gamma({1, 3})),
                      validation_error);   // classes pair to 0
}

TEST_CASE("free reduction cancels across term boundaries") {
    SurfaceSpec spec = g5;
    Word w = parse_word(spec, "a1 a2 a2^-1 a1^-1");
    REQUIRE(reduce(w).empty());
    Word v = parse_word(spec, "a1^3 a1^-1 a2");
    REQUIRE(format_word(reduce(v)) == "a1^2 a2");
    Word u = parse_word(spec, "a1 a2^2 a2^-2 a1");
    REQUIRE(format_word(reduce(u)) == "a1^2");
    REQUIRE(reduce(Word{}).empty());
}

TEST_CASE("reduction properties on random words") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 10000; ++trial) {
        Word w = random_word(rng, g5, 8);
        Word r = reduce(w);
        REQUIRE(reduce(r) == r);                       // idempotent
        REQUIRE(reduce(concat(w, inverse(w))).empty());  // w w^-1 = 1
        REQUIRE(reduce(concat(inverse(w), w)).empty());
    }
}

TEST_CASE("letters and from_letters round-trip reduced words") {
    Word w = reduce(parse_word(g5, "a1^2 y^-3 a2"));
    REQUIRE(from_letters(letters(w)) == w);
    REQUIRE(letter_length(w) == 6);
    REQUIRE(letters(w)[2].sign == -1);
}

TEST_CASE("concat, power and conjugate build the expected letters") {
    Word a1 = parse_word(g5, "a1");
    Word y = parse_word(g5, "y");
    REQUIRE(format_word(reduce(power(a1, -3))) == "a1^-3");
    REQUIRE(format_word(power(a1, -3)) == "a1^-1 a1^-1 a1^-1");
    REQUIRE(format_word(reduce(power(concat(a1, y), 2))) == "a1 y a1 y");
    REQUIRE(format_word(reduce(conjugate(y, a1))) == "y a1 y^-1");
    REQUIRE(reduce(conjugate(y, Word{})).empty());
}

TEST_CASE("word text round-trips") {
    for (const char* text :
         {"a1 a4^-2 y b", "t[g:1,3,4,5]", "Y[m:1; al:1]^-1", "t[cb:2-4:d1]",
          "Y[m:2; g:2,3,4] a2", "t[decl:loop_1:00000:two]", "1"}) {
        Word w = parse_word(g5, text);
        REQUIRE(parse_word(g5, format_word(w)) == w);
    }
    REQUIRE(format_word(parse_word(g5, "1")) == "1");
    REQUIRE(format_word(parse_word(g5, "  a1   a2 ")) == "a1 a2");
}

TEST_CASE("word parsing rejects malformed input with offsets") {
    REQUIRE_THROWS_AS(parse_word(g5, "q3"), parse_error);
    REQUIRE_THROWS_AS(parse_word(g5, "a1^"), parse_error);
    REQUIRE_THROWS_AS(parse_word(g5, "a1^0"), parse_error);
    REQUIRE_THROWS_AS(parse_word(g5, "a9"), parse_error);      // no such twist
    REQUIRE_THROWS_AS(parse_word(g5, "t[m:1]"), parse_error);  // one-sided twist
    REQUIRE_THROWS_AS(parse_word(g5, "Y[al:1]"), parse_error);
    REQUIRE_THROWS_AS(parse_word(g5, "b q"), parse_error);
    try {
        parse_word(g5, "a1 q7");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        REQUIRE(e.position == 3);
    }
}
