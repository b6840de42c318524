#include <catch2/catch_amalgamated.hpp>

#include <crosscap/surface.hpp>

using namespace crosscap;

static const SurfaceSpec g5 = SurfaceSpec::make(5, 0);
static const SurfaceSpec g6 = SurfaceSpec::make(6, 1);

TEST_CASE("surface parameters are validated") {
    REQUIRE_THROWS_AS(SurfaceSpec::make(0, 0), validation_error);
    REQUIRE_THROWS_AS(SurfaceSpec::make(65, 0), validation_error);
    REQUIRE_THROWS_AS(SurfaceSpec::make(3, 2), validation_error);
    REQUIRE(SurfaceSpec::make(2, 1).genus == 2);
}

TEST_CASE("curve classes sum the crossed crosscaps") {
    REQUIRE(curve_class(g5, CurveSymbol::gamma({1, 2, 3})).to_string() == "11100");
    REQUIRE(curve_class(g5, CurveSymbol::gamma_prime({1, 3})).to_string() == "10100");
    REQUIRE(curve_class(g5, CurveSymbol::mu(4)) == Z2Vector::basis(5, 4));
    REQUIRE(curve_class(g5, CurveSymbol::alpha(2)) ==
            Z2Vector::basis(5, 2) + Z2Vector::basis(5, 3));
    REQUIRE(curve_class(g6, CurveSymbol::beta()).to_string() == "111100");
}

TEST_CASE("aliases are structural synonyms") {
    REQUIRE(CurveSymbol::mu(3) == CurveSymbol::gamma({3}));
    REQUIRE(CurveSymbol::alpha(1) == CurveSymbol::gamma({1, 2}));
    REQUIRE(CurveSymbol::beta() == CurveSymbol::gamma({1, 2, 3, 4}));
    REQUIRE(!(CurveSymbol::gamma({1, 3}) == CurveSymbol::gamma_prime({1, 3})));
}

TEST_CASE("sidedness follows the self-pairing") {
    REQUIRE(curve_sidedness(g5, CurveSymbol::mu(1)) == Sidedness::one_sided);
    REQUIRE(curve_sidedness(g5, CurveSymbol::alpha(1)) == Sidedness::two_sided);
    REQUIRE(curve_sidedness(g5, CurveSymbol::gamma({1, 2, 3})) == Sidedness::one_sided);
    REQUIRE(curve_sidedness(g5, CurveSymbol::gamma({1, 2, 3, 4, 5})) ==
            Sidedness::one_sided);
}

TEST_CASE("chain boundaries split by parity") {
    // odd number of chain curves (2..4 has k=3): two boundary circles
    std::vector<CurveSymbol> odd = chain_boundary(g5, 2, 4);
    REQUIRE(odd.size() == 2);
    REQUIRE(curve_class(g5, odd[0]).to_string() == "01111");
    REQUIRE(curve_class(g5, odd[0]) == curve_class(g5, odd[1]));
    REQUIRE((curve_class(g5, odd[0]) + curve_class(g5, odd[1])).is_zero());

    // even number of chain curves: a single boundary with trivial class
    std::vector<CurveSymbol> even = chain_boundary(g5, 1, 4);
    REQUIRE(even.size() == 1);
    REQUIRE(curve_class(g5, even[0]).is_zero());
}

TEST_CASE("chain boundary parts match the pushing-map factorization") {
    // [mu_1] + [gamma_{1..g}] equals the class of either boundary part of the
    // tail chain alpha_2 .. alpha_{g-1}
    std::vector<int> all;
    for (int i = 1; i <= 5; ++i) all.push_back(i);
    Z2Vector lhs = curve_class(g5, CurveSymbol::mu(1)) +
                   curve_class(g5, CurveSymbol::gamma(all));
    REQUIRE(lhs ==
            curve_class(g5, CurveSymbol::chain_boundary_part(2, 4, ChainPart::d1)));
}

TEST_CASE("curve validation rejects malformed symbols") {
    REQUIRE_THROWS_AS(validate_curve(g5, CurveSymbol::gamma({2, 1})), validation_error);
    REQUIRE_THROWS_AS(validate_curve(g5, CurveSymbol::gamma({1, 1})), validation_error);
    REQUIRE_THROWS_AS(validate_curve(g5, CurveSymbol::gamma({6})), validation_error);
    REQUIRE_THROWS_AS(validate_curve(g5, CurveSymbol::gamma({})), validation_error);
    REQUIRE_THROWS_AS(
        validate_curve(g5, CurveSymbol::chain_boundary_part(3, 5, ChainPart::whole)),
        validation_error);   // hi must stay below the genus
    REQUIRE_THROWS_AS(
        validate_curve(g5, CurveSymbol::chain_boundary_part(3, 2, ChainPart::d1)),
        validation_error);
    // declared class must match the declared sidedness and the genus
    REQUIRE_THROWS_AS(
        validate_curve(g5, CurveSymbol::declared("c", Z2Vector::basis(5, 1),
                                                 Sidedness::two_sided)),
        validation_error);
    REQUIRE_THROWS_AS(
        validate_curve(g5, CurveSymbol::declared("c", Z2Vector::basis(4, 1),
                                                 Sidedness::one_sided)),
        validation_error);
    REQUIRE_THROWS_AS(
        validate_curve(g5, CurveSymbol::declared("bad name", Z2Vector::zero(5),
                                                 Sidedness::two_sided)),
        validation_error);
    REQUIRE_NOTHROW(validate_curve(
        g5, CurveSymbol::declared("ok_1", Z2Vector::zero(5), Sidedness::two_sided)));
}

TEST_CASE("curve text round-trips through format and parse") {
    for (const CurveSymbol& c :
         {CurveSymbol::gamma({1, 3, 5}), CurveSymbol::gamma_prime({2, 4}),
          CurveSymbol::mu(2), CurveSymbol::alpha(3), CurveSymbol::beta(),
          CurveSymbol::chain_boundary_part(2, 4, ChainPart::d2),
          CurveSymbol::declared("loop_7", Z2Vector::from_string("10010"),
                                Sidedness::two_sided)}) {
        REQUIRE(parse_curve(g5, format_curve(c)) == c);
    }
}

TEST_CASE("curve parsing reports offsets") {
    REQUIRE_THROWS_AS(parse_curve(g5, "g:"), parse_error);
    REQUIRE_THROWS_AS(parse_curve(g5, "q:1"), parse_error);
    REQUIRE_THROWS_AS(parse_curve(g5, "cb:2-9:d1"), parse_error);
    REQUIRE_THROWS_AS(parse_curve(g5, "decl:x:10:one"), parse_error);
    try {
        parse_curve(g5, "g:1,,2", 10);
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        REQUIRE(std::string(e.what()).find("offset") != std::string::npos);
    }
}
