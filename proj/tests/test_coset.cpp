#include <catch2/catch_amalgamated.hpp>

#include <crosscap/coset.hpp>
#include <crosscap/presentation.hpp>

using namespace crosscap;

TEST_CASE("cyclic group of order six enumerates fully") {
    FlatPresentation p;
    p.names = {"x"};
    p.relators = {{1, 1, 1, 1, 1, 1}};
    p.families = {"power"};

    CosetTable t = todd_coxeter(p, {}, 100);
    REQUIRE(t.status == CosetTable::Status::closed);
    REQUIRE(t.index() == 6);
    REQUIRE(group_order(t) == std::uint64_t{6});
    GroupStructure s = analyze_structure(t);
    REQUIRE(s.abelian);
    REQUIRE(s.exponent == 6);

    // index of <x^2>
    CosetTable t2 = todd_coxeter(p, {{1, 1}}, 100);
    REQUIRE(t2.status == CosetTable::Status::closed);
    REQUIRE(t2.index() == 2);
}

TEST_CASE("symmetric group on three letters is non-abelian of order six") {
    FlatPresentation p;
    p.names = {"r", "s"};
    p.relators = {{1, 1, 1}, {2, 2}, {1, 2, 1, 2}};
    p.families = {"r^3", "s^2", "(rs)^2"};

    CosetTable t = todd_coxeter(p, {}, 100);
    REQUIRE(t.status == CosetTable::Status::closed);
    REQUIRE(t.index() == 6);
    GroupStructure s = analyze_structure(t);
    REQUIRE(!s.abelian);
    REQUIRE(s.exponent == 6);   // lcm of element orders 1, 2, 3

    // index of <s> is 3
    CosetTable t2 = todd_coxeter(p, {{2}}, 100);
    REQUIRE(t2.index() == 3);
}

TEST_CASE("the closed genus-two group has order four") {
    Presentation pres = stukow_presentation(SurfaceSpec::make(2, 0));
    FlatPresentation flat = flatten(pres);
    CosetTable t = todd_coxeter(flat, {}, 1000);
    REQUIRE(t.status == CosetTable::Status::closed);
    REQUIRE(t.index() == 4);
    GroupStructure s = analyze_structure(t);
    REQUIRE(s.abelian);
    REQUIRE(s.exponent == 2);   // Klein four-group
}

TEST_CASE("the once-holed genus-two group splits over its twist subgroup") {
    SurfaceSpec spec = SurfaceSpec::make(2, 1);
    Presentation pres = stukow_presentation(spec);
    FlatPresentation flat = flatten(pres);

    std::vector<std::vector<int>> sub = {
        flatten_word(pres, parse_word(spec, "a1")),
        flatten_word(pres, parse_word(spec, "y^2")),
    };
    CosetTable t = todd_coxeter(flat, sub, 1000);
    REQUIRE(t.status == CosetTable::Status::closed);
    REQUIRE(t.index() == 2);

    // the group itself is infinite: enumeration over the trivial subgroup
    // must hit the coset bound instead of closing
    CosetTable big = todd_coxeter(flat, {}, 60);
    REQUIRE(big.status == CosetTable::Status::overflowed);
    REQUIRE(!group_order(big).has_value());
    REQUIRE_THROWS_AS(analyze_structure(big), validation_error);
}

TEST_CASE("coset tracing respects subgroup membership") {
    FlatPresentation p;
    p.names = {"r", "s"};
    p.relators = {{1, 1, 1}, {2, 2}, {1, 2, 1, 2}};
    p.families = {"r^3", "s^2", "(rs)^2"};
    CosetTable t = todd_coxeter(p, {{2}}, 100);

    REQUIRE(t.trace(0, {2}) == 0);            // s fixes the subgroup coset
    REQUIRE(t.trace(0, {1}) != 0);            // r does not lie in <s>
    REQUIRE(t.trace(0, {1, 1, 1}) == 0);      // relator closes at the base coset
}
