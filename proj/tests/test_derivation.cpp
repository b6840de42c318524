#include <catch2/catch_amalgamated.hpp>

#include <crosscap/derivation.hpp>
#include <crosscap/presentation.hpp>
#include <crosscap/serialize.hpp>

using namespace crosscap;

namespace {

const Relator& relator_of(const Presentation& p, const std::string& family) {
    for (const Relator& r : p.relators)
        if (r.family == family) return r;
    throw std::runtime_error("no relator in family " + family);
}

} // namespace

TEST_CASE("all builtin scripts replay cleanly on small surfaces") {
    struct Case {
        const char* name;
        int genus, boundary;
    };
    for (Case c : {Case{"c1", 4, 0}, Case{"c3-odd", 5, 0}, Case{"c3-even", 4, 0},
                   Case{"c4", 5, 0}, Case{"y-square", 3, 1}, Case{"y-square", 2, 0}}) {
        SurfaceSpec spec = SurfaceSpec::make(c.genus, c.boundary);
        DerivationScript script = builtin_script(spec, c.name);
        ReplayReport rep = replay(script);
        INFO(c.name << " on genus " << c.genus << ", boundary " << c.boundary << ": "
                    << rep.failure);
        REQUIRE(rep.pass);
        REQUIRE(rep.steps.size() == script.steps.size());
        REQUIRE(rep.final_word == reduce(script.claim_rhs));
    }
}

TEST_CASE("script claims are the matching presentation relators") {
    for (int g : {4, 6}) {
        SurfaceSpec spec = SurfaceSpec::make(g, 0);
        Presentation p = stukow_presentation(spec);
        REQUIRE(reduce(builtin_script(spec, "c1").claim_lhs) ==
                relator_of(p, "C1").word);
        REQUIRE(reduce(builtin_script(spec, "c3-even").claim_lhs) ==
                relator_of(p, "C3").word);
    }
    for (int g : {5, 7}) {
        SurfaceSpec spec = SurfaceSpec::make(g, 0);
        Presentation p = stukow_presentation(spec);
        REQUIRE(reduce(builtin_script(spec, "c3-odd").claim_lhs) ==
                relator_of(p, "C3").word);
        REQUIRE(reduce(builtin_script(spec, "c4").claim_lhs) ==
                relator_of(p, "C4").word);
    }
}

TEST_CASE("script sizes stay in the documented range") {
    SurfaceSpec g4 = SurfaceSpec::make(4, 0);
    REQUIRE(builtin_script(g4, "c1").steps.size() == 1);
    REQUIRE(builtin_script(g4, "c3-even").steps.size() == 13);
    REQUIRE(builtin_script(SurfaceSpec::make(5, 0), "c3-odd").steps.size() == 2);
    REQUIRE(builtin_script(SurfaceSpec::make(5, 0), "c4").steps.size() == 13);
    REQUIRE(builtin_script(SurfaceSpec::make(2, 0), "y-square").steps.size() == 3);
}

TEST_CASE("availability tracks the surface") {
    auto names = [](const SurfaceSpec& spec) {
        std::vector<std::string> out;
        for (const DerivationScript& s : builtin_scripts(spec)) out.push_back(s.name);
        return out;
    };
    REQUIRE(names(SurfaceSpec::make(4, 1)) == std::vector<std::string>{"y-square"});
    REQUIRE(names(SurfaceSpec::make(6, 0)) ==
            std::vector<std::string>{"c1", "c3-even", "y-square"});
    REQUIRE(names(SurfaceSpec::make(5, 0)) ==
            std::vector<std::string>{"c3-odd", "c4", "y-square"});

    REQUIRE_THROWS_AS(builtin_script(SurfaceSpec::make(5, 0), "c1"), validation_error);
    REQUIRE_THROWS_AS(builtin_script(SurfaceSpec::make(4, 0), "no-such"), validation_error);
}

TEST_CASE("single rewrite steps splice, expand and reject") {
    SurfaceSpec spec = SurfaceSpec::make(3, 1);
    // y^2 inside a1 y^2 a1
    Word cur = parse_word(spec, "a1 y^2 a1");
    DerivationScript ys = builtin_script(spec, "y-square");

    DerivationStep step = ys.steps[1];   // Y[mu1, loop] -> t_inner t_outer
    SECTION("position out of range") {
        step.position = 10;
        ApplyOutcome out = apply_step(cur, step);
        REQUIRE(!out.ok);
        REQUIRE(out.reason.find("exceeds word length") != std::string::npos);
    }
    SECTION("literal mismatch is localized") {
        step.position = 0;
        ApplyOutcome out = apply_step(cur, step);
        REQUIRE(!out.ok);
        REQUIRE(out.reason.find("does not match") != std::string::npos);
    }
    SECTION("expansion inserts a cancelling pair") {
        // insert a2 a2^-1 in the middle, then rewrite nothing else: the free
        // reduction must erase it again
        DerivationStep noop = ys.steps[1];
        noop.expansion = parse_word(spec, "a2");
        noop.expansion_position = 2;
        noop.position = 10;
        ApplyOutcome out = apply_step(cur, noop);
        REQUIRE(!out.ok);   // rewriting still fails out of range...
        REQUIRE(out.reason.find("exceeds word length 6") != std::string::npos);
    }
    SECTION("expansion position is validated") {
        DerivationStep bad = ys.steps[1];
        bad.expansion = parse_word(spec, "a2");
        bad.expansion_position = 9;
        ApplyOutcome out = apply_step(cur, bad);
        REQUIRE(!out.ok);
        REQUIRE(out.reason.find("expansion position") != std::string::npos);
    }
}

TEST_CASE("replay failures localize the broken step") {
    SurfaceSpec spec = SurfaceSpec::make(4, 0);
    DerivationScript good = builtin_script(spec, "c3-even");
    REQUIRE(replay(good).pass);

    SECTION("shifted position") {
        DerivationScript bad = good;
        bad.steps[0].position += 1;
        ReplayReport rep = replay(bad);
        REQUIRE(!rep.pass);
        REQUIRE(rep.fail_step == 0);
    }
    SECTION("flipped direction") {
        DerivationScript bad = good;
        bad.steps[2].direction = bad.steps[2].direction == StepDirection::lhs_to_rhs
                                     ? StepDirection::rhs_to_lhs
                                     : StepDirection::lhs_to_rhs;
        ReplayReport rep = replay(bad);
        REQUIRE(!rep.pass);
        REQUIRE(rep.fail_step >= 0);
    }
    SECTION("tampered instance word") {
        DerivationScript bad = good;
        bad.steps[1].instance.rhs = parse_word(spec, "a2");
        ReplayReport rep = replay(bad);
        REQUIRE(!rep.pass);
        REQUIRE(rep.fail_step == 1);
        REQUIRE(rep.failure.find("invalid relation instance") != std::string::npos);
    }
    SECTION("wrong surface") {
        DerivationScript bad = good;
        bad.spec = SurfaceSpec::make(6, 0);
        ReplayReport rep = replay(bad);
        REQUIRE(!rep.pass);
        REQUIRE(rep.fail_step == 0);
        REQUIRE(rep.failure.find("different surface") != std::string::npos);
    }
    SECTION("claim tweak fails after the last step") {
        DerivationScript bad = good;
        bad.claim_rhs = parse_word(spec, "a1");
        ReplayReport rep = replay(bad);
        REQUIRE(!rep.pass);
        REQUIRE(rep.fail_step == -1);
        REQUIRE(rep.failure.find("final word") != std::string::npos);
    }
}

TEST_CASE("scripts survive a serialization round-trip") {
    for (auto [name, g] : {std::pair{"c4", 5}, std::pair{"y-square", 3}}) {
        SurfaceSpec spec = SurfaceSpec::make(g, 0);
        DerivationScript script = builtin_script(spec, name);
        nlohmann::json j = to_json(script);
        DerivationScript back = script_from_json(j);
        REQUIRE(back == script);
        REQUIRE(replay(back).pass);
    }
}
