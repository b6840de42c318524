#pragma once

// JSON encoding of surfaces, curves, words, relation instances and
// derivation scripts.  Curves and words travel as their printable text forms,
// so a serialized object is readable as-is and re-parses through the same
// validators as hand-written input.

#include <string>
#include <vector>

#include <json.hpp>

#include "crosscap/derivation.hpp"

namespace crosscap {

inline nlohmann::json to_json(const SurfaceSpec& spec) {
    return {{"genus", spec.genus}, {"boundary", spec.boundary}};
}

inline SurfaceSpec spec_from_json(const nlohmann::json& j) {
    return SurfaceSpec::make(j.at("genus").get<int>(), j.at("boundary").get<int>());
}

inline nlohmann::json to_json(const SurfaceSpec&, const CurveSymbol& c) {
    return format_curve(c);
}

inline nlohmann::json to_json(const SurfaceSpec&, const Word& w) {
    return format_word(w);
}

inline nlohmann::json to_json(const RelationInstance& inst) {
    nlohmann::json curves = nlohmann::json::array();
    for (const auto& [name, curve] : inst.curves)
        curves.push_back({{"name", name}, {"curve", format_curve(curve)}});
    return {{"tag", tag_name(inst.tag)},
            {"surface", to_json(inst.spec)},
            {"curves", curves},
            {"conjugator", format_word(inst.f)},
            {"power", inst.power},
            {"signs", inst.signs},
            {"chain_length", inst.chain_length},
            {"kind", inst.kind},
            {"lhs", format_word(inst.lhs)},
            {"rhs", format_word(inst.rhs)}};
}

inline RelationInstance instance_from_json(const nlohmann::json& j) {
    RelationInstance inst;
    inst.tag = tag_from_name(j.at("tag").get<std::string>());
    inst.spec = spec_from_json(j.at("surface"));
    for (const auto& e : j.at("curves"))
        inst.curves.emplace_back(e.at("name").get<std::string>(),
                                 parse_curve(inst.spec, e.at("curve").get<std::string>()));
    inst.f = parse_word(inst.spec, j.at("conjugator").get<std::string>());
    inst.power = j.at("power").get<int>();
    inst.signs = j.at("signs").get<std::vector<int>>();
    inst.chain_length = j.at("chain_length").get<int>();
    inst.kind = j.value("kind", std::string{});
    inst.lhs = parse_word(inst.spec, j.at("lhs").get<std::string>());
    inst.rhs = parse_word(inst.spec, j.at("rhs").get<std::string>());
    return inst;
}

inline nlohmann::json to_json(const DerivationStep& st) {
    return {{"position", st.position},
            {"direction",
             st.direction == StepDirection::lhs_to_rhs ? "lhs_to_rhs" : "rhs_to_lhs"},
            {"instance", to_json(st.instance)},
            {"expansion", format_word(st.expansion)},
            {"expansion_position", st.expansion_position}};
}

inline DerivationStep step_from_json(const nlohmann::json& j) {
    DerivationStep st;
    st.position = j.at("position").get<std::size_t>();
    std::string dir = j.at("direction").get<std::string>();
    if (dir == "lhs_to_rhs")
        st.direction = StepDirection::lhs_to_rhs;
    else if (dir == "rhs_to_lhs")
        st.direction = StepDirection::rhs_to_lhs;
    else
        throw validation_error("unknown step direction '" + dir + "'");
    st.instance = instance_from_json(j.at("instance"));
    st.expansion = parse_word(st.instance.spec, j.at("expansion").get<std::string>());
    st.expansion_position = j.at("expansion_position").get<std::size_t>();
    return st;
}

inline nlohmann::json to_json(const DerivationScript& sc) {
    nlohmann::json steps = nlohmann::json::array();
    for (const DerivationStep& st : sc.steps) steps.push_back(to_json(st));
    return {{"name", sc.name},
            {"surface", to_json(sc.spec)},
            {"claim_lhs", format_word(sc.claim_lhs)},
            {"claim_rhs", format_word(sc.claim_rhs)},
            {"note", sc.note},
            {"steps", steps}};
}

inline DerivationScript script_from_json(const nlohmann::json& j) {
    DerivationScript sc;
    sc.name = j.at("name").get<std::string>();
    sc.spec = spec_from_json(j.at("surface"));
    sc.claim_lhs = parse_word(sc.spec, j.at("claim_lhs").get<std::string>());
    sc.claim_rhs = parse_word(sc.spec, j.at("claim_rhs").get<std::string>());
    sc.note = j.value("note", std::string{});
    for (const auto& e : j.at("steps")) sc.steps.push_back(step_from_json(e));
    return sc;
}

inline nlohmann::json to_json(const ReplayReport& rep) {
    nlohmann::json steps = nlohmann::json::array();
    for (const StepReport& sr : rep.steps)
        steps.push_back({{"index", sr.index},
                         {"tag", sr.tag},
                         {"before", format_word(sr.before)},
                         {"after", format_word(sr.after)},
                         {"ok", sr.ok},
                         {"detail", sr.detail}});
    return {{"pass", rep.pass},
            {"fail_step", rep.fail_step},
            {"failure", rep.failure},
            {"final_word", format_word(rep.final_word)},
            {"steps", steps}};
}

inline nlohmann::json to_json(const Presentation& pres) {
    nlohmann::json gens = nlohmann::json::array();
    for (const GeneratorSymbol& g : pres.generators)
        gens.push_back(format_generator(g));
    nlohmann::json rels = nlohmann::json::array();
    for (const Relator& r : pres.relators)
        rels.push_back({{"family", r.family}, {"word", format_word(r.word)}});
    return {{"surface", to_json(pres.spec)}, {"generators", gens}, {"relators", rels}};
}

} // namespace crosscap
