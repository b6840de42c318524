#pragma once

// Command dispatch behind the command-line binary.  Every command is a pure
// function of the request; output goes to the supplied stream and the return
// value is the process exit code: 0 = success/PASS, 1 = verification FAIL,
// 2 = usage or input error.

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "crosscap/abelian.hpp"
#include "crosscap/coset.hpp"
#include "crosscap/serialize.hpp"

namespace crosscap {

struct CommandRequest {
    std::string command;           // present | check-word | oracle | replay |
                                   // enumerate | abelianize
    int genus = 2;
    int boundary = 0;
    std::string format = "text";   // text | structured

    std::string word;              // check-word
    bool require_trivial = false;  // check-word: exit 1 unless trivial

    std::string script;            // replay: builtin script name
    std::string script_file;       // replay: JSON script path (overrides name)
    bool dump_script = false;      // replay: print the script instead of running

    std::string subgroup;          // enumerate: words separated by ';'
    std::size_t max_cosets = 200000;
    long expect_index = -1;        // enumerate: -1 = no expectation
};

namespace detail {

inline void emit(std::ostream& out, const std::string& format, const std::string& command,
                 const SurfaceSpec& spec, const nlohmann::json& result,
                 const nlohmann::json& details, const std::string& text) {
    if (format == "structured") {
        nlohmann::json j{{"command", command},
                         {"spec", to_json(spec)},
                         {"result", result},
                         {"details", details}};
        out << j.dump(2) << '\n';
    } else {
        out << text;
    }
}

inline std::vector<std::string> split_words(const std::string& joined) {
    std::vector<std::string> out;
    std::string cur;
    std::stringstream ss(joined);
    while (std::getline(ss, cur, ';')) {
        std::string t = trim(cur);
        if (!t.empty()) out.push_back(t);
    }
    return out;
}

inline int run_present(const CommandRequest& req, std::ostream& out) {
    SurfaceSpec spec = SurfaceSpec::make(req.genus, req.boundary);
    Presentation pres = stukow_presentation(spec);
    std::map<std::string, int> counts;
    for (const Relator& r : pres.relators) ++counts[r.family];

    std::ostringstream text;
    text << "generators (" << pres.generators.size() << "):";
    for (const GeneratorSymbol& g : pres.generators) text << ' ' << format_generator(g);
    text << "\nrelators (" << pres.relators.size() << "):\n";
    for (const Relator& r : pres.relators)
        text << "  " << r.family << ": " << format_word(r.word) << '\n';

    nlohmann::json result{{"generator_count", pres.generators.size()},
                          {"relator_count", pres.relators.size()}};
    emit(out, req.format, "present", spec,
         result, {{"presentation", to_json(pres)}, {"family_counts", counts}},
         text.str());
    return 0;
}

inline int run_check_word(const CommandRequest& req, std::ostream& out) {
    SurfaceSpec spec = SurfaceSpec::make(req.genus, req.boundary);
    Word w = parse_word(spec, req.word);
    RelatorCheck chk = check_relator(spec, w);

    std::ostringstream text;
    text << "word: " << format_word(reduce(w)) << '\n';
    text << "trivial on homology: " << (chk.ok ? "yes" : "no") << '\n';
    if (!chk.ok && chk.first_moved)
        text << "first moved basis vector: e" << *chk.first_moved << '\n';

    nlohmann::json result{{"trivial_on_homology", chk.ok}};
    nlohmann::json details{{"reduced_word", format_word(reduce(w))}};
    if (!chk.ok && chk.first_moved) details["first_moved"] = *chk.first_moved;
    emit(out, req.format, "check-word", spec, result, details, text.str());
    return req.require_trivial && !chk.ok ? 1 : 0;
}

inline int run_oracle(const CommandRequest& req, std::ostream& out) {
    SurfaceSpec spec = SurfaceSpec::make(req.genus, req.boundary);
    Presentation pres = stukow_presentation(spec);
    nlohmann::json failures = nlohmann::json::array();
    std::ostringstream text;
    for (std::size_t i = 0; i < pres.relators.size(); ++i) {
        RelatorCheck chk = check_relator(spec, pres.relators[i].word);
        if (chk.ok) continue;
        failures.push_back({{"index", i},
                            {"family", pres.relators[i].family},
                            {"word", format_word(pres.relators[i].word)}});
        text << "FAIL " << pres.relators[i].family << ": "
             << format_word(pres.relators[i].word) << '\n';
    }
    const bool ok = failures.empty();
    text << (ok ? "all relators oracle-trivial" : "oracle failures found") << " ("
         << pres.relators.size() << " checked)\n";

    nlohmann::json result{{"relators_checked", pres.relators.size()},
                          {"all_trivial", ok}};
    emit(out, req.format, "oracle", spec, result, {{"failures", failures}}, text.str());
    return ok ? 0 : 1;
}

inline int run_replay(const CommandRequest& req, std::ostream& out) {
    SurfaceSpec spec = SurfaceSpec::make(req.genus, req.boundary);
    DerivationScript sc;
    if (!req.script_file.empty()) {
        std::ifstream in(req.script_file);
        if (!in) throw validation_error("cannot open script file: " + req.script_file);
        nlohmann::json j;
        in >> j;
        sc = script_from_json(j);
    } else {
        if (req.script.empty())
            throw validation_error("replay needs --script NAME or --script-file PATH");
        sc = builtin_script(spec, req.script);
    }

    if (req.dump_script) {
        out << to_json(sc).dump(2) << '\n';
        return 0;
    }

    ReplayReport rep = replay(sc);
    std::ostringstream text;
    text << "script " << sc.name << ": " << format_word(sc.claim_lhs) << " = "
         << format_word(sc.claim_rhs) << '\n';
    for (const StepReport& sr : rep.steps) {
        text << "  step " << sr.index << " [" << sr.tag << "] ";
        if (sr.ok)
            text << format_word(sr.before) << "  ->  " << format_word(sr.after) << '\n';
        else
            text << "FAIL: " << sr.detail << '\n';
    }
    if (rep.pass)
        text << "PASS (" << rep.steps.size() << " steps)\n";
    else
        text << "FAIL: " << rep.failure << '\n';

    nlohmann::json result{{"pass", rep.pass}, {"script", sc.name}};
    emit(out, req.format, "replay", spec, result, {{"report", to_json(rep)}},
         text.str());
    return rep.pass ? 0 : 1;
}

inline int run_enumerate(const CommandRequest& req, std::ostream& out) {
    SurfaceSpec spec = SurfaceSpec::make(req.genus, req.boundary);
    Presentation pres = stukow_presentation(spec);
    FlatPresentation flat = flatten(pres);
    std::vector<std::vector<int>> sub;
    nlohmann::json sub_json = nlohmann::json::array();
    for (const std::string& s : detail::split_words(req.subgroup)) {
        Word w = parse_word(spec, s);
        sub.push_back(flatten_word(pres, w));
        sub_json.push_back(format_word(w));
    }

    CosetTable table = todd_coxeter(flat, sub, req.max_cosets);
    std::ostringstream text;
    nlohmann::json result;
    nlohmann::json details{{"subgroup", sub_json}, {"max_cosets", req.max_cosets}};
    int code = 0;
    if (table.status == CosetTable::Status::closed) {
        result["status"] = "closed";
        result["index"] = table.index();
        text << "closed: index " << table.index() << '\n';
        if (sub.empty()) {
            GroupStructure st = analyze_structure(table);
            result["order"] = table.index();
            result["abelian"] = st.abelian;
            result["exponent"] = st.exponent;
            text << "order " << table.index() << ", "
                 << (st.abelian ? "abelian" : "non-abelian") << ", exponent "
                 << st.exponent << '\n';
        }
        if (req.expect_index >= 0 &&
            table.index() != static_cast<std::size_t>(req.expect_index)) {
            text << "FAIL: expected index " << req.expect_index << '\n';
            result["expected_index"] = req.expect_index;
            code = 1;
        }
    } else {
        result["status"] = "overflowed";
        text << "no closure within " << req.max_cosets << " cosets\n";
        if (req.expect_index >= 0) {
            text << "FAIL: expected index " << req.expect_index << '\n';
            result["expected_index"] = req.expect_index;
            code = 1;
        }
    }
    emit(out, req.format, "enumerate", spec, result, details, text.str());
    return code;
}

inline int run_abelianize(const CommandRequest& req, std::ostream& out) {
    SurfaceSpec spec = SurfaceSpec::make(req.genus, req.boundary);
    Presentation pres = stukow_presentation(spec);
    AbelianInvariants inv = abelianization(pres);

    std::ostringstream text;
    text << "free rank " << inv.free_rank << ", torsion [";
    nlohmann::json torsion = nlohmann::json::array();
    for (std::size_t i = 0; i < inv.torsion.size(); ++i) {
        if (i) text << ", ";
        text << inv.torsion[i];
        torsion.push_back(inv.torsion[i].str());
    }
    text << "]\n";

    nlohmann::json result{{"free_rank", inv.free_rank}, {"torsion", torsion}};
    emit(out, req.format, "abelianize", spec, result,
         {{"generator_count", pres.generators.size()},
          {"relator_count", pres.relators.size()}},
         text.str());
    return 0;
}

} // namespace detail

inline int run(const CommandRequest& req, std::ostream& out) {
    try {
        if (req.format != "text" && req.format != "structured")
            throw validation_error("unknown format '" + req.format + "'");
        if (req.command == "present") return detail::run_present(req, out);
        if (req.command == "check-word") return detail::run_check_word(req, out);
        if (req.command == "oracle") return detail::run_oracle(req, out);
        if (req.command == "replay") return detail::run_replay(req, out);
        if (req.command == "enumerate") return detail::run_enumerate(req, out);
        if (req.command == "abelianize") return detail::run_abelianize(req, out);
        throw validation_error("unknown command '" + req.command + "'");
    } catch (const parse_error& e) {
        out << "error: " << e.what() << '\n';
        return 2;
    } catch (const validation_error& e) {
        out << "error: " << e.what() << '\n';
        return 2;
    } catch (const nlohmann::json::exception& e) {
        out << "error: malformed script: " << e.what() << '\n';
        return 2;
    }
}

} // namespace crosscap
