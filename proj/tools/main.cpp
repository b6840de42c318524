#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include <crosscap/cli.hpp>

int main(int argc, char** argv) {
    CLI::App app{"presentation toolkit for mapping class groups of non-orientable surfaces"};
    app.require_subcommand(1);

    crosscap::CommandRequest req;
    std::string output_path;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("-g,--genus", req.genus, "number of crosscaps (>= 1)")->required();
        cmd->add_option("-n,--boundary", req.boundary, "boundary components (0 or 1)");
        cmd->add_option("--format", req.format, "output format: text or structured");
        cmd->add_option("--output", output_path, "write output to this file");
    };

    add_common(app.add_subcommand("present", "print the finite presentation"));

    auto* check = app.add_subcommand("check-word", "evaluate a word's homology action");
    add_common(check);
    check->add_option("--word", req.word, "word in the generators, e.g. 'a1 y^-1 b'")
        ->required();
    check->add_flag("--require-trivial", req.require_trivial,
                    "exit 1 unless the word acts trivially");

    add_common(app.add_subcommand("oracle", "homology-check every relator"));

    auto* rep = app.add_subcommand("replay", "replay a derivation script");
    add_common(rep);
    rep->add_option("--script", req.script,
                    "builtin script: c1, c3-odd, c3-even, c4, y-square");
    rep->add_option("--script-file", req.script_file, "JSON script to replay instead");
    rep->add_flag("--dump-script", req.dump_script, "print the script as JSON and exit");

    auto* en = app.add_subcommand("enumerate", "Todd-Coxeter coset enumeration");
    add_common(en);
    en->add_option("--subgroup", req.subgroup, "subgroup generator words, ';'-separated");
    en->add_option("--max-cosets", req.max_cosets, "enumeration bound");
    en->add_option("--expect-index", req.expect_index, "exit 1 unless this index is found");

    add_common(app.add_subcommand("abelianize", "Smith normal form of the abelianization"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    req.command = app.get_subcommands().front()->get_name();

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!output_path.empty()) {
        file.open(output_path);
        if (!file) {
            std::cerr << "error: cannot open output file: " << output_path << '\n';
            return 2;
        }
        out = &file;
    }
    return crosscap::run(req, *out);
}
