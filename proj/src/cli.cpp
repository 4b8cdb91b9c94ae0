#include "toric/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "toric/reporting.hpp"

namespace toric::cli {

namespace {

struct CommonOptions {
    std::string input;
    std::string format = "text";
    std::string out_path;
    std::string mode = "morphic";
    int qmax = -1;
    bool scramble = false;
    unsigned long long scramble_seed = 0;
};

std::string read_input(const std::string& path)
{
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open input file \"" + path + "\"");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void emit(const std::string& payload, const CommonOptions& opt, std::ostream& out)
{
    if (opt.out_path.empty()) {
        out << payload;
        return;
    }
    std::ofstream file(opt.out_path);
    if (!file)
        throw InputError("cannot open output file \"" + opt.out_path + "\"");
    file << payload;
}

Fan load_fan(const CommonOptions& opt)
{
    FanDocument doc = parse_fan_document_text(read_input(opt.input));
    Fan fan = build_fan(doc);
    if (opt.scramble) {
        std::mt19937_64 rng(opt.scramble_seed);
        fan = fan.with_orientations(random_orientations(rng, fan));
    }
    return fan;
}

Mode mode_of(const CommonOptions& opt)
{
    if (opt.mode == "morphic")
        return Mode::morphic;
    if (opt.mode == "singular")
        return Mode::singular;
    throw InputError("unknown mode \"" + opt.mode + "\"");
}

void add_common(CLI::App* cmd, CommonOptions& opt, bool with_mode, bool with_qmax)
{
    cmd->add_option("input", opt.input, "fan document path, or - for stdin")->required();
    cmd->add_option("--format", opt.format, "output format: text, json or csv")
        ->default_val("text");
    cmd->add_option("--out", opt.out_path, "write output to this file instead of stdout");
    if (with_mode)
        cmd->add_option("--mode", opt.mode, "coefficient mode: morphic or singular")
            ->default_val("morphic");
    if (with_qmax)
        cmd->add_option("--qmax", opt.qmax, "largest weight row (default: fan rank)")
            ->check(CLI::NonNegativeNumber);
    auto* scramble = cmd->add_option("--scramble-orientations", opt.scramble_seed,
                                     "randomize cone orientations with this seed");
    scramble->group("");  // test hook, hidden from help
    cmd->callback([&opt, scramble]() { opt.scramble = scramble->count() > 0; });
}

E2Page e2_of(const Fan& fan, Mode mode)
{
    E1Page page = build_e1(fan, mode);
    D1 d1 = build_d1(fan, page);
    return compute_e2(page, d1);
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"exact combinatorial cohomology of complete toric varieties"};
    app.require_subcommand(1);

    CommonOptions opt;
    std::string builtin_name;

    CLI::App* validate = app.add_subcommand("validate", "check fan axioms and completeness");
    add_common(validate, opt, false, false);

    CLI::App* cech = app.add_subcommand("cech", "chain complex of the fan, with homology");
    add_common(cech, opt, false, false);

    CLI::App* flags = app.add_subcommand("flags", "flag complex and its reduced homology");
    add_common(flags, opt, false, false);

    CLI::App* e1 = app.add_subcommand("e1", "first page block ranks");
    add_common(e1, opt, true, false);

    CLI::App* e2 = app.add_subcommand("e2", "second page groups, with integral torsion");
    add_common(e2, opt, true, false);

    CLI::App* morphic = app.add_subcommand("morphic", "rational morphic cohomology ranks by weight");
    add_common(morphic, opt, false, true);

    CLI::App* betti = app.add_subcommand("betti", "rational Betti numbers and Euler characteristic");
    add_common(betti, opt, false, false);

    CLI::App* oracle = app.add_subcommand("oracle", "combinatorial cross-checks");
    add_common(oracle, opt, false, false);

    CLI::App* builtin = app.add_subcommand("builtin", "emit a builtin fan document");
    std::string known;
    for (const auto& n : builtin_names())
        known += (known.empty() ? "" : ", ") + n;
    builtin->add_option("name", builtin_name, "one of: " + known)->required();
    builtin->add_option("--out", opt.out_path, "write output to this file instead of stdout");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        // Normalize CLI11's exit codes onto the documented contract: 0 for
        // --help, 1 for any argument problem.
        return app.exit(e, out, err) == 0 ? 0 : 1;
    }

    try {
        OutputFormat format = parse_format(opt.format);

        if (builtin->parsed()) {
            FanDocument doc = builtin_fan(builtin_name);
            emit(to_json(doc).dump(2) + "\n", opt, out);
            return 0;
        }

        if (validate->parsed()) {
            FanDocument doc = parse_fan_document_text(read_input(opt.input));
            auto [fan, report] = build_fan_unchecked(doc);
            emit(render_validation(fan, report).in(format), opt, out);
            return report.ok() && report.complete ? 0 : 1;
        }

        Fan fan = load_fan(opt);

        if (cech->parsed()) {
            ChainComplex cpx = build_cech_complex(fan);
            std::vector<FgAbGroup> homology = cech_homology(fan);
            bool aug = augmentation_check(fan, cpx);
            emit(render_cech(fan, cpx, homology, aug).in(format), opt, out);
            return 0;
        }
        if (flags->parsed()) {
            SimplicialComplex k = flag_complex(fan);
            emit(render_flags(k, reduced_homology(k)).in(format), opt, out);
            return 0;
        }
        if (e1->parsed()) {
            emit(render_e1(build_e1(fan, mode_of(opt))).in(format), opt, out);
            return 0;
        }
        if (e2->parsed()) {
            emit(render_e2(e2_of(fan, mode_of(opt))).in(format), opt, out);
            return 0;
        }
        if (morphic->parsed()) {
            int qmax = opt.qmax >= 0 ? opt.qmax : static_cast<int>(fan.rank());
            auto table = morphic_table(e2_of(fan, Mode::morphic), qmax);
            emit(render_morphic(table, qmax).in(format), opt, out);
            return 0;
        }
        if (betti->parsed()) {
            auto b = betti_numbers(e2_of(fan, Mode::singular));
            emit(render_betti(b, euler_characteristic(b)).in(format), opt, out);
            return 0;
        }
        if (oracle->parsed()) {
            OracleReport report = oracle_report(fan);
            emit(render_oracle(report).in(format), opt, out);
            return report.all_pass ? 0 : 2;
        }
        err << "error: no command\n";
        return 1;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        for (const auto& v : e.violations)
            err << "  violation: " << v << "\n";
        return 1;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const InvariantError& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace toric::cli
