#include "k3gm/emit.hpp"
#include "k3gm/serialize.hpp"
#include "k3gm/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <stdexcept>

using namespace k3gm;

namespace {

struct Options {
    RunConfig cfg;
    std::string suite_pos;
    std::string series = "all";
    std::string source = "printed";
    std::string form = "A";
    int level = 0;
    std::string kind;
    std::string selector;
};

void write(const Options &o, std::string text)
{
    if (!text.empty() && text.back() != '\n') {
        text += '\n';
    }
    if (o.cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.cfg.out, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot open output file: " + o.cfg.out);
    }
    f << text;
}

void check_format(const Options &o)
{
    if (o.cfg.format != "json" && o.cfg.format != "text") {
        throw std::invalid_argument("unknown format: " + o.cfg.format + " (json, text)");
    }
}

int emit(const Options &o, const Json &j)
{
    write(o, o.cfg.format == "text" ? expansion_text(j) : j.dump(2));
    return 0;
}

Model single_model(const Options &o)
{
    if (o.cfg.model == "all") {
        throw std::invalid_argument("this command needs a single --model (e6, e7 or e8)");
    }
    return parse_model(o.cfg.model);
}

// Forms only need a model when no level is given.
Model model_for_form(const Options &o)
{
    return o.level == 0 ? single_model(o) : Model::E6;
}

int run_reports(const Options &o, const std::string &suite)
{
    RunConfig cfg = o.cfg;
    cfg.suite = suite;
    cfg.validate();
    auto reports = run(cfg);
    write(o, o.cfg.format == "text" ? to_text(reports) : to_json(reports).dump(2));
    for (const auto &r : reports) {
        if (!r.passed()) {
            return 1;
        }
    }
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact verification of K3 period, connection and modular identities"};
    app.require_subcommand(0, 1);
    app.fallthrough();
    Options o;
    app.add_option("--model", o.cfg.model, "e6, e7, e8 or all")->capture_default_str();
    app.add_option("--suite", o.cfg.suite, "suite to run when no subcommand is given")->capture_default_str();
    app.add_option("-K,--order", o.cfg.K, "bivariate truncation order")->capture_default_str();
    app.add_option("--qorder", o.cfg.qmax, "univariate truncation order")->capture_default_str();
    app.add_option("--format", o.cfg.format, "json or text")->capture_default_str();
    app.add_option("--out", o.cfg.out, "output file (default: standard output)");

    auto *run_cmd = app.add_subcommand("run", "run the suites selected by --model and --suite");
    auto *verify = app.add_subcommand("verify", "run one suite");
    verify->add_option("suite", o.suite_pos, "suite name")->required();
    auto *lie = app.add_subcommand("lie", "run the lie suite");
    auto *periods = app.add_subcommand("periods", "holomorphic and logarithmic periods");
    periods->add_option("--series", o.series, "X0, Shat1, Shat2 or all")->capture_default_str();
    auto *gm = app.add_subcommand("gm", "connection matrices");
    gm->add_option("--source", o.source, "printed or picard-fuchs")->capture_default_str();
    auto *yuk = app.add_subcommand("yukawa", "Yukawa couplings and pairing matrix");
    yuk->add_option("--source", o.source, "printed or derived")->capture_default_str();
    auto *mirror = app.add_subcommand("mirror-map", "mirror map and its inverse");
    auto *frame = app.add_subcommand("frame", "frame matrix S in q-coordinates");
    auto *form = app.add_subcommand("form", "modular form expansion");
    form->add_option("--form", o.form, "A, B, Cr, E, j or alpha")->capture_default_str();
    form->add_option("--level", o.level, "1, 2 or 3 (default: level of --model)");
    auto *emit_cmd = app.add_subcommand("emit", "emit an expansion");
    emit_cmd->add_option("kind", o.kind, "form, period or mirror-map")->required();
    emit_cmd->add_option("selector", o.selector, "form name or period name");
    emit_cmd->add_option("--level", o.level, "modular level for forms");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*verify) {
            return run_reports(o, o.suite_pos);
        }
        if (*lie) {
            return run_reports(o, "lie");
        }
        if (*run_cmd || app.get_subcommands().empty()) {
            return run_reports(o, o.cfg.suite);
        }
        check_format(o);
        if (*periods) {
            return emit(o, emit_periods(single_model(o), o.cfg.K, o.series));
        }
        if (*gm) {
            return emit(o, emit_connection(single_model(o), o.source));
        }
        if (*yuk) {
            return emit(o, emit_pairing(single_model(o), o.source));
        }
        if (*mirror) {
            return emit(o, emit_mirror_map(single_model(o), o.cfg.K));
        }
        if (*frame) {
            return emit(o, emit_frame(single_model(o), o.cfg.K));
        }
        if (*form) {
            return emit(o, emit_expansion("form", o.form, model_for_form(o), o.level, o.cfg.K, o.cfg.qmax));
        }
        Model m = o.kind == "form" ? model_for_form(o) : single_model(o);
        return emit(o, emit_expansion(o.kind, o.selector, m, o.level, o.cfg.K, o.cfg.qmax));
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
