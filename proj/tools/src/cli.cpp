#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "demoreq/depgraph.hpp"
#include "demoreq/engine.hpp"
#include "demoreq/errors.hpp"
#include "demoreq/model.hpp"
#include "demoreq/render.hpp"

namespace demoreq::cli {

namespace {

struct IoError : Error {
    using Error::Error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw IoError("cannot write '" + path + "'");
}

struct Options {
    std::string model_path;
    std::string config_path;
    std::string format = "text";
    std::string out_path;
    std::vector<std::string> sets;
    int max_iterations = 0;
    bool lenient = false;
};

EngineConfig load_config(const Options& opt) {
    EngineConfig config;
    std::string path = opt.config_path;
    if (path.empty()) {
        if (const char* env = std::getenv("DEMOREQ_CONFIG"); env && *env) path = env;
    }
    if (!path.empty()) config = parse_config(read_file(path));
    if (opt.max_iterations > 0) config.max_feedback_iterations = opt.max_iterations;
    if (opt.lenient) config.strict_schema = false;
    validate_config(config);
    return config;
}

ProjectModel load_model(const Options& opt, bool lenient, std::ostream& err) {
    std::vector<Diagnostic> warnings;
    auto model = parse_model(read_file(opt.model_path), ParseOptions{lenient}, &warnings);
    for (const auto& w : warnings) err << "warning: " << w.subject << ": " << w.message << "\n";
    return model;
}

std::vector<Override> parse_sets(const Options& opt) {
    std::vector<Override> out;
    for (const auto& s : opt.sets) out.push_back(parse_override(s));
    return out;
}

int cmd_validate(const Options& opt, std::ostream& out, std::ostream& err) {
    const auto model = load_model(opt, opt.lenient, err);
    const auto diagnostics = validate_model(model);
    for (const auto& d : diagnostics) {
        auto& stream = d.severity == Severity::Error ? err : out;
        stream << to_string(d.severity) << " " << to_string(d.code) << " " << d.subject << ": " << d.message << "\n";
    }
    if (has_errors(diagnostics)) return kInvalidModel;
    out << "ok: " << model.name << "\n";
    return kOk;
}

int cmd_analyze(const Options& opt, std::ostream& out, std::ostream& err) {
    if (opt.format != "text" && opt.format != "machine") {
        err << "error: --format must be text or machine\n";
        return kInputError;
    }
    const auto config = load_config(opt);
    const auto model = load_model(opt, !config.strict_schema, err);
    const auto overrides = parse_sets(opt);
    const auto report = run(model, config, overrides);
    if (opt.format == "machine") {
        out << render_machine(report);
    } else {
        out << render_text(report, apply_overrides(model, overrides));
    }
    return targets_unmet(report) ? kTargetsUnmet : kOk;
}

int cmd_export_dot(const Options& opt, std::ostream& out, std::ostream& err) {
    const auto model = load_model(opt, opt.lenient, err);
    const auto diagnostics = validate_model(model);
    if (has_errors(diagnostics)) {
        for (const auto& d : diagnostics) {
            if (d.severity == Severity::Error) err << to_string(d.code) << " " << d.subject << ": " << d.message << "\n";
        }
        return kInvalidModel;
    }
    const auto graph = build_graph(consolidate(model));
    const auto dot = render_dot(graph, model, detect_structure(graph));
    if (opt.out_path.empty()) {
        out << dot;
    } else {
        write_file(opt.out_path, dot);
    }
    return kOk;
}

int cmd_what_if(const Options& opt, std::ostream& out, std::ostream& err) {
    const auto config = load_config(opt);
    const auto model = load_model(opt, !config.strict_schema, err);
    const auto overrides = parse_sets(opt);
    const auto before = run(model, config);
    const auto after = run(model, config, overrides);
    out << render_diff(diff_reports(before, after));
    return targets_unmet(after) ? kTargetsUnmet : kOk;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Demonstrator requirements analysis"};
    app.require_subcommand(1);
    Options opt;

    auto add_model = [&](CLI::App* cmd) {
        cmd->add_option("model", opt.model_path, "Project model (JSON)")->required();
    };
    auto add_engine = [&](CLI::App* cmd) {
        cmd->add_option("--config", opt.config_path, "Engine configuration (JSON); defaults to $DEMOREQ_CONFIG");
        cmd->add_option("--set", opt.sets, "Override, e.g. wp.WP2.estimated_trl=5")->take_all();
        cmd->add_option("--max-iterations", opt.max_iterations, "Feedback re-run bound")->check(CLI::PositiveNumber);
        cmd->add_flag("--lenient", opt.lenient, "Unknown keys are warnings");
    };

    auto* validate = app.add_subcommand("validate", "Check a model for structural errors");
    add_model(validate);
    validate->add_flag("--lenient", opt.lenient, "Unknown keys are warnings");

    auto* analyze = app.add_subcommand("analyze", "Run the full analysis");
    add_model(analyze);
    add_engine(analyze);
    analyze->add_option("--format", opt.format, "text | machine");

    auto* dot = app.add_subcommand("export-dot", "Write the WP dependency graph as DOT");
    add_model(dot);
    dot->add_option("--out", opt.out_path, "Output file (default: stdout)");
    dot->add_flag("--lenient", opt.lenient, "Unknown keys are warnings");

    auto* what_if = app.add_subcommand("what-if", "Compare a run with and without overrides");
    add_model(what_if);
    add_engine(what_if);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*validate) return cmd_validate(opt, out, err);
        if (*analyze) return cmd_analyze(opt, out, err);
        if (*dot) return cmd_export_dot(opt, out, err);
        return cmd_what_if(opt, out, err);
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const SyntaxError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const IterationLimitExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kIterationLimit;
    } catch (const ValidationFailed& e) {
        for (const auto& m : e.messages()) err << "error: " << m << "\n";
        return kInvalidModel;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidModel;
    }
}

} // namespace demoreq::cli
