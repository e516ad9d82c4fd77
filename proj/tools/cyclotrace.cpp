#include "cyclotrace/config.hpp"
#include "cyclotrace/errors.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::string slurp(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw cyclo::ConfigError("cannot open config file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw cyclo::ConfigError("cannot open output file: " + out_path);
    out << text;
}

std::string render(const cyclo::Report& rep, const std::string& format) {
    return format == "json" ? cyclo::render_json(rep) : cyclo::render_text(rep);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hochschild and cyclic cohomology of algebras in the group-representation "
                 "and group-graded backends"};
    app.require_subcommand(1);

    std::string config_path = "-";
    std::string out_path;
    std::string format = "text";
    std::vector<std::string> suites;
    long long max_degree = -1;
    long long budget = -1;
    std::string pipeline;

    CLI::App* compute =
        app.add_subcommand("compute", "dimension tables for one configured instance");
    compute->add_option("config", config_path, "config file (JSON), or - for stdin");
    compute->add_option("--max-degree", max_degree, "override the configured truncation")
        ->check(CLI::PositiveNumber);
    compute->add_option("--budget", budget, "override the configured dimension budget")
        ->check(CLI::PositiveNumber);
    compute->add_option("--pipeline", pipeline, "which towers to build")
        ->check(CLI::IsMember({"old", "new", "all"}));
    compute->add_option("--format", format, "report form")
        ->check(CLI::IsMember({"text", "json"}));
    compute->add_option("--out", out_path, "write the report to a file instead of stdout");

    CLI::App* verify = app.add_subcommand("verify", "run named verification suites");
    verify->add_option("--suite", suites, "suite name, repeatable (default: all)");
    verify->add_option("--max-degree", max_degree, "truncation (default 4)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--budget", budget, "dimension budget (default 100000)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--format", format, "report form")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", out_path, "write the report to a file instead of stdout");

    CLI::App* explain =
        app.add_subcommand("explain", "print the instantiated spaces and maps (small instances)");
    explain->add_option("config", config_path, "config file (JSON), or - for stdin");
    explain->add_option("--max-degree", max_degree, "override the configured truncation")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (compute->parsed() || explain->parsed()) {
            cyclo::ComputationConfig cfg = cyclo::parse_config(slurp(config_path));
            if (max_degree > 0) cfg.max_degree = max_degree;
            if (budget > 0) cfg.budget = budget;
            if (pipeline == "old") cfg.pipeline = cyclo::Pipeline::Direct;
            else if (pipeline == "new") cfg.pipeline = cyclo::Pipeline::Resolution;
            else if (pipeline == "all") cfg.pipeline = cyclo::Pipeline::All;

            if (explain->parsed()) {
                emit(cyclo::explain_text(cfg), out_path);
                return 0;
            }
            const cyclo::Report rep = cyclo::cmd_compute(cfg);
            emit(render(rep, format), out_path);
            return rep.pass ? 0 : 1;
        }

        if (suites.empty()) suites = cyclo::suite_names();
        const cyclo::Report rep = cyclo::cmd_verify(suites, max_degree > 0 ? max_degree : 4,
                                                    budget > 0 ? budget : 100000);
        emit(render(rep, format), out_path);
        return rep.pass ? 0 : 1;
    } catch (const cyclo::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const cyclo::MathError& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return 1;
    }
}
