#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "coxroots/errors.hpp"
#include "coxroots/io.hpp"

namespace {

using namespace coxroots;

struct CliOptions {
    std::string input;
    std::string output;
    ExperimentConfig cfg;
    std::string element_selector;
    std::string root_selector;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot open output file: " + path);
    out << text;
}

CoxeterSystem load_system(const CliOptions& opt) {
    CoxeterSystem sys(parse_system_document(read_file(opt.input)));
    if (sys.context()->degree() > 64)
        std::cerr << "warning: ground field degree " << sys.context()->degree()
                  << " is large; expect slow exact arithmetic\n";
    return sys;
}

void add_common(CLI::App* cmd, CliOptions& opt) {
    cmd->add_option("--input", opt.input, "system document (JSON)")->required();
    cmd->add_option("--depth", opt.cfg.depth, "depth bound for root enumeration");
    cmd->add_option("--mu-max", opt.cfg.mu_max, "iteration bound for verdicts");
    cmd->add_option("--radius", opt.cfg.radius, "ball radius for growth");
    cmd->add_option("--format", opt.cfg.format, "json or csv");
    cmd->add_option("--output", opt.output, "output path (default stdout)");
    cmd->add_option("--seed", opt.cfg.seed, "seed recorded with sampled checks");
    cmd->add_option("--max-radius", opt.cfg.radius_guard, "raise the ball radius guard");
    cmd->add_option("--max-roots", opt.cfg.root_guard, "root enumeration memory guard");
    cmd->add_option("--max-elements", opt.cfg.element_guard, "ball enumeration memory guard");
}

int dispatch(const std::string& command, const CliOptions& opt) {
    CoxeterSystem sys = load_system(opt);
    Json report;
    if (command == "classify")
        report = classify_report(sys);
    else if (command == "growth")
        report = growth_report(sys, opt.cfg);
    else if (command == "cover")
        report = cover_report(sys, opt.cfg);
    else if (command == "preproj")
        report = preproj_report(sys, opt.cfg, opt.element_selector, opt.root_selector);
    else
        report = atilde_verify_report(sys, opt.cfg);
    write_output(opt.output, render_report(report, opt.cfg.format));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact root-system and preprojectivity computations for Coxeter groups"};
    app.require_subcommand(1);

    CliOptions opt;
    const char* names[] = {"classify", "cover", "growth", "preproj", "atilde-verify"};
    const char* descriptions[] = {
        "classify the bilinear form (finite / affine / indefinite)",
        "coverage of positive roots by preprojective sets over all Coxeter elements",
        "sphere sizes, depth-layer sizes and growth estimates",
        "preprojective layers or a single verdict for one Coxeter element",
        "closed-form cross-checks for the all-threes cycle and the rank-2 infinite bond",
    };
    for (int i = 0; i < 5; ++i) {
        CLI::App* cmd = app.add_subcommand(names[i], descriptions[i]);
        add_common(cmd, opt);
        if (std::string(names[i]) == "preproj") {
            cmd->add_option("--element", opt.element_selector,
                            "standard:i,k | bits:<01...> | word:l1,l2,...")
                ->required();
            cmd->add_option("--root", opt.root_selector,
                            "alpha:i | coords:x1,...  (x = p/q or (c0;c1;...))");
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        return dispatch(app.get_subcommands().front()->get_name(), opt);
    } catch (const TheoremContradictionError& e) {
        std::cerr << "theorem contradiction (implementation bug signal): " << e.what() << "\n";
        return 4;
    } catch (const ResourceError& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return 3;
    } catch (const SelectorError& e) {
        std::cerr << "selector error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
