#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "prismlab/poly_parse.hpp"
#include "prismlab/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"prismlab: exact prismatic cohomology over Q[t]/t^e"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "parse a session spec and execute its tasks");
    std::string spec_path, out_path;
    prismlab::RunOptions opt;
    int trunc = 0, wmax = 0;
    run->add_option("spec", spec_path, "session spec file")->required();
    run->add_option("--out", out_path, "report JSON path (stdout if omitted)");
    run->add_option("--trunc", trunc, "override base truncation e");
    run->add_option("--weight-max", wmax, "override the weight cap W");
    run->add_flag("--verify", opt.verify, "re-run checks against their independent oracles");
    run->add_option("--seed", opt.seed, "seed recorded in the report");
    run->add_option("--threads", opt.threads, "worker threads for slicewise loops");

    CLI11_PARSE(app, argc, argv);

    if (const char* budget = std::getenv("PRISMLAB_PAIR_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(budget, &end, 10);
        if (end && *end == '\0' && v > 0) prismlab::set_default_pair_budget(v);
    }
    if (trunc > 0) opt.trunc_override = trunc;
    if (wmax > 0) opt.weight_override = wmax;

    std::ifstream in(spec_path);
    if (!in) {
        std::cerr << "prismlab: cannot open " << spec_path << "\n";
        return 2;
    }
    std::stringstream buf;
    buf << in.rdbuf();

    prismlab::SessionSpec spec;
    try {
        spec = prismlab::parse_spec(buf.str());
    } catch (const prismlab::ParseError& ex) {
        std::cerr << "prismlab: parse error: " << ex.what() << "\n";
        return 2;
    }

    prismlab::RunOutcome outcome = prismlab::run_session(spec, opt);
    std::string text = outcome.report.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "prismlab: cannot write " << out_path << "\n";
            return 2;
        }
        out << text;
    }

    int failures = 0;
    for (auto& t : outcome.report["stable"]["tasks"]) {
        std::string status = t.value("status", "error");
        std::string kind = t.value("kind", "?");
        std::cerr << kind << ": " << status << "\n";
        if (status == "fail" || status == "error") ++failures;
    }
    return failures ? 3 : outcome.exit_code;
}
