#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sftlab/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"sftlab: finite-window analysis of multidimensional shift spaces"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "parse a document and execute its commands");
    std::string file;
    std::string json_out;
    std::string render_dir;
    std::size_t budget = sftlab::kDefaultBlockBudget;
    bool no_timing = false;
    run->add_option("file", file, "document to execute")->required();
    run->add_option("--json", json_out, "write the report to this path instead of stdout");
    run->add_option("--render-dir", render_dir, "also write PGM images of 2d listings here");
    run->add_option("--budget-blocks", budget, "block enumeration budget per command");
    run->add_flag("--no-timing", no_timing, "omit per-command timings for stable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    std::ifstream in(file, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot read '" << file << "'\n";
        return 2;
    }
    std::stringstream buf;
    buf << in.rdbuf();

    sftlab::ParseOutcome parsed = sftlab::parse_document(buf.str());
    if (!parsed.document) {
        for (const sftlab::ParseError& e : parsed.errors)
            std::cerr << file << ":" << e.line << ": " << e.message << "\n";
        return 2;
    }

    sftlab::RunOptions opt;
    opt.block_budget = budget;
    opt.render_dir = render_dir;
    opt.timing = !no_timing;
    sftlab::RunOutcome outcome = sftlab::run_document(*parsed.document, opt);

    std::string text = outcome.report.dump(2) + "\n";
    if (json_out.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(json_out, std::ios::binary);
        out << text;
        if (!out) {
            std::cerr << "error: cannot write '" << json_out << "'\n";
            return 2;
        }
    }
    return outcome.all_ok ? 0 : 1;
}
