// Runs the translation corpus: goldens, expected errors and differential C-vs-Rust runs.
#include "c2r/harness.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"Differential corpus runner"};
    std::string root = std::string(C2R_SOURCE_DIR) + "/corpus";
    std::string json_out;
    c2r::HarnessOptions opts;
    bool no_diff = false;
    app.add_option("corpus", root, "corpus directory");
    app.add_option("--json", json_out, "write the JSON summary here");
    app.add_flag("--bless", opts.bless, "rewrite golden.rs files from the current output");
    app.add_flag("--no-differential", no_diff, "only check goldens and expected errors");
    app.add_option("-j,--jobs", opts.jobs, "parallel cases");
    CLI11_PARSE(app, argc, argv);
    opts.differential = !no_diff;

    std::vector<c2r::CorpusCase> cases;
    try {
        cases = c2r::load_corpus(root);
    } catch (const c2r::CompileError& e) {
        std::cerr << e.diagnostic().format() << "\n";
        return 1;
    }
    c2r::Toolchains tc = c2r::detect_toolchains();
    if (opts.differential && !tc.complete()) std::cerr << "note: C or Rust toolchain missing; differential cases are Skipped\n";
    auto results = c2r::run_corpus(cases, tc, opts);
    std::cout << c2r::summary_text(results);
    if (!json_out.empty()) std::ofstream(json_out) << c2r::summary_json(results);
    for (const auto& r : results)
        if (r.verdict == c2r::Verdict::fail) return 1;
    return 0;
}
