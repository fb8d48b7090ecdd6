// Command-line driver: translate mini-C files to safe Rust.
#include "c2r/harness.hpp"
#include "c2r/pipeline.hpp"
#include "c2r/rust_json.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

bool read_text(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::stringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Translate mini-C to safe Rust"};
    std::vector<std::string> inputs;
    std::string out_dir, config_path;
    c2r::PipelineOptions opts;
    bool emit_json = false, verify_external = false;
    app.add_option("inputs", inputs, "mini-C source files")->required()->check(CLI::ExistingFile);
    app.add_option("-o,--out-dir", out_dir, "write <stem>.rs per input here instead of stdout");
    app.add_option("--config", config_path, "ownership / tuple-lowering config")->check(CLI::ExistingFile);
    app.add_flag("--all-mut", opts.all_mut, "skip mutability inference; everything mutable");
    app.add_flag("--no-cleanup", opts.no_cleanup, "skip the cleanup rewrites");
    app.add_flag("--strict-splits", opts.strict_splits, "make split-fallback an error");
    app.add_flag("--emit-json", emit_json, "also write the Rust AST as JSON (<stem>.json)");
    app.add_flag("--verify-external", verify_external, "compile the output with rustc (C2R_RUSTC)");
    CLI11_PARSE(app, argc, argv);

    if (!config_path.empty()) {
        if (!read_text(config_path, opts.config_text)) {
            std::cerr << "error[config-error] " << config_path << ":1:1: cannot read config\n";
            return 1;
        }
        opts.config_file = config_path;
    }
    if (!out_dir.empty()) fs::create_directories(out_dir);

    int status = 0;
    for (const auto& input : inputs) {
        std::string source;
        if (!read_text(input, source)) {
            std::cerr << "error[io] " << input << ":1:1: cannot read input\n";
            status = std::max(status, 1);
            continue;
        }
        c2r::PipelineResult r = c2r::run_pipeline(source, input, opts);
        for (const auto& d : r.diagnostics) std::cerr << d.format() << "\n";
        status = std::max(status, r.exit_code);
        if (r.exit_code != 0) continue;

        std::string stem = fs::path(input).stem().string();
        if (out_dir.empty()) {
            std::cout << r.rust;
            if (emit_json) std::cout << c2r::rust_ast_json(*r.program);
        } else {
            std::ofstream(fs::path(out_dir) / (stem + ".rs"), std::ios::binary) << r.rust;
            if (emit_json) std::ofstream(fs::path(out_dir) / (stem + ".json"), std::ios::binary) << c2r::rust_ast_json(*r.program);
        }

        if (verify_external) {
            c2r::Toolchains tc = c2r::detect_toolchains();
            if (tc.rustc.empty()) {
                std::cerr << "warning[toolchain-missing] " << input << ":1:1: rustc not found; external check skipped\n";
                continue;
            }
            fs::path work = fs::temp_directory_path() / ("c2saferust-verify-" + std::to_string(::getpid()));
            fs::create_directories(work);
            c2r::ProcessResult pr = c2r::compile_rust(tc, r.rust, work, true);
            fs::remove_all(work);
            if (pr.exit_code != 0) {
                std::cerr << "error[external-rejected] " << input << ":1:1: rustc rejected the output\n" << pr.err;
                status = std::max(status, 1);
            }
        }
    }
    return status;
}
