#pragma once

#include "c2r/pipeline.hpp"
#include "c2r/rust_ast.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace c2r {

namespace fs = std::filesystem;

struct ProcessResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

/// Runs `argv` with optional stdin text, capturing both streams. `timeout_s`
/// kills the child after that many seconds (exit code 124).
ProcessResult run_process(const std::vector<std::string>& argv, const std::string& stdin_text = {}, int timeout_s = 60);

struct Toolchains {
    std::string cc;     // empty if missing
    std::string rustc;  // empty if missing
    bool complete() const { return !cc.empty() && !rustc.empty(); }
};

/// C2R_CC / C2R_RUSTC override the defaults `cc` and `rustc`.
Toolchains detect_toolchains();

/// Directory holding c2r_runtime.h and c2r_runtime.rs.
fs::path runtime_dir();

/// Rust source ready for rustc: the translation plus the runtime helpers and `main`.
std::string with_rust_runtime(const std::string& rust);

/// Compiles Rust source to a binary in `work`; returns the compiler result.
ProcessResult compile_rust(const Toolchains& tc, const std::string& source, const fs::path& work, bool metadata_only = false);
ProcessResult compile_c(const Toolchains& tc, const fs::path& c_file, const fs::path& work);

/// Maps fresh split names `x_l2`, `x_r3` to `x_l`, `x_r` so outputs can be
/// compared against goldens regardless of numbering.
std::string normalize_fresh_names(const std::string& rust);

enum class Verdict { pass, fail, skipped, expected_panic };
const char* to_string(Verdict v);

/// One directory of the corpus: input.c plus optional golden.rs, stdin,
/// expected_stdout, config.toml, expected_error (diagnostic code) and
/// expect_panic (marker).
struct CorpusCase {
    std::string name;
    fs::path dir;
    fs::path input;
    std::optional<fs::path> golden;
    std::optional<std::string> stdin_text;
    std::optional<std::string> expected_stdout;
    std::optional<std::string> config;
    std::optional<std::string> expected_error;
    bool expect_panic = false;
};

/// Throws CompileError(`config-error`) when the directory is malformed.
CorpusCase load_case(const fs::path& dir);
std::vector<CorpusCase> load_corpus(const fs::path& root);

struct CaseResult {
    std::string name;
    Verdict verdict = Verdict::skipped;
    std::string detail;
};

struct HarnessOptions {
    bool bless = false;          // rewrite golden.rs from the current output
    bool differential = true;    // run the C and Rust binaries
    unsigned jobs = 0;           // 0: hardware concurrency
};

CaseResult run_case(const CorpusCase& c, const Toolchains& tc, const HarnessOptions& options);
std::vector<CaseResult> run_corpus(const std::vector<CorpusCase>& cases, const Toolchains& tc, const HarnessOptions& options);

std::string summary_json(const std::vector<CaseResult>& results);
std::string summary_text(const std::vector<CaseResult>& results);

/// A `mut` that appears in printed output.
struct MutSite {
    std::size_t fn = 0;
    enum class Kind { expr_flag, let_type, param_type, param_binding, ret_type } kind = Kind::expr_flag;
    std::size_t index = 0;  // pre-order node index, or parameter index
};

std::vector<MutSite> mut_sites(const RustProgram& program);
/// Copy of `program` with the qualifier at `site` removed.
RustProgram flip_mut(const RustProgram& program, const MutSite& site);

} // namespace c2r
