#pragma once

#include "c2r/diagnostics.hpp"
#include "c2r/rust_ast.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace c2r {

struct PipelineOptions {
    bool all_mut = false;        // skip inference, everything mutable
    bool no_cleanup = false;
    bool strict_splits = false;  // split-fallback becomes an error
    std::string config_text;     // ownership/tuple config, empty for none
    std::string config_file = "<config>";
};

struct PipelineResult {
    int exit_code = 0;
    std::string rust;  // printed program, empty on failure
    std::vector<Diagnostic> diagnostics;
    /// After translation and tuple lowering, before mutability inference.
    std::optional<RustProgram> translated;
    /// Final AST, as printed.
    std::optional<RustProgram> program;
};

/// 0 on success, 2 for translator bugs, 1 for anything wrong with the input.
int exit_code_for(const Diagnostic& d);

/// parse -> resolve -> config -> ownership -> translate -> tuple lowering ->
/// mutability -> derives -> cleanup -> internal check -> print.
PipelineResult run_pipeline(std::string_view source, const std::string& file, const PipelineOptions& options = {});

} // namespace c2r
