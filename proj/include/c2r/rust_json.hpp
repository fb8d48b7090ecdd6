#pragma once

#include "c2r/rust_ast.hpp"

#include <string>

namespace c2r {

inline constexpr const char* kRustAstSchema = "c2saferust.rust-ast.v1";

/// Versioned JSON dump of the emitted Rust AST (pretty-printed, 2-space indent).
std::string rust_ast_json(const RustProgram& program);

} // namespace c2r
