#pragma once

#include "c2r/diagnostics.hpp"
#include "c2r/rust_ast.hpp"

#include <string>
#include <vector>

namespace c2r {

enum class CheckCategory { type_mismatch, write_through_immutable, use_after_move_out };

/// Stable diagnostic code: `type-mismatch`, `write-through-immutable`, `use-after-move-out`.
const char* to_code(CheckCategory c);

struct CheckDiagnostic {
    CheckCategory category;
    SourceLoc loc;
    std::string message;

    Diagnostic to_diagnostic() const;
};

/// Flow-based validation of emitted Rust: expression types, writes through
/// immutable bindings or shared borrows, and reuse of moved values. Not a
/// borrow checker; lifetimes are not checked. Copy-ness of structs is read
/// from their derive lists.
std::vector<CheckDiagnostic> check_program(const RustProgram& program);

} // namespace c2r
