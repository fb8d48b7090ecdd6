#pragma once

#include "c2r/c_ast.hpp"
#include "c2r/diagnostics.hpp"
#include "c2r/rust_ast.hpp"
#include "c2r/type_translation.hpp"

#include <set>
#include <string>
#include <vector>

namespace c2r {

struct TranslateInput {
    const CProgram* program = nullptr;
    const StructTable* structs = nullptr;
    /// Functions returning freshly allocated data (boxed results).
    std::set<std::string> fresh;
    /// C names of structs that will be lowered to tuples; treated as non-Copy.
    std::set<std::string> tuple_structs;
};

/// Struct definitions in Rust form, without derive lists.
std::vector<RustStruct> translate_structs(const CProgram& program, const StructTable& structs);

/// `type`, `match`, ... become raw identifiers; `self` and friends get a `_` suffix.
std::string rust_ident(const std::string& c_name);

/// Type-directed translation of every function body. Pointer arithmetic
/// is compiled to slice splits; coercions are inserted on demand and
/// reverse conversions consume their source variable. Every borrow and
/// binding is emitted immutable. Non-fatal diagnostics (split fallback)
/// go to `sink`; errors are thrown as CompileError.
RustProgram translate_program(const TranslateInput& input, DiagnosticSink& sink);

} // namespace c2r
