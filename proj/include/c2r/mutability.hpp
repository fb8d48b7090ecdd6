#pragma once

#include "c2r/rust_ast.hpp"

#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace c2r {

enum class Mode { imm, mut_ };

/// Variables that need `let mut` (V) and variables whose borrow type must
/// become `&mut` (R). Tuple components are tracked as `x.0`, `x.1`, ...
struct MutSets {
    std::set<std::string> V;
    std::set<std::string> R;
};

Mode is_mutborrow(const RustType& t);
RustType make_mut(const RustType& t);

/// Backward pass over one expression. `fn_index` names the function being
/// analysed; callee return types in `program` are upgraded in place and
/// their indices added to `changed_callees`. Throws `mutable-field` when a
/// write has to go through a borrowed struct field.
struct MutPassResult {
    bool changed = false;                // body or signature of the function changed
    std::set<std::size_t> changed_callees;
};
MutPassResult infer_function(RustProgram& program, std::size_t fn_index);

struct MutTrace {
    /// Qualifier count after each pass (worklist: after each function; sweep: after each sweep).
    std::vector<std::size_t> qualifier_counts;
    std::size_t passes = 0;
};

/// Fixpoint with a callee->caller worklist.
MutTrace infer_mutability(RustProgram& program);
/// Fixpoint by sweeping every function until nothing changes (reference).
MutTrace infer_mutability_naive(RustProgram& program);

/// Every mut flag and every `mut` parameter in the program.
std::size_t count_mut_qualifiers(const RustProgram& program);
/// Clears every mut flag and `mut` parameter.
void erase_mutability(RustProgram& program);
/// Marks every binding, borrow, split and slice type mutable.
void make_all_mut(RustProgram& program);

} // namespace c2r
