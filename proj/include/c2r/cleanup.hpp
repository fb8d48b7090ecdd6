#pragma once

#include "c2r/rust_ast.hpp"

namespace c2r {

/// Local rewrites that make the output read like hand-written Rust:
///   *(&e)                      -> e
///   (&e)[i], (&e).m(..)        -> e[i], e.m(..)
///   e[..][i]                   -> e[i]
///   let r = e; r               -> e
///   trailing `return e`        -> tail expression `e`
///   trailing `()`              -> dropped
///   let x: T = <literal of T>  -> let x = ...
/// Runs to a fixpoint, so applying it twice changes nothing.
void cleanup_program(RustProgram& program);

} // namespace c2r
