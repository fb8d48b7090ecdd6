#pragma once

#include "c2r/c_ast.hpp"
#include "c2r/rust_ast.hpp"
#include "c2r/type_translation.hpp"

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace c2r {

/// User overrides, keyed by C struct name.
struct OwnershipConfig {
    std::map<std::string, OwnershipClass> overrides;
    std::set<std::string> tuple_structs;
};

/// Parses the small TOML-like config:
///   [ownership]
///   name = "owned"
///   [tuples]
///   names = ["pair", "span"]
/// Throws `config-error` on anything else.
OwnershipConfig parse_config(std::string_view text, const std::string& file = "<config>");

/// Names in `config` must exist in `program`; throws `config-error` otherwise.
void validate_config(const OwnershipConfig& config, const CProgram& program);

/// Owned/borrowed class for every struct. Seeds: a struct returned by
/// pointer from a function returning fresh heap data, and a struct with a
/// pointer field that receives a malloc result. Owned propagates into
/// nested struct fields; overrides win; everything else is borrowed.
/// Throws `conflicting-override` when a borrowed override contradicts a
/// fact that cannot be expressed with borrows.
std::map<std::string, OwnershipClass> classify_structs(const CProgram& program, const OwnershipConfig& config);

/// Functions whose pointer result is freshly heap allocated, directly or
/// through calls to other such functions.
std::set<std::string> fresh_returning_functions(const CProgram& program);

struct SignatureFlavor {
    std::vector<Flavor> params;
    Flavor ret;
};

SignatureFlavor choose_signature_flavor(const CFunction& fn, const std::set<std::string>& fresh);

/// Replaces the named structs (Rust names) by tuples: definitions are
/// dropped, literals become tuple literals, field accesses become
/// positional. Throws `tuple-lowering-error` when the address of such a
/// struct is taken or a pointer to it exists.
void lower_to_tuple(RustProgram& program, const std::set<std::string>& rust_names);

} // namespace c2r
