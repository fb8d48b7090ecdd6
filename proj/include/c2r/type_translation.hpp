#pragma once

#include "c2r/c_ast.hpp"
#include "c2r/rust_ast.hpp"

#include <map>
#include <set>
#include <string>

namespace c2r {

enum class OwnershipClass { owned, borrowed };

const char* to_string(OwnershipClass c);

/// How pointer types are rendered at one position.
struct Flavor {
    enum class Kind { default_, boxed, borrowed };
    Kind kind = Kind::default_;
    std::string lifetime;  // borrowed only

    static Flavor by_default() { return {}; }
    static Flavor boxed() { return {Kind::boxed, {}}; }
    static Flavor borrowed(std::string lt = "'a") { return {Kind::borrowed, std::move(lt)}; }

    bool operator==(const Flavor&) const = default;
};

/// Per-struct facts that type translation depends on, keyed by C name.
struct StructTable {
    std::map<std::string, OwnershipClass> classes;
    /// Borrowed structs that (transitively) hold a borrowed slice and so
    /// take a lifetime parameter.
    std::set<std::string> needs_lifetime;

    bool has(const std::string& c_name) const { return classes.count(c_name) != 0; }
};

/// Builds `needs_lifetime` from the classes and the struct definitions.
StructTable make_struct_table(const CProgram& program, std::map<std::string, OwnershipClass> classes);

/// `point_pair` -> `PointPair`, `s` -> `S`.
std::string rust_struct_name(const std::string& c_name);

/// Maps a C type to its Rust image. Pointers become `&[T]` (default),
/// `Box<[T]>` (boxed) or `&'a [T]` (borrowed); the inner level of a
/// two-level pointer is always boxed. Throws `unknown-struct` for
/// unclassified structs.
RustType translate_type(const CType& t, const Flavor& flavor, const StructTable& structs);

/// Field type of a struct definition, following the struct's class.
RustType translate_field_type(const CType& t, OwnershipClass owner, const StructTable& structs);

} // namespace c2r
