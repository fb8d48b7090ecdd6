#pragma once

#include "c2r/diagnostics.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace c2r {

/// Emitted Rust type. Array, borrowed slice and boxed slice keep their
/// element in `elems[0]`; functions keep parameters then the return type;
/// tuples keep their components.
struct RustType {
    enum class Kind { base, unit, array, slice_ref, boxed_slice, function, named, tuple };

    Kind kind = Kind::unit;
    std::string name;                     // base spelling (`u8`, `usize`, `bool`) or struct name
    bool mut_ = false;                    // slice_ref only
    std::optional<std::string> lifetime;  // slice_ref: `'a`; named: lifetime argument
    uint64_t len = 0;                     // array only
    std::vector<RustType> elems;

    static RustType base(std::string name);
    static RustType unit();
    static RustType usize() { return base("usize"); }
    static RustType array(RustType elem, uint64_t len);
    static RustType slice(RustType elem, bool mut_ = false, std::optional<std::string> lifetime = std::nullopt);
    static RustType boxed(RustType elem);
    static RustType named(std::string name, std::optional<std::string> lifetime = std::nullopt);
    static RustType tuple(std::vector<RustType> elems);
    static RustType function(std::vector<RustType> params, RustType ret);

    const RustType& elem() const { return elems.at(0); }
    bool is_unit() const { return kind == Kind::unit; }
    bool is_base() const { return kind == Kind::base; }
    bool is_integer() const { return kind == Kind::base && name != "bool"; }
    bool is_slice() const { return kind == Kind::slice_ref; }
    bool is_box() const { return kind == Kind::boxed_slice; }
    bool is_array() const { return kind == Kind::array; }
    bool is_tuple() const { return kind == Kind::tuple; }
    bool is_named() const { return kind == Kind::named; }

    bool operator==(const RustType&) const = default;
};

/// Drops mutability flags and lifetimes everywhere.
RustType erase_annotations(RustType t);
bool same_shape(const RustType& a, const RustType& b);

struct RustExpr {
    enum class Kind {
        var, let, let_tuple, seq, block, unit, int_lit, bool_lit,
        array_repeat,      // [e; n]
        array_list,        // [a, b, c]
        vec_boxed,         // vec![e; n].into_boxed_slice()
        array_to_slice,    // e[..]
        index_range,       // e[lo..hi], absent bounds are `unit`
        borrow, deref, field, index,
        assign_var, assign_index, assign_field,
        struct_lit, tuple_lit, call, method_call,
        box_new,           // Box::new(e)
        slice_from_ref,    // core::slice::from_ref(&e) / from_mut(&mut e)
        if_, while_, return_, break_, binop, unop, cast,
    };

    Kind kind = Kind::unit;
    std::string name;                // var, binder, field, callee, method, struct, operator
    std::vector<std::string> names;  // let_tuple binders, struct_lit field names
    std::vector<RustExpr> kids;
    std::optional<RustType> ty;      // let annotation, let_tuple component types, cast target, literal type
    bool mut_ = false;               // let mut, &mut, split_at_mut, from_mut
    bool suffixed = false;           // int_lit rendered with its type suffix
    uint64_t value = 0;              // int_lit, bool_lit
    std::string aux;                 // field: owning struct name
    SourceLoc loc;

    bool operator==(const RustExpr&) const = default;
};

/// Methods the translator is allowed to emit.
bool is_allowed_method(const std::string& m);

/// Unbound variable names of `e`.
std::set<std::string> free_vars(const RustExpr& e);

/// Post-order traversal; `f` may rewrite nodes in place.
void walk_post(RustExpr& e, const std::function<void(RustExpr&)>& f);
/// Pre-order read-only traversal.
void walk_pre(const RustExpr& e, const std::function<void(const RustExpr&)>& f);
/// Rewrites every type inside `t` bottom-up.
RustType map_type(const RustType& t, const std::function<RustType(RustType)>& f);
/// Applies `map_type` to every type annotation inside `e`.
void map_expr_types(RustExpr& e, const std::function<RustType(RustType)>& f);

/// Constructors for the common node shapes.
namespace rx {
RustExpr var(std::string name, SourceLoc loc = {});
RustExpr unit();
RustExpr int_lit(uint64_t v, std::optional<RustType> t = std::nullopt, bool suffixed = false);
RustExpr bool_lit(bool b);
RustExpr let(std::string name, std::optional<RustType> ty, RustExpr rhs, RustExpr body, SourceLoc loc = {});
RustExpr let_tuple(std::vector<std::string> names, RustType ty, RustExpr rhs, RustExpr body, SourceLoc loc = {});
RustExpr seq(std::vector<RustExpr> items);
RustExpr block(RustExpr inner);
RustExpr borrow(RustExpr e, bool mut_ = false);
RustExpr deref(RustExpr e);
RustExpr index(RustExpr base, RustExpr idx);
RustExpr field(RustExpr base, std::string f, std::string owner = {});
RustExpr call(std::string fn, std::vector<RustExpr> args, SourceLoc loc = {});
RustExpr method(RustExpr recv, std::string m, std::vector<RustExpr> args);
RustExpr cast(RustExpr e, RustType to);
RustExpr binop(std::string op, RustExpr l, RustExpr r);
RustExpr make(RustExpr::Kind k, std::vector<RustExpr> kids = {});
} // namespace rx

struct RustFn {
    std::string name;
    std::vector<std::pair<std::string, RustType>> params;
    /// Parameters declared `mut x: T`; empty or one flag per parameter.
    std::vector<bool> mut_params;
    RustType ret;
    RustExpr body;
    /// Lifetime parameters rendered on the signature (only when elision fails).
    std::vector<std::string> lifetimes;
    SourceLoc loc;

    bool operator==(const RustFn&) const = default;
};

struct RustStruct {
    std::string name;
    std::optional<std::string> lifetime;
    std::vector<std::pair<std::string, RustType>> fields;
    std::vector<std::string> derives;   // canonical order: Clone, Copy, PartialEq
    SourceLoc loc;

    bool operator==(const RustStruct&) const = default;
};

struct RustProgram {
    std::vector<RustStruct> structs;
    std::vector<RustFn> fns;
    /// Structs lowered to tuples: name -> tuple shape. Never printed.
    std::map<std::string, RustType> tuple_aliases;

    const RustStruct* find_struct(const std::string& n) const;
    RustStruct* find_struct(const std::string& n);
    const RustFn* find_fn(const std::string& n) const;
    RustFn* find_fn(const std::string& n);

    bool operator==(const RustProgram&) const = default;
};

/// Renders a type. `with_lifetimes` controls whether lifetimes are printed.
std::string print_type(const RustType& t, bool with_lifetimes = false);
std::string print_expr(const RustExpr& e);
/// Deterministic Rust source for a whole program (4-space indentation).
std::string pretty_print(const RustProgram& p);

} // namespace c2r
