#pragma once

#include "c2r/rust_ast.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace c2r {

/// Lexically scoped variable types for walking emitted Rust.
class TypeScope {
public:
    TypeScope() { push(); }

    void push() { frames_.emplace_back(); }
    void pop() { frames_.pop_back(); }
    void bind(const std::string& name, RustType t) { frames_.back()[name] = std::move(t); }
    const RustType* find(const std::string& name) const;

private:
    std::vector<std::map<std::string, RustType>> frames_;
};

/// Signature of the runtime print helpers, or nullptr.
const RustFn* builtin_rust_fn(const std::string& name);

/// Best-effort type of an expression. Unsized places (`x[..]`, `*s`) are
/// reported as the slice type they would borrow to.
std::optional<RustType> type_of(const RustExpr& e, const TypeScope& scope, const RustProgram& program);

/// Field type of a struct or tuple (positional name) type.
std::optional<RustType> field_type(const RustType& owner, const std::string& field, const RustProgram& program);

/// Element type of an array, slice or boxed slice.
std::optional<RustType> element_type(const RustType& t);

} // namespace c2r
