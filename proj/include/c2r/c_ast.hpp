#pragma once

#include "c2r/diagnostics.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace c2r {

enum class BaseType { u8, u16, u32, u64, i8, i16, i32, i64, usize, boolean };

int bit_width(BaseType b);
bool is_signed(BaseType b);
/// `uint8_t`, `int32_t`, `size_t`, `bool`, ...
const char* c_spelling(BaseType b);

/// Mini-C type. Pointer and array store their element in `elems[0]`;
/// function types store parameters followed by the return type.
struct CType {
    enum class Kind { base, void_, pointer, array, struct_, function };

    Kind kind = Kind::void_;
    BaseType base = BaseType::u32;
    std::vector<CType> elems;
    uint64_t len = 0;
    std::string name;

    static CType make_base(BaseType b);
    static CType make_void();
    static CType pointer_to(CType elem);
    static CType array_of(CType elem, uint64_t len);
    static CType struct_named(std::string name);
    static CType function(std::vector<CType> params, CType ret);

    const CType& elem() const { return elems.at(0); }
    bool is_base() const { return kind == Kind::base; }
    bool is_integer() const { return kind == Kind::base && base != BaseType::boolean; }
    bool is_bool() const { return kind == Kind::base && base == BaseType::boolean; }
    bool is_void() const { return kind == Kind::void_; }
    bool is_pointer() const { return kind == Kind::pointer; }
    bool is_array() const { return kind == Kind::array; }
    /// Pointer or array: anything that can be indexed.
    bool is_indexable() const { return is_pointer() || is_array(); }
    bool is_struct() const { return kind == Kind::struct_; }

    bool operator==(const CType&) const = default;
};

std::string to_string(const CType& t);

struct CExpr {
    enum class Kind {
        var, index, field, call, deref, malloc, addr_of, int_lit, bool_lit,
        binop, unop, cast, struct_init, sizeof_type
    };

    Kind kind = Kind::int_lit;
    std::string name;                      // var, field, call target
    std::string op;                        // binop, unop
    std::vector<CExpr> kids;
    std::vector<std::string> field_names;  // struct_init designators ("" when positional)
    uint64_t value = 0;                    // int_lit, bool_lit
    CType target;                          // malloc element, cast target, sizeof operand
    bool zeroed = false;                   // calloc
    std::optional<CType> type;             // filled by resolve
    SourceLoc loc;
};

/// Equality that ignores source locations.
bool same_structure(const CExpr& a, const CExpr& b);

struct CStmt {
    enum class Kind {
        ret, if_, while_, for_, assign, expr, decl_var, decl_array,
        memset, memcpy, void_cast, block, break_
    };

    Kind kind = Kind::expr;
    // ret: [value]? ; if/while/for: [cond] ; assign: [lhs, rhs] ; expr: [e]
    // decl_var: [init]? ; decl_array: initializers ; memset: [dst, val, len]
    // memcpy: [dst, src, len]
    std::vector<CExpr> exprs;
    std::vector<CStmt> body;
    std::vector<CStmt> else_body;
    std::vector<CStmt> for_init;
    std::vector<CStmt> for_step;
    CType type;                 // declared type; element type for decl_array
    std::string name;
    uint64_t len = 0;           // decl_array length
    bool has_init = false;      // decl_array written with braces
    SourceLoc loc;
};

bool same_structure(const CStmt& a, const CStmt& b);

struct CParam {
    std::string name;
    CType type;
};

struct CStruct {
    std::string name;
    std::vector<std::pair<std::string, CType>> fields;
    SourceLoc loc;

    const CType* field(const std::string& f) const;
    std::optional<std::size_t> field_index(const std::string& f) const;
};

struct CFunction {
    std::string name;
    std::vector<CParam> params;
    CType ret;
    std::vector<CStmt> body;
    SourceLoc loc;
};

struct CProgram {
    std::vector<CStruct> structs;
    std::vector<CFunction> functions;
    /// Prototypes without bodies; only used to check them against definitions.
    std::vector<CFunction> prototypes;

    const CStruct* find_struct(const std::string& n) const;
    const CFunction* find_function(const std::string& n) const;
};

bool same_structure(const CProgram& a, const CProgram& b);

/// Pre-order visit of an expression tree.
void visit_expr(const CExpr& e, const std::function<void(const CExpr&)>& f);
/// Pre-order visit of statements, including nested bodies and for clauses.
void visit_stmts(const std::vector<CStmt>& body, const std::function<void(const CStmt&)>& f);
/// Every expression reachable from `body`.
void visit_body_exprs(const std::vector<CStmt>& body, const std::function<void(const CExpr&)>& f);

} // namespace c2r
