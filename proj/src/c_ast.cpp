#include "c2r/c_ast.hpp"

#include <algorithm>

namespace c2r {

int bit_width(BaseType b) {
    switch (b) {
    case BaseType::u8: case BaseType::i8: return 8;
    case BaseType::u16: case BaseType::i16: return 16;
    case BaseType::u32: case BaseType::i32: return 32;
    case BaseType::u64: case BaseType::i64: case BaseType::usize: return 64;
    case BaseType::boolean: return 1;
    }
    return 32;
}

bool is_signed(BaseType b) {
    return b == BaseType::i8 || b == BaseType::i16 || b == BaseType::i32 || b == BaseType::i64;
}

const char* c_spelling(BaseType b) {
    switch (b) {
    case BaseType::u8: return "uint8_t";
    case BaseType::u16: return "uint16_t";
    case BaseType::u32: return "uint32_t";
    case BaseType::u64: return "uint64_t";
    case BaseType::i8: return "int8_t";
    case BaseType::i16: return "int16_t";
    case BaseType::i32: return "int32_t";
    case BaseType::i64: return "int64_t";
    case BaseType::usize: return "size_t";
    case BaseType::boolean: return "bool";
    }
    return "?";
}

CType CType::make_base(BaseType b) {
    CType t;
    t.kind = Kind::base;
    t.base = b;
    return t;
}

CType CType::make_void() { return CType{}; }

CType CType::pointer_to(CType elem) {
    CType t;
    t.kind = Kind::pointer;
    t.elems.push_back(std::move(elem));
    return t;
}

CType CType::array_of(CType elem, uint64_t len) {
    CType t;
    t.kind = Kind::array;
    t.elems.push_back(std::move(elem));
    t.len = len;
    return t;
}

CType CType::struct_named(std::string name) {
    CType t;
    t.kind = Kind::struct_;
    t.name = std::move(name);
    return t;
}

CType CType::function(std::vector<CType> params, CType ret) {
    CType t;
    t.kind = Kind::function;
    t.elems = std::move(params);
    t.elems.push_back(std::move(ret));
    return t;
}

std::string to_string(const CType& t) {
    switch (t.kind) {
    case CType::Kind::base: return c_spelling(t.base);
    case CType::Kind::void_: return "void";
    case CType::Kind::pointer: return to_string(t.elem()) + " *";
    case CType::Kind::array: return to_string(t.elem()) + "[" + std::to_string(t.len) + "]";
    case CType::Kind::struct_: return "struct " + t.name;
    case CType::Kind::function: {
        std::string s = to_string(t.elems.back()) + "(";
        for (std::size_t i = 0; i + 1 < t.elems.size(); ++i) {
            if (i) s += ", ";
            s += to_string(t.elems[i]);
        }
        return s + ")";
    }
    }
    return "?";
}

bool same_structure(const CExpr& a, const CExpr& b) {
    if (a.kind != b.kind || a.name != b.name || a.op != b.op || a.value != b.value ||
        a.field_names != b.field_names || a.zeroed != b.zeroed || a.type != b.type ||
        a.kids.size() != b.kids.size())
        return false;
    if ((a.kind == CExpr::Kind::malloc || a.kind == CExpr::Kind::cast ||
         a.kind == CExpr::Kind::sizeof_type) && !(a.target == b.target))
        return false;
    for (std::size_t i = 0; i < a.kids.size(); ++i)
        if (!same_structure(a.kids[i], b.kids[i])) return false;
    return true;
}

namespace {

bool same_list(const std::vector<CStmt>& a, const std::vector<CStmt>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!same_structure(a[i], b[i])) return false;
    return true;
}

} // namespace

bool same_structure(const CStmt& a, const CStmt& b) {
    if (a.kind != b.kind || a.name != b.name || a.len != b.len || a.has_init != b.has_init ||
        !(a.type == b.type) || a.exprs.size() != b.exprs.size())
        return false;
    for (std::size_t i = 0; i < a.exprs.size(); ++i)
        if (!same_structure(a.exprs[i], b.exprs[i])) return false;
    return same_list(a.body, b.body) && same_list(a.else_body, b.else_body) &&
           same_list(a.for_init, b.for_init) && same_list(a.for_step, b.for_step);
}

bool same_structure(const CProgram& a, const CProgram& b) {
    if (a.structs.size() != b.structs.size() || a.functions.size() != b.functions.size())
        return false;
    for (std::size_t i = 0; i < a.structs.size(); ++i)
        if (a.structs[i].name != b.structs[i].name || a.structs[i].fields != b.structs[i].fields)
            return false;
    for (std::size_t i = 0; i < a.functions.size(); ++i) {
        const auto& fa = a.functions[i];
        const auto& fb = b.functions[i];
        if (fa.name != fb.name || !(fa.ret == fb.ret) || fa.params.size() != fb.params.size())
            return false;
        for (std::size_t p = 0; p < fa.params.size(); ++p)
            if (fa.params[p].name != fb.params[p].name || !(fa.params[p].type == fb.params[p].type))
                return false;
        if (!same_list(fa.body, fb.body)) return false;
    }
    return true;
}

const CType* CStruct::field(const std::string& f) const {
    for (const auto& [n, t] : fields)
        if (n == f) return &t;
    return nullptr;
}

std::optional<std::size_t> CStruct::field_index(const std::string& f) const {
    for (std::size_t i = 0; i < fields.size(); ++i)
        if (fields[i].first == f) return i;
    return std::nullopt;
}

const CStruct* CProgram::find_struct(const std::string& n) const {
    auto it = std::find_if(structs.begin(), structs.end(), [&](const CStruct& s) { return s.name == n; });
    return it == structs.end() ? nullptr : &*it;
}

const CFunction* CProgram::find_function(const std::string& n) const {
    auto it = std::find_if(functions.begin(), functions.end(), [&](const CFunction& f) { return f.name == n; });
    return it == functions.end() ? nullptr : &*it;
}

void visit_expr(const CExpr& e, const std::function<void(const CExpr&)>& f) {
    f(e);
    for (const auto& k : e.kids) visit_expr(k, f);
}

void visit_stmts(const std::vector<CStmt>& body, const std::function<void(const CStmt&)>& f) {
    for (const auto& s : body) {
        f(s);
        visit_stmts(s.for_init, f);
        visit_stmts(s.body, f);
        visit_stmts(s.else_body, f);
        visit_stmts(s.for_step, f);
    }
}

void visit_body_exprs(const std::vector<CStmt>& body, const std::function<void(const CExpr&)>& f) {
    visit_stmts(body, [&](const CStmt& s) {
        for (const auto& e : s.exprs) visit_expr(e, f);
    });
}

} // namespace c2r
