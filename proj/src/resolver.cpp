#include "c2r/c_frontend.hpp"

#include <map>
#include <set>

namespace c2r {

namespace {

std::vector<CFunction> make_builtins() {
    std::vector<CFunction> out;
    auto scalar = [&](const char* name, BaseType b) {
        CFunction f;
        f.name = name;
        f.ret = CType::make_void();
        f.params.push_back({"x", CType::make_base(b)});
        out.push_back(f);
    };
    scalar("print_u8", BaseType::u8);
    scalar("print_u16", BaseType::u16);
    scalar("print_u32", BaseType::u32);
    scalar("print_u64", BaseType::u64);
    scalar("print_i32", BaseType::i32);
    scalar("print_i64", BaseType::i64);
    scalar("print_bool", BaseType::boolean);
    CFunction bytes;
    bytes.name = "print_bytes";
    bytes.ret = CType::make_void();
    bytes.params.push_back({"p", CType::pointer_to(CType::make_base(BaseType::u8))});
    bytes.params.push_back({"len", CType::make_base(BaseType::u32)});
    out.push_back(bytes);
    return out;
}

int pointer_depth(const CType& t) {
    int d = 0;
    const CType* cur = &t;
    while (cur->is_pointer()) {
        ++d;
        cur = &cur->elem();
    }
    return d;
}

CExpr cast_to(CExpr e, const CType& to) {
    CExpr c;
    c.kind = CExpr::Kind::cast;
    c.loc = e.loc;
    c.target = to;
    c.type = to;
    c.kids.push_back(std::move(e));
    return c;
}

CExpr int_lit(uint64_t v, const CType& t, SourceLoc loc) {
    CExpr e;
    e.kind = CExpr::Kind::int_lit;
    e.value = v;
    e.type = t;
    e.loc = std::move(loc);
    return e;
}

class Resolver {
public:
    explicit Resolver(CProgram& prog) : prog_(prog) {}

    void run() {
        std::set<std::string> struct_names;
        for (const auto& s : prog_.structs) {
            if (!struct_names.insert(s.name).second)
                throw CompileError("name-error", s.loc, "duplicate struct '" + s.name + "'");
        }
        for (const auto& s : prog_.structs) {
            std::set<std::string> fields;
            for (const auto& [fname, ftype] : s.fields) {
                if (!fields.insert(fname).second)
                    throw CompileError("name-error", s.loc, "duplicate field '" + fname + "' in struct " + s.name);
                check_type(ftype, s.loc, false);
            }
        }
        for (const auto& f : make_builtins()) functions_[f.name] = f;
        for (const auto& f : prog_.functions) {
            if (functions_.count(f.name)) {
                bool builtin = builtin_function(f.name) != nullptr;
                throw CompileError("name-error", f.loc,
                                   builtin ? "'" + f.name + "' is a reserved output helper"
                                           : "duplicate function '" + f.name + "'");
            }
            functions_[f.name] = f;
        }
        for (const auto& p : prog_.prototypes) {
            auto it = functions_.find(p.name);
            if (it == functions_.end()) continue;
            if (builtin_function(p.name)) continue;
            bool same = p.params.size() == it->second.params.size() && p.ret == it->second.ret;
            for (std::size_t i = 0; same && i < p.params.size(); ++i)
                same = p.params[i].type == it->second.params[i].type;
            if (!same)
                throw CompileError("type-error", p.loc, "prototype of '" + p.name + "' does not match its definition");
        }
        for (const auto& p : prog_.prototypes)
            if (!functions_.count(p.name))
                declared_only_.insert(p.name);
        for (auto& f : prog_.functions) function(f);
    }

private:
    void check_type(const CType& t, const SourceLoc& loc, bool allow_void) {
        switch (t.kind) {
        case CType::Kind::void_:
            if (!allow_void) throw CompileError("type-error", loc, "void is not a value type here");
            return;
        case CType::Kind::base: return;
        case CType::Kind::struct_:
            if (!prog_.find_struct(t.name))
                throw CompileError("name-error", loc, "unknown struct '" + t.name + "'");
            return;
        case CType::Kind::pointer:
            if (pointer_depth(t) > 2)
                throw CompileError("subset-error", loc, "pointers nested more than two levels are outside mini-C");
            if (t.elem().is_void()) throw CompileError("subset-error", loc, "void pointers are outside mini-C");
            check_type(t.elem(), loc, false);
            return;
        case CType::Kind::array:
            check_type(t.elem(), loc, false);
            return;
        case CType::Kind::function:
            throw CompileError("subset-error", loc, "function types are only allowed as declarations");
        }
    }

    void function(CFunction& f) {
        check_type(f.ret, f.loc, true);
        if (f.ret.is_array()) throw CompileError("type-error", f.loc, "functions cannot return arrays");
        ret_ = f.ret;
        scopes_.clear();
        scopes_.emplace_back();
        for (const auto& p : f.params) {
            check_type(p.type, f.loc, false);
            if (!scopes_.back().emplace(p.name, p.type).second)
                throw CompileError("name-error", f.loc, "duplicate parameter '" + p.name + "'");
        }
        loop_depth_ = 0;
        stmts(f.body);
    }

    const CType* lookup(const std::string& name) const {
        for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
            auto found = it->find(name);
            if (found != it->end()) return &found->second;
        }
        return nullptr;
    }

    void declare(const std::string& name, const CType& t, const SourceLoc& loc) {
        if (functions_.count(name) || declared_only_.count(name))
            throw CompileError("name-error", loc, "'" + name + "' shadows a function");
        if (!scopes_.back().emplace(name, t).second)
            throw CompileError("name-error", loc, "redeclaration of '" + name + "'");
    }

    void stmts(std::vector<CStmt>& list) {
        scopes_.emplace_back();
        for (auto& s : list) stmt(s);
        scopes_.pop_back();
    }

    CExpr condition(CExpr e) {
        CExpr r = expr(std::move(e), nullptr);
        return convert(std::move(r), CType::make_base(BaseType::boolean));
    }

    static bool is_lvalue(const CExpr& e) {
        return e.kind == CExpr::Kind::var || e.kind == CExpr::Kind::index ||
               e.kind == CExpr::Kind::field || e.kind == CExpr::Kind::deref;
    }

    // Reduces a memset/memcpy byte count to an element count.
    CExpr element_count(CExpr len, const CType& elem, const SourceLoc& loc) {
        if (len.kind == CExpr::Kind::sizeof_type) {
            if (!(len.target == elem)) throw CompileError("type-error", loc, "sizeof operand does not match element type");
            return int_lit(1, CType::make_base(BaseType::usize), len.loc);
        }
        if (len.kind == CExpr::Kind::binop && len.op == "*") {
            for (int side = 0; side < 2; ++side) {
                if (len.kids[side].kind == CExpr::Kind::sizeof_type) {
                    if (!(len.kids[side].target == elem))
                        throw CompileError("type-error", loc, "sizeof operand does not match element type");
                    return unsigned_expr(std::move(len.kids[1 - side]), loc);
                }
            }
        }
        bool byte_sized = elem.is_base() && bit_width(elem.base) <= 8;
        if (!byte_sized)
            throw CompileError("subset-error", loc, "byte counts for non-byte elements must be written N * sizeof(type)");
        return unsigned_expr(std::move(len), loc);
    }

    CExpr unsigned_expr(CExpr e, const SourceLoc& loc) {
        CType usize = CType::make_base(BaseType::usize);
        CExpr r = expr(std::move(e), &usize);
        if (!r.type->is_integer() || is_signed(r.type->base))
            throw CompileError("subset-error", loc, "lengths and indices must have an unsigned integer type");
        return r;
    }

    void stmt(CStmt& s) {
        switch (s.kind) {
        case CStmt::Kind::block: stmts(s.body); return;
        case CStmt::Kind::break_:
            if (loop_depth_ == 0) throw CompileError("parse-error", s.loc, "break outside of a loop");
            return;
        case CStmt::Kind::ret:
            if (s.exprs.empty()) {
                if (!ret_.is_void()) throw CompileError("type-error", s.loc, "non-void function must return a value");
                return;
            }
            if (ret_.is_void()) throw CompileError("type-error", s.loc, "void function returns a value");
            s.exprs[0] = convert(expr(std::move(s.exprs[0]), &ret_), ret_);
            return;
        case CStmt::Kind::if_:
            s.exprs[0] = condition(std::move(s.exprs[0]));
            stmts(s.body);
            stmts(s.else_body);
            return;
        case CStmt::Kind::while_:
            s.exprs[0] = condition(std::move(s.exprs[0]));
            ++loop_depth_;
            stmts(s.body);
            --loop_depth_;
            return;
        case CStmt::Kind::for_:
            scopes_.emplace_back();
            for (auto& i : s.for_init) stmt(i);
            s.exprs[0] = condition(std::move(s.exprs[0]));
            for (auto& st : s.for_step) stmt(st);
            ++loop_depth_;
            stmts(s.body);
            --loop_depth_;
            scopes_.pop_back();
            return;
        case CStmt::Kind::assign: {
            if (!is_lvalue(s.exprs[0]))
                throw CompileError("type-error", s.loc, "left-hand side of assignment is not assignable");
            CExpr lhs = expr(std::move(s.exprs[0]), nullptr);
            if (lhs.type->is_array()) throw CompileError("type-error", s.loc, "arrays are not assignable");
            CType lt = *lhs.type;
            s.exprs[0] = std::move(lhs);
            s.exprs[1] = convert(expr(std::move(s.exprs[1]), &lt), lt);
            return;
        }
        case CStmt::Kind::expr:
            s.exprs[0] = expr(std::move(s.exprs[0]), nullptr);
            return;
        case CStmt::Kind::decl_var: {
            check_type(s.type, s.loc, false);
            if (!s.exprs.empty()) {
                if (s.exprs[0].kind == CExpr::Kind::struct_init) {
                    s.exprs[0] = struct_init(std::move(s.exprs[0]), s.type);
                } else {
                    s.exprs[0] = convert(expr(std::move(s.exprs[0]), &s.type), s.type);
                }
            }
            declare(s.name, s.type, s.loc);
            return;
        }
        case CStmt::Kind::decl_array: {
            check_type(s.type, s.loc, false);
            if (s.exprs.size() > s.len)
                throw CompileError("type-error", s.loc, "too many initializers for array '" + s.name + "'");
            for (auto& e : s.exprs) {
                if (e.kind == CExpr::Kind::struct_init) e = struct_init(std::move(e), s.type);
                else e = convert(expr(std::move(e), &s.type), s.type);
            }
            declare(s.name, CType::array_of(s.type, s.len), s.loc);
            return;
        }
        case CStmt::Kind::memset: {
            CExpr dst = expr(std::move(s.exprs[0]), nullptr);
            if (!dst.type->is_indexable()) throw CompileError("type-error", s.loc, "memset destination must be a pointer or array");
            CType elem = dst.type->elem();
            CExpr val = expr(std::move(s.exprs[1]), elem.is_integer() ? &elem : nullptr);
            bool byte_sized = elem.is_integer() && bit_width(elem.base) <= 8;
            if (!byte_sized && !(val.kind == CExpr::Kind::int_lit && val.value == 0))
                throw CompileError("subset-error", s.loc, "memset of non-byte elements must use the value 0");
            if (!elem.is_integer() && !elem.is_bool())
                throw CompileError("subset-error", s.loc, "memset is only supported on integer arrays");
            s.exprs[2] = element_count(std::move(s.exprs[2]), elem, s.loc);
            s.exprs[1] = convert(std::move(val), elem);
            s.exprs[0] = std::move(dst);
            return;
        }
        case CStmt::Kind::memcpy: {
            CExpr dst = expr(std::move(s.exprs[0]), nullptr);
            CExpr src = expr(std::move(s.exprs[1]), nullptr);
            if (!dst.type->is_indexable() || !src.type->is_indexable())
                throw CompileError("type-error", s.loc, "memcpy operands must be pointers or arrays");
            if (!(dst.type->elem() == src.type->elem()))
                throw CompileError("subset-error", s.loc, "memcpy between unrelated element types");
            s.exprs[2] = element_count(std::move(s.exprs[2]), dst.type->elem(), s.loc);
            s.exprs[0] = std::move(dst);
            s.exprs[1] = std::move(src);
            return;
        }
        case CStmt::Kind::void_cast: {
            const CType* t = lookup(s.name);
            if (!t) throw CompileError("name-error", s.loc, "unknown variable '" + s.name + "'");
            if (!t->is_indexable())
                throw CompileError("type-error", s.loc, "(void) reset hint must name a pointer or array");
            return;
        }
        }
    }

    CExpr struct_init(CExpr e, const CType& t) {
        if (!t.is_struct()) throw CompileError("type-error", e.loc, "brace initializer for a non-struct value");
        const CStruct* s = prog_.find_struct(t.name);
        if (e.kids.size() > s->fields.size())
            throw CompileError("type-error", e.loc, "too many initializers for struct " + t.name);
        std::set<std::string> seen;
        for (std::size_t i = 0; i < e.kids.size(); ++i) {
            std::string& fname = e.field_names[i];
            if (fname.empty()) fname = s->fields[i].first;
            const CType* ft = s->field(fname);
            if (!ft) throw CompileError("name-error", e.loc, "struct " + t.name + " has no field '" + fname + "'");
            if (!seen.insert(fname).second)
                throw CompileError("type-error", e.loc, "field '" + fname + "' initialized twice");
            if (ft->is_array()) throw CompileError("subset-error", e.loc, "array fields cannot be brace-initialized");
            e.kids[i] = convert(expr(std::move(e.kids[i]), ft), *ft);
        }
        e.type = t;
        return e;
    }

    CExpr convert(CExpr e, const CType& to) {
        const CType& from = *e.type;
        if (from == to) return e;
        if (to.is_integer() && from.is_integer()) {
            if (e.kind == CExpr::Kind::int_lit) {
                e.type = to;
                return e;
            }
            return cast_to(std::move(e), to);
        }
        if (to.is_bool() && from.is_integer()) {
            CExpr zero = int_lit(0, from, e.loc);
            CExpr cmp;
            cmp.kind = CExpr::Kind::binop;
            cmp.op = "!=";
            cmp.loc = e.loc;
            cmp.type = to;
            cmp.kids.push_back(std::move(e));
            cmp.kids.push_back(std::move(zero));
            return cmp;
        }
        if (to.is_integer() && from.is_bool()) return cast_to(std::move(e), to);
        if (to.is_pointer() && from.is_indexable()) {
            if (!(to.elem() == from.elem()))
                throw CompileError("subset-error", e.loc,
                                   "pointer conversion between unrelated element types (" + to_string(from) +
                                       " to " + to_string(to) + ")");
            return e;
        }
        throw CompileError("type-error", e.loc, "expected " + to_string(to) + ", found " + to_string(from));
    }

    // Common type of two integer operands.
    CType unify(CExpr& a, CExpr& b, const CType* expected) {
        bool la = a.kind == CExpr::Kind::int_lit;
        bool lb = b.kind == CExpr::Kind::int_lit;
        if (la && lb) {
            CType t = expected && expected->is_integer() ? *expected : CType::make_base(BaseType::u32);
            a.type = t;
            b.type = t;
            return t;
        }
        if (la) {
            a.type = b.type;
            return *b.type;
        }
        if (lb) {
            b.type = a.type;
            return *a.type;
        }
        if (*a.type == *b.type) return *a.type;
        BaseType x = a.type->base;
        BaseType y = b.type->base;
        if (bit_width(x) == bit_width(y))
            throw CompileError("type-error", a.loc,
                               "mixed signedness operands " + to_string(*a.type) + " and " + to_string(*b.type));
        if (bit_width(x) < bit_width(y)) {
            a = cast_to(std::move(a), *b.type);
            return *b.type;
        }
        b = cast_to(std::move(b), *a.type);
        return *a.type;
    }

    CExpr expr(CExpr e, const CType* expected) {
        using K = CExpr::Kind;
        switch (e.kind) {
        case K::int_lit:
            if (expected && expected->is_integer()) e.type = *expected;
            else e.type = CType::make_base(BaseType::u32);
            return e;
        case K::bool_lit:
            e.type = CType::make_base(BaseType::boolean);
            return e;
        case K::var: {
            const CType* t = lookup(e.name);
            if (!t) throw CompileError("name-error", e.loc, "unknown variable '" + e.name + "'");
            e.type = *t;
            return e;
        }
        case K::index: {
            e.kids[0] = expr(std::move(e.kids[0]), nullptr);
            if (!e.kids[0].type->is_indexable())
                throw CompileError("type-error", e.loc, "indexing a non-pointer of type " + to_string(*e.kids[0].type));
            e.kids[1] = unsigned_expr(std::move(e.kids[1]), e.loc);
            e.type = e.kids[0].type->elem();
            return e;
        }
        case K::field: {
            e.kids[0] = expr(std::move(e.kids[0]), nullptr);
            const CType& bt = *e.kids[0].type;
            if (!bt.is_struct()) throw CompileError("type-error", e.loc, "field access on non-struct " + to_string(bt));
            const CType* ft = prog_.find_struct(bt.name)->field(e.name);
            if (!ft) throw CompileError("name-error", e.loc, "struct " + bt.name + " has no field '" + e.name + "'");
            e.type = *ft;
            return e;
        }
        case K::deref: {
            e.kids[0] = expr(std::move(e.kids[0]), nullptr);
            if (!e.kids[0].type->is_indexable())
                throw CompileError("type-error", e.loc, "dereferencing a non-pointer of type " + to_string(*e.kids[0].type));
            e.type = e.kids[0].type->elem();
            return e;
        }
        case K::addr_of: {
            CExpr& inner = e.kids[0];
            if (inner.kind == K::index) {
                CExpr sum;
                sum.kind = K::binop;
                sum.op = "+";
                sum.loc = e.loc;
                sum.kids.push_back(std::move(inner.kids[0]));
                sum.kids.push_back(std::move(inner.kids[1]));
                return expr(std::move(sum), expected);
            }
            if (inner.kind == K::deref) return expr(std::move(inner.kids[0]), expected);
            if (inner.kind != K::var && inner.kind != K::field)
                throw CompileError("subset-error", e.loc, "address-of a non-lvalue");
            e.kids[0] = expr(std::move(inner), nullptr);
            if (e.kids[0].type->is_array())
                throw CompileError("subset-error", e.loc, "taking the address of a whole array; use the array itself");
            e.type = CType::pointer_to(*e.kids[0].type);
            return e;
        }
        case K::call: {
            auto it = functions_.find(e.name);
            if (it == functions_.end()) {
                if (declared_only_.count(e.name))
                    throw CompileError("name-error", e.loc, "function '" + e.name + "' is declared but never defined");
                throw CompileError("name-error", e.loc, "unknown function '" + e.name + "'");
            }
            const CFunction& f = it->second;
            if (f.params.size() != e.kids.size())
                throw CompileError("type-error", e.loc, "wrong number of arguments to '" + e.name + "'");
            for (std::size_t i = 0; i < e.kids.size(); ++i)
                e.kids[i] = convert(expr(std::move(e.kids[i]), &f.params[i].type), f.params[i].type);
            e.type = f.ret;
            return e;
        }
        case K::malloc: {
            check_type(e.target, e.loc, false);
            e.kids[0] = unsigned_expr(std::move(e.kids[0]), e.loc);
            e.type = CType::pointer_to(e.target);
            return e;
        }
        case K::sizeof_type:
            throw CompileError("subset-error", e.loc, "sizeof is only supported inside allocation and memory calls");
        case K::struct_init:
            throw CompileError("subset-error", e.loc, "brace initializers are only supported in declarations");
        case K::cast: {
            check_type(e.target, e.loc, false);
            e.kids[0] = expr(std::move(e.kids[0]), e.target.is_integer() ? &e.target : nullptr);
            const CType& from = *e.kids[0].type;
            if (from == e.target) return std::move(e.kids[0]);
            if (e.target.is_pointer() || from.is_indexable())
                throw CompileError("subset-error", e.loc, "pointer casts are outside mini-C");
            if (e.target.is_struct() || from.is_struct())
                throw CompileError("type-error", e.loc, "struct casts are not allowed");
            if (e.target.is_bool()) return convert(std::move(e.kids[0]), e.target);
            e.type = e.target;
            return e;
        }
        case K::unop: {
            if (e.op == "!") {
                e.kids[0] = condition(std::move(e.kids[0]));
                e.type = CType::make_base(BaseType::boolean);
                return e;
            }
            e.kids[0] = expr(std::move(e.kids[0]), expected);
            if (!e.kids[0].type->is_integer())
                throw CompileError("type-error", e.loc, "operator " + e.op + " needs an integer operand");
            e.type = e.kids[0].type;
            return e;
        }
        case K::binop: return binop(std::move(e), expected);
        }
        return e;
    }

    CExpr binop(CExpr e, const CType* expected) {
        const std::string& op = e.op;
        CType boolean = CType::make_base(BaseType::boolean);
        if (op == "&&" || op == "||") {
            e.kids[0] = condition(std::move(e.kids[0]));
            e.kids[1] = condition(std::move(e.kids[1]));
            e.type = boolean;
            return e;
        }
        if (op == "==" || op == "!=" || op == "<" || op == ">" || op == "<=" || op == ">=") {
            e.kids[0] = expr(std::move(e.kids[0]), nullptr);
            e.kids[1] = expr(std::move(e.kids[1]), e.kids[0].kind == CExpr::Kind::int_lit ? nullptr : &*e.kids[0].type);
            const CType& a = *e.kids[0].type;
            const CType& b = *e.kids[1].type;
            if (a.is_indexable() || b.is_indexable())
                throw CompileError("subset-error", e.loc, "pointer comparisons are outside mini-C");
            if (a.is_bool() || b.is_bool()) {
                if (!(a.is_bool() && b.is_bool()) || (op != "==" && op != "!="))
                    throw CompileError("type-error", e.loc, "invalid comparison of booleans");
            } else if (a.is_integer() && b.is_integer()) {
                unify(e.kids[0], e.kids[1], nullptr);
            } else {
                throw CompileError("type-error", e.loc, "invalid operands to " + op);
            }
            e.type = boolean;
            return e;
        }
        e.kids[0] = expr(std::move(e.kids[0]), expected);
        if (e.kids[0].type->is_indexable()) {
            if (op != "+")
                throw CompileError("subset-error", e.loc, "only pointer + offset arithmetic is supported");
            e.kids[1] = unsigned_expr(std::move(e.kids[1]), e.loc);
            e.type = CType::pointer_to(e.kids[0].type->elem());
            return e;
        }
        const CType* rhs_expected = e.kids[0].kind == CExpr::Kind::int_lit ? expected : &*e.kids[0].type;
        if (op == "<<" || op == ">>") rhs_expected = nullptr;
        e.kids[1] = expr(std::move(e.kids[1]), rhs_expected);
        if (e.kids[1].type->is_indexable())
            throw CompileError("subset-error", e.loc, "write pointer arithmetic as pointer + offset");
        if (!e.kids[0].type->is_integer() || !e.kids[1].type->is_integer())
            throw CompileError("type-error", e.loc, "operator " + op + " needs integer operands");
        if (op == "<<" || op == ">>") {
            if (e.kids[0].kind == CExpr::Kind::int_lit && expected && expected->is_integer())
                e.kids[0].type = *expected;
            e.type = e.kids[0].type;
            return e;
        }
        e.type = unify(e.kids[0], e.kids[1], expected);
        return e;
    }

    CProgram& prog_;
    std::map<std::string, CFunction> functions_;
    std::set<std::string> declared_only_;
    std::vector<std::map<std::string, CType>> scopes_;
    CType ret_;
    int loop_depth_ = 0;
};

} // namespace

const CFunction* builtin_function(const std::string& name) {
    static const std::vector<CFunction> builtins = make_builtins();
    for (const auto& f : builtins)
        if (f.name == name) return &f;
    return nullptr;
}

CProgram resolve(CProgram program) {
    Resolver(program).run();
    return program;
}

CProgram parse_and_resolve(std::string_view source, const std::string& file) {
    return resolve(parse_program(tokenize(source, file)));
}

} // namespace c2r
