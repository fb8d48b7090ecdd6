#include "c2r/rust_ast.hpp"

#include <algorithm>
#include <array>

namespace c2r {

RustType RustType::base(std::string name) {
    RustType t;
    t.kind = Kind::base;
    t.name = std::move(name);
    return t;
}

RustType RustType::unit() { return RustType{}; }

RustType RustType::array(RustType elem, uint64_t len) {
    RustType t;
    t.kind = Kind::array;
    t.len = len;
    t.elems.push_back(std::move(elem));
    return t;
}

RustType RustType::slice(RustType elem, bool mut_, std::optional<std::string> lifetime) {
    RustType t;
    t.kind = Kind::slice_ref;
    t.mut_ = mut_;
    t.lifetime = std::move(lifetime);
    t.elems.push_back(std::move(elem));
    return t;
}

RustType RustType::boxed(RustType elem) {
    RustType t;
    t.kind = Kind::boxed_slice;
    t.elems.push_back(std::move(elem));
    return t;
}

RustType RustType::named(std::string name, std::optional<std::string> lifetime) {
    RustType t;
    t.kind = Kind::named;
    t.name = std::move(name);
    t.lifetime = std::move(lifetime);
    return t;
}

RustType RustType::tuple(std::vector<RustType> elems) {
    RustType t;
    t.kind = Kind::tuple;
    t.elems = std::move(elems);
    return t;
}

RustType RustType::function(std::vector<RustType> params, RustType ret) {
    RustType t;
    t.kind = Kind::function;
    t.elems = std::move(params);
    t.elems.push_back(std::move(ret));
    return t;
}

RustType erase_annotations(RustType t) {
    t.mut_ = false;
    t.lifetime.reset();
    for (auto& e : t.elems) e = erase_annotations(std::move(e));
    return t;
}

bool same_shape(const RustType& a, const RustType& b) {
    return erase_annotations(a) == erase_annotations(b);
}

bool is_allowed_method(const std::string& m) {
    static constexpr std::array<std::string_view, 12> allowed = {
        "split_at", "into", "into_boxed_slice", "len", "clone", "wrapping_add",
        "wrapping_sub", "wrapping_mul", "wrapping_neg", "fill", "copy_from_slice", "to_vec",
    };
    return std::find(allowed.begin(), allowed.end(), m) != allowed.end();
}

std::set<std::string> free_vars(const RustExpr& e) {
    using K = RustExpr::Kind;
    std::set<std::string> out;
    switch (e.kind) {
    case K::var: out.insert(e.name); return out;
    case K::let: {
        out = free_vars(e.kids[0]);
        auto body = free_vars(e.kids[1]);
        body.erase(e.name);
        out.insert(body.begin(), body.end());
        return out;
    }
    case K::let_tuple: {
        out = free_vars(e.kids[0]);
        auto body = free_vars(e.kids[1]);
        for (const auto& n : e.names) body.erase(n);
        out.insert(body.begin(), body.end());
        return out;
    }
    default:
        for (const auto& k : e.kids) {
            auto s = free_vars(k);
            out.insert(s.begin(), s.end());
        }
        return out;
    }
}

void walk_post(RustExpr& e, const std::function<void(RustExpr&)>& f) {
    for (auto& k : e.kids) walk_post(k, f);
    f(e);
}

void walk_pre(const RustExpr& e, const std::function<void(const RustExpr&)>& f) {
    f(e);
    for (const auto& k : e.kids) walk_pre(k, f);
}

RustType map_type(const RustType& t, const std::function<RustType(RustType)>& f) {
    RustType c = t;
    for (auto& e : c.elems) e = map_type(e, f);
    return f(std::move(c));
}

void map_expr_types(RustExpr& e, const std::function<RustType(RustType)>& f) {
    walk_post(e, [&](RustExpr& n) {
        if (n.ty) n.ty = map_type(*n.ty, f);
    });
}

namespace rx {

RustExpr make(RustExpr::Kind k, std::vector<RustExpr> kids) {
    RustExpr e;
    e.kind = k;
    e.kids = std::move(kids);
    return e;
}

RustExpr var(std::string name, SourceLoc loc) {
    RustExpr e = make(RustExpr::Kind::var);
    e.name = std::move(name);
    e.loc = std::move(loc);
    return e;
}

RustExpr unit() { return make(RustExpr::Kind::unit); }

RustExpr int_lit(uint64_t v, std::optional<RustType> t, bool suffixed) {
    RustExpr e = make(RustExpr::Kind::int_lit);
    e.value = v;
    e.ty = std::move(t);
    e.suffixed = suffixed;
    return e;
}

RustExpr bool_lit(bool b) {
    RustExpr e = make(RustExpr::Kind::bool_lit);
    e.value = b;
    return e;
}

RustExpr let(std::string name, std::optional<RustType> ty, RustExpr rhs, RustExpr body, SourceLoc loc) {
    RustExpr e = make(RustExpr::Kind::let, {std::move(rhs), std::move(body)});
    e.name = std::move(name);
    e.ty = std::move(ty);
    e.loc = std::move(loc);
    return e;
}

RustExpr let_tuple(std::vector<std::string> names, RustType ty, RustExpr rhs, RustExpr body, SourceLoc loc) {
    RustExpr e = make(RustExpr::Kind::let_tuple, {std::move(rhs), std::move(body)});
    e.names = std::move(names);
    e.ty = std::move(ty);
    e.loc = std::move(loc);
    return e;
}

RustExpr seq(std::vector<RustExpr> items) { return make(RustExpr::Kind::seq, std::move(items)); }

RustExpr block(RustExpr inner) { return make(RustExpr::Kind::block, {std::move(inner)}); }

RustExpr borrow(RustExpr e, bool mut_) {
    RustExpr b = make(RustExpr::Kind::borrow, {std::move(e)});
    b.mut_ = mut_;
    return b;
}

RustExpr deref(RustExpr e) { return make(RustExpr::Kind::deref, {std::move(e)}); }

RustExpr index(RustExpr base, RustExpr idx) {
    return make(RustExpr::Kind::index, {std::move(base), std::move(idx)});
}

RustExpr field(RustExpr base, std::string f, std::string owner) {
    RustExpr e = make(RustExpr::Kind::field, {std::move(base)});
    e.name = std::move(f);
    e.aux = std::move(owner);
    return e;
}

RustExpr call(std::string fn, std::vector<RustExpr> args, SourceLoc loc) {
    RustExpr e = make(RustExpr::Kind::call, std::move(args));
    e.name = std::move(fn);
    e.loc = std::move(loc);
    return e;
}

RustExpr method(RustExpr recv, std::string m, std::vector<RustExpr> args) {
    RustExpr e = make(RustExpr::Kind::method_call, {std::move(recv)});
    for (auto& a : args) e.kids.push_back(std::move(a));
    e.name = std::move(m);
    return e;
}

RustExpr cast(RustExpr e, RustType to) {
    RustExpr c = make(RustExpr::Kind::cast, {std::move(e)});
    c.ty = std::move(to);
    return c;
}

RustExpr binop(std::string op, RustExpr l, RustExpr r) {
    RustExpr e = make(RustExpr::Kind::binop, {std::move(l), std::move(r)});
    e.name = std::move(op);
    return e;
}

} // namespace rx

const RustStruct* RustProgram::find_struct(const std::string& n) const {
    for (const auto& s : structs)
        if (s.name == n) return &s;
    return nullptr;
}

RustStruct* RustProgram::find_struct(const std::string& n) {
    for (auto& s : structs)
        if (s.name == n) return &s;
    return nullptr;
}

const RustFn* RustProgram::find_fn(const std::string& n) const {
    for (const auto& f : fns)
        if (f.name == n) return &f;
    return nullptr;
}

RustFn* RustProgram::find_fn(const std::string& n) {
    for (auto& f : fns)
        if (f.name == n) return &f;
    return nullptr;
}

} // namespace c2r
