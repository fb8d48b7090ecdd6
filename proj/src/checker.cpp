#include "c2r/checker.hpp"

#include "c2r/rust_typing.hpp"
#include "c2r/traits.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <tuple>

namespace c2r {

const char* to_code(CheckCategory c) {
    switch (c) {
    case CheckCategory::type_mismatch: return "type-mismatch";
    case CheckCategory::write_through_immutable: return "write-through-immutable";
    case CheckCategory::use_after_move_out: return "use-after-move-out";
    }
    return "type-mismatch";
}

Diagnostic CheckDiagnostic::to_diagnostic() const { return {Severity::error, to_code(category), loc, message}; }

namespace {

using K = RustExpr::Kind;
using T = std::optional<RustType>;

struct VarInfo {
    RustType ty;
    bool mut_binding = false;
    bool live = true;
};

using Env = std::vector<std::map<std::string, VarInfo>>;

RustType strip_lifetimes(RustType t) {
    return map_type(t, [](RustType x) {
        x.lifetime.reset();
        return x;
    });
}

bool is_cmp(const std::string& op) {
    return op == "==" || op == "!=" || op == "<" || op == ">" || op == "<=" || op == ">=";
}

class Checker {
public:
    explicit Checker(const RustProgram& p) : p_(p) {
        for (const auto& s : p.structs) {
            auto& set = facts_[s.name];
            for (const auto& d : s.derives) {
                if (d == "Copy") set.insert(Trait::copy);
                if (d == "Clone") set.insert(Trait::clone);
                if (d == "PartialEq") set.insert(Trait::partial_eq);
            }
        }
    }

    void function(const RustFn& f) {
        Env env(1);
        for (std::size_t i = 0; i < f.params.size(); ++i) {
            bool m = i < f.mut_params.size() && f.mut_params[i];
            env[0][f.params[i].first] = {f.params[i].second, m, true};
        }
        ret_ = f.ret;
        T t = check(f.body, env);
        if (t && !returns_(f.body)) expect(f.ret, f.body, *t, f.body.loc.line ? f.body.loc : f.loc, "function result");
    }

    std::vector<CheckDiagnostic> diags;

private:
    void report(CheckCategory c, const SourceLoc& loc, std::string msg) {
        auto key = std::make_tuple(static_cast<int>(c), loc.line, loc.column, msg);
        if (!seen_.insert(key).second) return;
        diags.push_back({c, loc, std::move(msg)});
    }

    static bool returns_(const RustExpr& e) {
        switch (e.kind) {
        case K::return_: return true;
        case K::let:
        case K::let_tuple: return returns_(e.kids[1]);
        case K::seq: return !e.kids.empty() && returns_(e.kids.back());
        case K::block: return returns_(e.kids[0]);
        default: return false;
        }
    }

    VarInfo* find(Env& env, const std::string& n) {
        for (auto it = env.rbegin(); it != env.rend(); ++it) {
            auto f = it->find(n);
            if (f != it->end()) return &f->second;
        }
        return nullptr;
    }

    bool is_copy(const RustType& t) const { return type_has_trait(t, Trait::copy, facts_); }

    bool compatible(const RustType& want, const RustType& have) const {
        RustType w = strip_lifetimes(want), h = strip_lifetimes(have);
        if (w == h) return true;
        if (w.kind != h.kind) return false;
        switch (w.kind) {
        case RustType::Kind::slice_ref:
            if (w.mut_ && !h.mut_) return false;
            return compatible(w.elem(), h.elem()) && compatible(h.elem(), w.elem());
        case RustType::Kind::tuple:
            if (w.elems.size() != h.elems.size()) return false;
            for (std::size_t i = 0; i < w.elems.size(); ++i)
                if (!compatible(w.elems[i], h.elems[i])) return false;
            return true;
        case RustType::Kind::named: return w.name == h.name;
        default: return false;
        }
    }

    static bool flexible_literal(const RustExpr& e) { return e.kind == K::int_lit && !e.suffixed; }

    void expect(const RustType& want, const RustExpr& e, const RustType& have, const SourceLoc& loc, const std::string& what) {
        if (flexible_literal(e) && want.is_integer()) return;
        if (!compatible(want, have))
            report(CheckCategory::type_mismatch, loc.line ? loc : e.loc,
                   what + ": expected " + print_type(want) + ", found " + print_type(have));
    }

    /// Moves `e` out when it names a non-Copy value. Mutable borrows passed
    /// to a typed position are reborrowed instead.
    void consume(const RustExpr& e, Env& env, bool typed_site) {
        const RustExpr* root = &e;
        while (root->kind == K::field) root = &root->kids[0];
        if (root->kind != K::var) return;
        VarInfo* v = find(env, root->name);
        if (!v) return;
        T t = root == &e ? T(v->ty) : type_in(e, env);
        if (!t || is_copy(*t)) return;
        if (t->is_slice() && typed_site) return;
        v->live = false;
    }

    T type_in(const RustExpr& e, Env& env) {
        TypeScope scope;
        for (const auto& frame : env)
            for (const auto& [n, v] : frame) scope.bind(n, v.ty);
        return type_of(e, scope, p_);
    }

    /// Reports a write through `place` that Rust would reject.
    void writable(const RustExpr& place, Env& env, const SourceLoc& loc) {
        switch (place.kind) {
        case K::var: {
            VarInfo* v = find(env, place.name);
            if (!v) return;
            if (v->ty.is_slice()) {
                if (!v->ty.mut_)
                    report(CheckCategory::write_through_immutable, loc,
                           "write through '" + place.name + "', which is a shared borrow " + print_type(v->ty));
            } else if (!v->mut_binding) {
                report(CheckCategory::write_through_immutable, loc,
                       "write to '" + place.name + "', which is not declared mut");
            }
            return;
        }
        case K::index:
        case K::index_range:
        case K::array_to_slice:
        case K::deref: writable(place.kids[0], env, loc); return;
        case K::field: {
            T owner = type_in(place.kids[0], env);
            T ft = owner ? field_type(*owner, place.name, p_) : std::nullopt;
            if (ft && ft->is_slice() && !ft->mut_)
                report(CheckCategory::write_through_immutable, loc,
                       "write through field '" + place.name + "', which is a shared borrow");
            if (ft && ft->is_slice()) return;
            writable(place.kids[0], env, loc);
            return;
        }
        default: return;
        }
    }

    void merge(Env& into, const Env& other) {
        for (std::size_t i = 0; i < into.size() && i < other.size(); ++i)
            for (auto& [n, v] : into[i]) {
                auto it = other[i].find(n);
                if (it != other[i].end()) v.live = v.live && it->second.live;
            }
    }

    T check(const RustExpr& e, Env& env) {
        switch (e.kind) {
        case K::var: {
            VarInfo* v = find(env, e.name);
            if (!v) {
                report(CheckCategory::type_mismatch, e.loc, "unbound variable '" + e.name + "'");
                return std::nullopt;
            }
            if (!v->live) report(CheckCategory::use_after_move_out, e.loc, "use of moved value '" + e.name + "'");
            return v->ty;
        }
        case K::unit:
        case K::break_: return RustType::unit();
        case K::int_lit: return e.ty ? *e.ty : RustType::base("u32");
        case K::bool_lit: return RustType::base("bool");
        case K::let: {
            T t = check(e.kids[0], env);
            if (e.ty && t) expect(*e.ty, e.kids[0], *t, e.loc, "let " + e.name);
            consume(e.kids[0], env, e.ty.has_value());
            env.emplace_back();
            if (e.ty || t) env.back()[e.name] = {e.ty ? *e.ty : *t, e.mut_, true};
            T body = check(e.kids[1], env);
            env.pop_back();
            return body;
        }
        case K::let_tuple: {
            T t = check(e.kids[0], env);
            std::optional<RustType> shape = e.ty ? e.ty : t;
            if (e.ty && t) expect(*e.ty, e.kids[0], *t, e.loc, "let tuple");
            consume(e.kids[0], env, e.ty.has_value());
            env.emplace_back();
            if (shape && shape->is_tuple() && shape->elems.size() == e.names.size()) {
                for (std::size_t i = 0; i < e.names.size(); ++i) env.back()[e.names[i]] = {shape->elems[i], false, true};
            } else if (shape) {
                report(CheckCategory::type_mismatch, e.loc, "tuple pattern does not match " + print_type(*shape));
            }
            T body = check(e.kids[1], env);
            env.pop_back();
            return body;
        }
        case K::seq: {
            T last = RustType::unit();
            for (const auto& k : e.kids) last = check(k, env);
            return last;
        }
        case K::block: {
            env.emplace_back();
            T t = check(e.kids[0], env);
            env.pop_back();
            return t;
        }
        case K::array_repeat: {
            T t = check(e.kids[0], env);
            check(e.kids[1], env);
            if (!t) return std::nullopt;
            return RustType::array(*t, e.kids[1].value);
        }
        case K::array_list: {
            T first;
            for (const auto& k : e.kids) {
                T t = check(k, env);
                consume(k, env, true);
                if (!first) first = t;
                else if (t) expect(*first, k, *t, k.loc, "array element");
            }
            if (e.kids.empty()) return e.ty;
            if (!first) return std::nullopt;
            return RustType::array(*first, e.kids.size());
        }
        case K::vec_boxed: {
            T t = check(e.kids[0], env);
            T n = check(e.kids[1], env);
            if (n) expect(RustType::usize(), e.kids[1], *n, e.kids[1].loc, "vec! length");
            if (!t) return std::nullopt;
            return RustType::boxed(*t);
        }
        case K::array_to_slice:
        case K::deref: {
            T t = check(e.kids[0], env);
            if (!t) return std::nullopt;
            if (auto el = element_type(*t)) return RustType::slice(*el, t->is_slice() ? t->mut_ : false);
            report(CheckCategory::type_mismatch, e.loc, "cannot slice a value of type " + print_type(*t));
            return std::nullopt;
        }
        case K::index_range: {
            T t = check(e.kids[0], env);
            for (std::size_t i = 1; i < e.kids.size(); ++i) {
                if (e.kids[i].kind == K::unit) continue;
                T b = check(e.kids[i], env);
                if (b) expect(RustType::usize(), e.kids[i], *b, e.kids[i].loc, "range bound");
            }
            if (!t) return std::nullopt;
            if (auto el = element_type(*t)) return RustType::slice(*el);
            report(CheckCategory::type_mismatch, e.loc, "cannot slice a value of type " + print_type(*t));
            return std::nullopt;
        }
        case K::borrow: {
            T t = check(e.kids[0], env);
            if (e.mut_) writable(e.kids[0], env, e.loc);
            if (!t) return std::nullopt;
            if (auto el = element_type(*t)) return RustType::slice(*el, e.mut_);
            report(CheckCategory::type_mismatch, e.loc, "cannot borrow a value of type " + print_type(*t) + " as a slice");
            return std::nullopt;
        }
        case K::slice_from_ref: {
            T t = check(e.kids[0], env);
            if (e.mut_) writable(e.kids[0], env, e.loc);
            if (!t) return std::nullopt;
            return RustType::slice(*t, e.mut_);
        }
        case K::field: {
            T owner = check(e.kids[0], env);
            if (!owner) return std::nullopt;
            T ft = field_type(*owner, e.name, p_);
            if (!ft) report(CheckCategory::type_mismatch, e.loc, "no field '" + e.name + "' on " + print_type(*owner));
            return ft;
        }
        case K::index: {
            T t = check(e.kids[0], env);
            T i = check(e.kids[1], env);
            if (i) expect(RustType::usize(), e.kids[1], *i, e.kids[1].loc, "index");
            if (!t) return std::nullopt;
            if (auto el = element_type(*t)) return el;
            report(CheckCategory::type_mismatch, e.loc, "cannot index a value of type " + print_type(*t));
            return std::nullopt;
        }
        case K::assign_var: {
            T rhs = check(e.kids[0], env);
            VarInfo* v = find(env, e.name);
            if (!v) {
                report(CheckCategory::type_mismatch, e.loc, "assignment to unbound '" + e.name + "'");
                return RustType::unit();
            }
            if (!v->mut_binding)
                report(CheckCategory::write_through_immutable, e.loc, "assignment to '" + e.name + "', which is not declared mut");
            if (rhs) expect(v->ty, e.kids[0], *rhs, e.loc, "assignment");
            consume(e.kids[0], env, true);
            v->live = true;
            return RustType::unit();
        }
        case K::assign_index: {
            T base = check(e.kids[0], env);
            T idx = check(e.kids[1], env);
            T rhs = check(e.kids[2], env);
            if (idx) expect(RustType::usize(), e.kids[1], *idx, e.kids[1].loc, "index");
            writable(e.kids[0], env, e.loc);
            if (base && rhs)
                if (auto el = element_type(*base)) expect(*el, e.kids[2], *rhs, e.loc, "element assignment");
            consume(e.kids[2], env, true);
            return RustType::unit();
        }
        case K::assign_field: {
            T owner = check(e.kids[0], env);
            T rhs = check(e.kids[1], env);
            writable(e.kids[0], env, e.loc);
            if (owner && rhs)
                if (T ft = field_type(*owner, e.name, p_)) expect(*ft, e.kids[1], *rhs, e.loc, "field assignment");
            consume(e.kids[1], env, true);
            return RustType::unit();
        }
        case K::struct_lit: {
            const RustStruct* s = p_.find_struct(e.name);
            if (!s) {
                report(CheckCategory::type_mismatch, e.loc, "unknown struct " + e.name);
                return std::nullopt;
            }
            if (e.kids.size() != s->fields.size())
                report(CheckCategory::type_mismatch, e.loc, "struct literal for " + e.name + " has the wrong number of fields");
            for (std::size_t i = 0; i < e.kids.size(); ++i) {
                T t = check(e.kids[i], env);
                for (const auto& [n, ft] : s->fields)
                    if (n == e.names[i] && t) expect(ft, e.kids[i], *t, e.kids[i].loc, "field " + n);
                consume(e.kids[i], env, true);
            }
            return RustType::named(e.name);
        }
        case K::tuple_lit: {
            std::vector<RustType> elems;
            bool known = true;
            for (const auto& k : e.kids) {
                T t = check(k, env);
                consume(k, env, false);
                if (t) elems.push_back(*t);
                else known = false;
            }
            if (!known) return std::nullopt;
            return RustType::tuple(std::move(elems));
        }
        case K::call: {
            const RustFn* f = p_.find_fn(e.name);
            if (!f) f = builtin_rust_fn(e.name);
            std::vector<T> args;
            for (const auto& k : e.kids) args.push_back(check(k, env));
            if (!f) {
                report(CheckCategory::type_mismatch, e.loc, "call to unknown function " + e.name);
                return std::nullopt;
            }
            if (args.size() != f->params.size()) {
                report(CheckCategory::type_mismatch, e.loc, "wrong number of arguments to " + e.name);
                return f->ret;
            }
            for (std::size_t i = 0; i < args.size(); ++i) {
                if (args[i]) expect(f->params[i].second, e.kids[i], *args[i], e.kids[i].loc, "argument " + std::to_string(i + 1) + " of " + e.name);
                consume(e.kids[i], env, true);
            }
            return f->ret;
        }
        case K::method_call: return method(e, env);
        case K::box_new: {
            T t = check(e.kids[0], env);
            consume(e.kids[0], env, false);
            if (!t) return std::nullopt;
            if (!t->is_array()) {
                report(CheckCategory::type_mismatch, e.loc, "Box::new of " + print_type(*t) + " does not give a boxed slice");
                return std::nullopt;
            }
            return RustType::boxed(t->elem());
        }
        case K::if_: {
            T c = check(e.kids[0], env);
            if (c) expect(RustType::base("bool"), e.kids[0], *c, e.kids[0].loc, "condition");
            Env then_env = env;
            T t = check(e.kids[1], then_env);
            if (e.kids.size() < 3) {
                merge(env, then_env);
                return RustType::unit();
            }
            Env else_env = env;
            T f = check(e.kids[2], else_env);
            bool then_returns = returns_(e.kids[1]), else_returns = returns_(e.kids[2]);
            if (then_returns && !else_returns) env = else_env;
            else if (else_returns && !then_returns) env = then_env;
            else {
                env = then_env;
                merge(env, else_env);
            }
            if (then_returns) return f;
            if (else_returns) return t;
            if (t && f && !compatible(*t, *f) && !compatible(*f, *t))
                report(CheckCategory::type_mismatch, e.loc, "if branches have types " + print_type(*t) + " and " + print_type(*f));
            return t;
        }
        case K::while_: {
            // Twice, so that moves in one iteration are seen by the next.
            for (int round = 0; round < 2; ++round) {
                T c = check(e.kids[0], env);
                if (c && round == 0) expect(RustType::base("bool"), e.kids[0], *c, e.kids[0].loc, "condition");
                Env body = env;
                check(e.kids[1], body);
                merge(env, body);
            }
            return RustType::unit();
        }
        case K::return_: {
            if (e.kids.empty() || e.kids[0].kind == K::unit) {
                if (!ret_.is_unit()) report(CheckCategory::type_mismatch, e.loc, "return without a value");
                return std::nullopt;
            }
            T t = check(e.kids[0], env);
            if (t) expect(ret_, e.kids[0], *t, e.loc, "return value");
            consume(e.kids[0], env, true);
            return std::nullopt;
        }
        case K::binop: {
            T l = check(e.kids[0], env);
            T r = check(e.kids[1], env);
            const std::string& op = e.name;
            if (op == "&&" || op == "||") {
                if (l) expect(RustType::base("bool"), e.kids[0], *l, e.kids[0].loc, op + " operand");
                if (r) expect(RustType::base("bool"), e.kids[1], *r, e.kids[1].loc, op + " operand");
                return RustType::base("bool");
            }
            bool shift = op == "<<" || op == ">>";
            if (l && r && !shift && !flexible_literal(e.kids[0]) && !flexible_literal(e.kids[1]) && !compatible(*l, *r))
                report(CheckCategory::type_mismatch, e.loc,
                       "operands of " + op + " have types " + print_type(*l) + " and " + print_type(*r));
            if (is_cmp(op)) return RustType::base("bool");
            if (flexible_literal(e.kids[0]) && r) return r;
            return l;
        }
        case K::unop: return check(e.kids[0], env);
        case K::cast: {
            check(e.kids[0], env);
            return e.ty;
        }
        }
        return std::nullopt;
    }

    T method(const RustExpr& e, Env& env) {
        T recv = check(e.kids[0], env);
        std::vector<T> args;
        for (std::size_t i = 1; i < e.kids.size(); ++i) args.push_back(check(e.kids[i], env));
        const std::string& m = e.name;
        if (!is_allowed_method(m)) report(CheckCategory::type_mismatch, e.loc, "method '" + m + "' is not part of the output subset");
        if (m == "len") return RustType::usize();
        if (m == "fill" || m == "copy_from_slice") {
            writable(e.kids[0], env, e.loc);
            if (m == "fill" && recv && !args.empty() && args[0])
                if (auto el = element_type(*recv)) expect(*el, e.kids[1], *args[0], e.kids[1].loc, "fill value");
            if (m == "fill" && e.kids.size() > 1) consume(e.kids[1], env, true);
            return RustType::unit();
        }
        if (m == "split_at") {
            if (e.mut_) writable(e.kids[0], env, e.loc);
            if (!args.empty() && args[0]) expect(RustType::usize(), e.kids[1], *args[0], e.kids[1].loc, "split index");
            if (!recv) return std::nullopt;
            auto el = element_type(*recv);
            if (!el) {
                report(CheckCategory::type_mismatch, e.loc, "split_at on " + print_type(*recv));
                return std::nullopt;
            }
            RustType half = RustType::slice(*el, e.mut_);
            return RustType::tuple({half, half});
        }
        if (m == "into" || m == "to_vec") {
            if (!recv) return std::nullopt;
            if (auto el = element_type(*recv)) return RustType::boxed(*el);
            return std::nullopt;
        }
        if (!args.empty() && recv && args[0] && !flexible_literal(e.kids[1]) && !compatible(*recv, *args[0]))
            report(CheckCategory::type_mismatch, e.loc,
                   m + " on " + print_type(*recv) + " with argument " + print_type(*args[0]));
        return recv;
    }

    const RustProgram& p_;
    TraitFacts facts_;
    RustType ret_;
    std::set<std::tuple<int, uint32_t, uint32_t, std::string>> seen_;
};

} // namespace

std::vector<CheckDiagnostic> check_program(const RustProgram& program) {
    Checker c(program);
    for (const auto& f : program.fns) c.function(f);
    return std::move(c.diags);
}

} // namespace c2r
