#include "c2r/mutability.hpp"

#include "c2r/rust_typing.hpp"

#include <deque>

namespace c2r {

Mode is_mutborrow(const RustType& t) { return t.is_slice() && t.mut_ ? Mode::mut_ : Mode::imm; }

RustType make_mut(const RustType& t) {
    if (!t.is_slice()) return t;
    RustType m = t;
    m.mut_ = true;
    return m;
}

namespace {

using K = RustExpr::Kind;

std::string path(const std::string& var, std::size_t i) { return var + "." + std::to_string(i); }

void forget(MutSets& s, const std::string& x) {
    s.V.erase(x);
    s.R.erase(x);
    std::string prefix = x + ".";
    for (auto* set : {&s.V, &s.R})
        for (auto it = set->lower_bound(prefix); it != set->end() && it->rfind(prefix, 0) == 0;)
            it = set->erase(it);
}

/// Upgrades the tuple components whose paths are in R.
RustType mut_components(RustType t, const std::string& x, const MutSets& s) {
    if (!t.is_tuple()) return t;
    for (std::size_t i = 0; i < t.elems.size(); ++i)
        if (s.R.count(path(x, i))) t.elems[i] = make_mut(t.elems[i]);
    return t;
}

class Inference {
public:
    Inference(RustProgram& p, std::size_t fn) : p_(p), fn_(fn) {}

    MutPassResult run() {
        RustFn before = p_.fns[fn_];
        RustFn& f = p_.fns[fn_];
        TypeScope scope;
        MutSets sets;
        for (const auto& [n, t] : f.params) {
            scope.bind(n, t);
            if (is_mutborrow(t) == Mode::mut_) sets.R.insert(n);
            if (t.is_tuple())
                for (std::size_t i = 0; i < t.elems.size(); ++i)
                    if (is_mutborrow(t.elems[i]) == Mode::mut_) sets.R.insert(path(n, i));
        }
        ret_ = f.ret;
        demand(f.body, f.ret, scope, sets);
        RustFn& g = p_.fns[fn_];  // callee updates may touch this function's own return type
        std::vector<bool> mut_params(g.params.size(), false);
        bool any = false;
        for (std::size_t i = 0; i < g.params.size(); ++i) {
            auto& [n, t] = g.params[i];
            if (sets.R.count(n)) t = make_mut(t);
            t = mut_components(t, n, sets);
            mut_params[i] = sets.V.count(n) > 0 || (i < g.mut_params.size() && g.mut_params[i]);
            any = any || mut_params[i];
        }
        if (any) g.mut_params = mut_params;
        MutPassResult r;
        r.changed = !(before == g);
        r.changed_callees = std::move(changed_);
        return r;
    }

private:
    std::optional<RustType> type(const RustExpr& e, const TypeScope& scope) { return type_of(e, scope, p_); }

    /// Analyse `e` so that it produces a value of type `want`.
    void demand(RustExpr& e, const RustType& want, const TypeScope& scope, MutSets& s) {
        if (want.is_tuple()) {
            if (e.kind == K::tuple_lit && e.kids.size() == want.elems.size()) {
                for (std::size_t i = 0; i < e.kids.size(); ++i) demand(e.kids[i], want.elems[i], scope, s);
                return;
            }
            if (e.kind == K::var) {
                for (std::size_t i = 0; i < want.elems.size(); ++i)
                    if (is_mutborrow(want.elems[i]) == Mode::mut_) s.R.insert(path(e.name, i));
                return;
            }
            if (is_tail_carrier(e)) {
                tail(e, scope, s, [&](RustExpr& t, const TypeScope& sc, MutSets& ss) { demand(t, want, sc, ss); });
                return;
            }
        }
        infer(e, is_mutborrow(want), scope, s);
    }

    static bool is_tail_carrier(const RustExpr& e) {
        return e.kind == K::let || e.kind == K::let_tuple || e.kind == K::seq || e.kind == K::block || e.kind == K::if_;
    }

    template <class F>
    void tail(RustExpr& e, const TypeScope& scope, MutSets& s, F&& on_tail) {
        switch (e.kind) {
        case K::let: let_(e, scope, s, [&](RustExpr& b, const TypeScope& sc, MutSets& ss) { tail(b, sc, ss, on_tail); }); return;
        case K::let_tuple:
            let_tuple(e, scope, s, [&](RustExpr& b, const TypeScope& sc, MutSets& ss) { tail(b, sc, ss, on_tail); });
            return;
        case K::seq:
            // Backwards, so a shadowing let only sees the uses after it.
            if (!e.kids.empty()) tail(e.kids.back(), scope, s, on_tail);
            for (std::size_t i = e.kids.size(); i-- > 1;) infer(e.kids[i - 1], Mode::imm, scope, s);
            return;
        case K::block: tail(e.kids[0], scope, s, on_tail); return;
        case K::if_:
            infer(e.kids[0], Mode::imm, scope, s);
            for (std::size_t i = 1; i < e.kids.size(); ++i) tail(e.kids[i], scope, s, on_tail);
            return;
        default: on_tail(e, scope, s); return;
        }
    }

    template <class F>
    void let_(RustExpr& e, const TypeScope& scope, MutSets& s, F&& body) {
        const std::string& x = e.name;
        TypeScope inner = scope;
        std::optional<RustType> t = e.ty ? e.ty : type(e.kids[0], scope);
        if (t) inner.bind(x, *t);
        body(e.kids[1], inner, s);
        bool in_r = s.R.count(x) > 0 || (e.ty && is_mutborrow(*e.ty) == Mode::mut_);
        bool in_v = s.V.count(x) > 0;
        if (e.ty) {
            if (in_r) e.ty = make_mut(*e.ty);
            e.ty = mut_components(*e.ty, x, s);
        }
        RustType want = e.ty ? *e.ty : t ? mut_components(in_r ? make_mut(*t) : *t, x, s) : RustType::unit();
        forget(s, x);
        if (in_v && x != "_") e.mut_ = true;
        if (e.ty || t) demand(e.kids[0], want, scope, s);
        else infer(e.kids[0], in_r ? Mode::mut_ : Mode::imm, scope, s);
    }

    template <class F>
    void let_tuple(RustExpr& e, const TypeScope& scope, MutSets& s, F&& body) {
        TypeScope inner = scope;
        if (e.ty && e.ty->is_tuple())
            for (std::size_t i = 0; i < e.names.size() && i < e.ty->elems.size(); ++i) inner.bind(e.names[i], e.ty->elems[i]);
        body(e.kids[1], inner, s);
        bool any = false;
        for (std::size_t i = 0; i < e.names.size(); ++i) {
            bool m = s.R.count(e.names[i]) > 0;
            if (e.ty && i < e.ty->elems.size() && is_mutborrow(e.ty->elems[i]) == Mode::mut_) m = true;
            any = any || m;
            if (m && e.ty && i < e.ty->elems.size()) e.ty->elems[i] = make_mut(e.ty->elems[i]);
        }
        for (const auto& n : e.names) forget(s, n);
        RustExpr& rhs = e.kids[0];
        if (rhs.kind == K::method_call && rhs.name == "split_at") {
            // split_at_mut hands out two mutable halves
            if (any || rhs.mut_) {
                rhs.mut_ = true;
                if (e.ty)
                    for (auto& c : e.ty->elems) c = make_mut(c);
            }
            infer(rhs, rhs.mut_ ? Mode::mut_ : Mode::imm, scope, s);
            return;
        }
        if (e.ty) demand(rhs, *e.ty, scope, s);
        else infer(rhs, Mode::imm, scope, s);
    }

    /// Writes through `e` or produces a mutable borrow from it.
    void infer_var(const RustExpr& e, Mode m, const TypeScope& scope, MutSets& s) {
        if (m == Mode::imm) return;
        const RustType* t = scope.find(e.name);
        if (t && t->is_slice()) s.R.insert(e.name);
        else s.V.insert(e.name);
    }

    void infer_field(RustExpr& e, Mode m, const TypeScope& scope, MutSets& s) {
        if (m == Mode::imm) {
            infer(e.kids[0], Mode::imm, scope, s);
            return;
        }
        auto owner = type(e.kids[0], scope);
        std::optional<RustType> ft = owner ? field_type(*owner, e.name, p_) : std::nullopt;
        bool tuple_like = owner && (owner->is_tuple() || (owner->is_named() && p_.tuple_aliases.count(owner->name)));
        if (ft && ft->is_slice()) {
            if (!tuple_like)
                throw CompileError("mutable-field", e.loc,
                                   "write through borrowed field '" + e.name + "' of struct " + (owner ? owner->name : "?") +
                                       "; mark the struct owned or lower it to a tuple");
            if (e.kids[0].kind == K::var) {
                s.R.insert(path(e.kids[0].name, std::stoul(e.name)));
                return;
            }
        }
        infer(e.kids[0], Mode::mut_, scope, s);
    }

    void infer_call(RustExpr& e, Mode m, const TypeScope& scope, MutSets& s) {
        RustFn* callee = p_.find_fn(e.name);
        const RustFn* sig = callee ? callee : builtin_rust_fn(e.name);
        for (std::size_t i = 0; i < e.kids.size(); ++i) {
            if (sig && i < sig->params.size()) demand(e.kids[i], sig->params[i].second, scope, s);
            else infer(e.kids[i], Mode::imm, scope, s);
        }
        if (m == Mode::mut_ && callee && callee->ret.is_slice() && !callee->ret.mut_) {
            callee->ret = make_mut(callee->ret);
            changed_.insert(static_cast<std::size_t>(callee - p_.fns.data()));
        }
    }

    void infer(RustExpr& e, Mode m, const TypeScope& scope, MutSets& s) {
        switch (e.kind) {
        case K::var: infer_var(e, m, scope, s); return;
        case K::let:
            let_(e, scope, s, [&](RustExpr& b, const TypeScope& sc, MutSets& ss) { infer(b, m, sc, ss); });
            return;
        case K::let_tuple:
            let_tuple(e, scope, s, [&](RustExpr& b, const TypeScope& sc, MutSets& ss) { infer(b, m, sc, ss); });
            return;
        case K::seq:
            if (!e.kids.empty()) infer(e.kids.back(), m, scope, s);
            for (std::size_t i = e.kids.size(); i-- > 1;) infer(e.kids[i - 1], Mode::imm, scope, s);
            return;
        case K::block: infer(e.kids[0], m, scope, s); return;
        case K::if_:
            infer(e.kids[0], Mode::imm, scope, s);
            for (std::size_t i = 1; i < e.kids.size(); ++i) infer(e.kids[i], m, scope, s);
            return;
        case K::while_:
            for (auto& k : e.kids) infer(k, Mode::imm, scope, s);
            return;
        case K::return_:
            if (!e.kids.empty()) demand(e.kids[0], ret_, scope, s);
            return;
        case K::borrow:
            if (m == Mode::mut_) e.mut_ = true;
            infer(e.kids[0], e.mut_ ? Mode::mut_ : Mode::imm, scope, s);
            return;
        case K::slice_from_ref:
            if (m == Mode::mut_) e.mut_ = true;
            infer(e.kids[0], e.mut_ ? Mode::mut_ : Mode::imm, scope, s);
            return;
        case K::array_to_slice:
        case K::deref: infer(e.kids[0], m, scope, s); return;
        case K::index_range:
            infer(e.kids[0], m, scope, s);
            for (std::size_t i = 1; i < e.kids.size(); ++i) infer(e.kids[i], Mode::imm, scope, s);
            return;
        case K::index:
            infer(e.kids[0], m, scope, s);
            infer(e.kids[1], Mode::imm, scope, s);
            return;
        case K::field: infer_field(e, m, scope, s); return;
        case K::assign_var: {
            s.V.insert(e.name);
            const RustType* t = scope.find(e.name);
            if (t) demand(e.kids[0], s.R.count(e.name) ? make_mut(*t) : *t, scope, s);
            else infer(e.kids[0], Mode::imm, scope, s);
            return;
        }
        case K::assign_index:
            infer(e.kids[0], Mode::mut_, scope, s);
            infer(e.kids[1], Mode::imm, scope, s);
            infer(e.kids[2], Mode::imm, scope, s);
            return;
        case K::assign_field: {
            auto owner = type(e.kids[0], scope);
            std::optional<RustType> ft = owner ? field_type(*owner, e.name, p_) : std::nullopt;
            // The field itself is overwritten, so only the owner must be mutable.
            infer(e.kids[0], Mode::mut_, scope, s);
            if (ft) demand(e.kids[1], *ft, scope, s);
            else infer(e.kids[1], Mode::imm, scope, s);
            return;
        }
        case K::struct_lit: {
            const RustStruct* st = p_.find_struct(e.name);
            for (std::size_t i = 0; i < e.kids.size(); ++i) {
                std::optional<RustType> ft;
                if (st)
                    for (const auto& [n, t] : st->fields)
                        if (n == e.names[i]) ft = t;
                if (ft) demand(e.kids[i], *ft, scope, s);
                else infer(e.kids[i], Mode::imm, scope, s);
            }
            return;
        }
        case K::call: infer_call(e, m, scope, s); return;
        case K::method_call: {
            const std::string& name = e.name;
            Mode recv = Mode::imm;
            if (name == "fill" || name == "copy_from_slice") recv = Mode::mut_;
            if (name == "split_at") {
                if (m == Mode::mut_) e.mut_ = true;
                recv = e.mut_ ? Mode::mut_ : Mode::imm;
            }
            infer(e.kids[0], recv, scope, s);
            for (std::size_t i = 1; i < e.kids.size(); ++i) infer(e.kids[i], Mode::imm, scope, s);
            return;
        }
        default:
            for (auto& k : e.kids) infer(k, Mode::imm, scope, s);
            return;
        }
    }

    RustProgram& p_;
    std::size_t fn_;
    RustType ret_;
    std::set<std::size_t> changed_;
};

std::size_t count_type(const RustType& t) {
    std::size_t n = t.is_slice() && t.mut_ ? 1 : 0;
    for (const auto& e : t.elems) n += count_type(e);
    return n;
}

RustType clear_type(const RustType& t) {
    return map_type(t, [](RustType x) {
        x.mut_ = false;
        return x;
    });
}

RustType all_mut_type(const RustType& t) { return map_type(t, [](RustType x) { return make_mut(x); }); }

std::map<std::size_t, std::set<std::size_t>> callers(const RustProgram& p) {
    std::map<std::size_t, std::set<std::size_t>> out;
    for (std::size_t i = 0; i < p.fns.size(); ++i) {
        walk_pre(p.fns[i].body, [&](const RustExpr& e) {
            if (e.kind != K::call) return;
            for (std::size_t j = 0; j < p.fns.size(); ++j)
                if (p.fns[j].name == e.name) out[j].insert(i);
        });
    }
    return out;
}

} // namespace

MutPassResult infer_function(RustProgram& program, std::size_t fn_index) { return Inference(program, fn_index).run(); }

MutTrace infer_mutability(RustProgram& program) {
    MutTrace trace;
    auto deps = callers(program);
    std::deque<std::size_t> work;
    std::set<std::size_t> queued;
    auto push = [&](std::size_t i) {
        if (queued.insert(i).second) work.push_back(i);
    };
    for (std::size_t i = 0; i < program.fns.size(); ++i) push(i);
    trace.qualifier_counts.push_back(count_mut_qualifiers(program));
    while (!work.empty()) {
        std::size_t f = work.front();
        work.pop_front();
        queued.erase(f);
        MutPassResult r = infer_function(program, f);
        ++trace.passes;
        trace.qualifier_counts.push_back(count_mut_qualifiers(program));
        if (r.changed)
            for (std::size_t c : deps[f]) push(c);
        for (std::size_t g : r.changed_callees) {
            push(g);
            for (std::size_t c : deps[g]) push(c);
        }
    }
    return trace;
}

MutTrace infer_mutability_naive(RustProgram& program) {
    MutTrace trace;
    trace.qualifier_counts.push_back(count_mut_qualifiers(program));
    while (true) {
        RustProgram before = program;
        for (std::size_t i = 0; i < program.fns.size(); ++i) infer_function(program, i);
        ++trace.passes;
        trace.qualifier_counts.push_back(count_mut_qualifiers(program));
        if (program == before) break;
    }
    return trace;
}

std::size_t count_mut_qualifiers(const RustProgram& program) {
    std::size_t n = 0;
    for (const auto& f : program.fns) {
        for (const auto& [name, t] : f.params) n += count_type(t);
        for (bool b : f.mut_params) n += b ? 1 : 0;
        n += count_type(f.ret);
        walk_pre(f.body, [&](const RustExpr& e) {
            if (e.mut_) ++n;
            if (e.ty && e.kind != K::cast && e.kind != K::int_lit) n += count_type(*e.ty);
        });
    }
    return n;
}

void erase_mutability(RustProgram& program) {
    for (auto& f : program.fns) {
        for (auto& [name, t] : f.params) t = clear_type(t);
        f.mut_params.clear();
        f.ret = clear_type(f.ret);
        walk_post(f.body, [](RustExpr& e) { e.mut_ = false; });
        map_expr_types(f.body, [](RustType t) {
            t.mut_ = false;
            return t;
        });
    }
}

void make_all_mut(RustProgram& program) {
    for (auto& f : program.fns) {
        for (auto& [name, t] : f.params) t = all_mut_type(t);
        f.mut_params.assign(f.params.size(), true);
        f.ret = all_mut_type(f.ret);
        walk_post(f.body, [](RustExpr& e) {
            switch (e.kind) {
            case K::let:
                if (e.name != "_") e.mut_ = true;
                break;
            case K::borrow:
            case K::slice_from_ref: e.mut_ = true; break;
            case K::method_call:
                if (e.name == "split_at") e.mut_ = true;
                break;
            default: break;
            }
            if (e.ty && e.kind != K::cast && e.kind != K::int_lit) e.ty = all_mut_type(*e.ty);
        });
    }
}

} // namespace c2r
