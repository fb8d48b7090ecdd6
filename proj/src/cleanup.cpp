#include "c2r/cleanup.hpp"

#include <set>

namespace c2r {

namespace {

using K = RustExpr::Kind;

bool suffixed_literal(const RustExpr& e) {
    if (e.kind == K::int_lit) return e.suffixed;
    if (e.kind == K::bool_lit) return true;
    if (e.kind == K::array_repeat) return suffixed_literal(e.kids[0]);
    if (e.kind == K::array_list) {
        if (e.kids.empty()) return false;
        for (const auto& k : e.kids)
            if (!suffixed_literal(k)) return false;
        return true;
    }
    return false;
}

/// Whether the annotation of `let x: ty = rhs` is implied by `rhs` alone.
bool self_evident(const RustType& ty, const RustExpr& rhs, const RustProgram& p) {
    switch (rhs.kind) {
    case K::array_repeat:
    case K::array_list: return ty.is_array() && suffixed_literal(rhs);
    case K::vec_boxed: return ty.is_box() && suffixed_literal(rhs.kids[0]);
    case K::struct_lit: return ty.is_named() && ty.name == rhs.name;
    case K::call:
        if (const RustFn* f = p.find_fn(rhs.name)) return f->ret == ty;
        return false;
    default: return false;
    }
}

bool binds(const RustExpr& e) { return e.kind == K::let || e.kind == K::let_tuple; }

class Cleaner {
public:
    explicit Cleaner(const RustProgram& p) : p_(p) {}

    bool changed = false;

    void local(RustExpr& e) {
        for (auto& k : e.kids) local(k);
        switch (e.kind) {
        case K::deref:
            if (e.kids[0].kind == K::borrow) replace(e, std::move(e.kids[0].kids[0]));
            break;
        case K::index:
            if (e.kids[0].kind == K::borrow || e.kids[0].kind == K::array_to_slice) {
                RustExpr inner = std::move(e.kids[0].kids[0]);
                e.kids[0] = std::move(inner);
                changed = true;
            }
            break;
        case K::method_call:
            if (e.kids[0].kind == K::borrow) {
                RustExpr inner = std::move(e.kids[0].kids[0]);
                e.kids[0] = std::move(inner);
                changed = true;
            }
            break;
        case K::let:
            if (e.kids[1].kind == K::var && e.kids[1].name == e.name &&
                (!e.ty || self_evident(*e.ty, e.kids[0], p_))) {
                replace(e, std::move(e.kids[0]));
            } else if (e.ty && self_evident(*e.ty, e.kids[0], p_)) {
                e.ty.reset();
                changed = true;
            }
            break;
        case K::while_:
        case K::if_:
            for (std::size_t i = 1; i < e.kids.size(); ++i)
                if (e.kids[i].kind == K::block) replace(e.kids[i], std::move(e.kids[i].kids[0]));
            break;
        case K::seq:
            for (std::size_t i = 0; i < e.kids.size(); ++i) {
                bool nested = e.kids[i].kind == K::seq;
                if (!nested && (e.kids[i].kind != K::block || binds(e.kids[i].kids[0]))) continue;
                RustExpr inner = nested ? std::move(e.kids[i]) : std::move(e.kids[i].kids[0]);
                std::vector<RustExpr> spliced;
                if (inner.kind == K::seq) spliced = std::move(inner.kids);
                else spliced.push_back(std::move(inner));
                e.kids.erase(e.kids.begin() + static_cast<std::ptrdiff_t>(i));
                e.kids.insert(e.kids.begin() + static_cast<std::ptrdiff_t>(i), std::make_move_iterator(spliced.begin()),
                              std::make_move_iterator(spliced.end()));
                changed = true;
            }
            absorb_rest(e);
            if (e.kids.size() > 1 && e.kids.back().kind == K::unit) {
                e.kids.pop_back();
                changed = true;
            }
            if (e.kids.size() == 1) replace(e, std::move(e.kids[0]));
            break;
        default: break;
        }
    }

    /// Rewrites a trailing `return` of a function body into its value.
    void tail(RustExpr& e) {
        switch (e.kind) {
        case K::let:
        case K::let_tuple: tail(e.kids[1]); break;
        case K::seq:
            if (!e.kids.empty()) tail(e.kids.back());
            break;
        case K::block: tail(e.kids[0]); break;
        case K::if_:
            for (std::size_t i = 1; i < e.kids.size(); ++i) tail(e.kids[i]);
            break;
        case K::return_:
            replace(e, e.kids.empty() ? rx::unit() : std::move(e.kids[0]));
            break;
        default: break;
        }
    }

private:
    /// `{ let s = ..; a } b` becomes `let s = ..; a; b` when `b` does not see `s`.
    void absorb_rest(RustExpr& e) {
        for (std::size_t i = 0; i + 1 < e.kids.size(); ++i) {
            RustExpr& k = e.kids[i];
            RustExpr* chain = k.kind == K::block ? &k.kids[0] : &k;
            if (!binds(*chain)) continue;
            std::set<std::string> bound;
            walk_pre(*chain, [&](const RustExpr& n) {
                if (n.kind == K::let) bound.insert(n.name);
                if (n.kind == K::let_tuple) bound.insert(n.names.begin(), n.names.end());
            });
            bool clash = false;
            for (std::size_t j = i + 1; j < e.kids.size() && !clash; ++j)
                for (const auto& v : free_vars(e.kids[j]))
                    if (bound.count(v)) clash = true;
            if (clash) continue;
            std::vector<RustExpr> rest(std::make_move_iterator(e.kids.begin() + static_cast<std::ptrdiff_t>(i) + 1),
                                       std::make_move_iterator(e.kids.end()));
            e.kids.resize(i + 1);
            if (k.kind == K::block) replace(k, std::move(k.kids[0]));
            append(k, std::move(rest));
            changed = true;
            return;
        }
    }

    static void append(RustExpr& chain, std::vector<RustExpr> rest) {
        RustExpr* t = &chain;
        while (true) {
            if (binds(*t)) t = &t->kids[1];
            else if (t->kind == K::seq && !t->kids.empty() && binds(t->kids.back())) t = &t->kids.back();
            else break;
        }
        if (t->kind != K::seq) {
            RustExpr head = std::move(*t);
            *t = rx::seq({});
            t->kids.push_back(std::move(head));
        }
        for (auto& r : rest) t->kids.push_back(std::move(r));
    }

    void replace(RustExpr& e, RustExpr with) {
        RustExpr tmp = std::move(with);
        e = std::move(tmp);
        changed = true;
    }

    const RustProgram& p_;
};

} // namespace

void cleanup_program(RustProgram& program) {
    for (auto& f : program.fns) {
        while (true) {
            Cleaner c(program);
            RustExpr body = f.body;
            c.tail(body);
            c.local(body);
            if (!c.changed) break;
            f.body = std::move(body);
        }
    }
}

} // namespace c2r
