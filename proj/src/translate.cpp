#include "c2r/translate.hpp"

#include "c2r/c_frontend.hpp"
#include "c2r/rust_typing.hpp"
#include "c2r/split_tree.hpp"
#include "c2r/symbolic.hpp"
#include "c2r/traits.hpp"

#include <climits>
#include <deque>

namespace c2r {

std::string rust_ident(const std::string& c_name) {
    static const std::set<std::string> raw = {
        "as", "break", "const", "continue", "else", "enum", "extern", "false", "fn", "for", "if", "impl", "in",
        "let", "loop", "match", "mod", "move", "mut", "pub", "ref", "return", "static", "struct", "trait",
        "true", "type", "unsafe", "use", "where", "while", "async", "await", "dyn", "abstract", "become",
        "box", "do", "final", "macro", "override", "priv", "typeof", "unsized", "virtual", "yield", "try",
    };
    static const std::set<std::string> suffixed = {"self", "Self", "super", "crate", "_"};
    if (suffixed.count(c_name)) return c_name + "_";
    if (raw.count(c_name)) return "r#" + c_name;
    return c_name;
}

std::vector<RustStruct> translate_structs(const CProgram& program, const StructTable& structs) {
    std::vector<RustStruct> out;
    for (const auto& s : program.structs) {
        RustStruct rs;
        rs.name = rust_struct_name(s.name);
        rs.loc = s.loc;
        if (structs.needs_lifetime.count(s.name)) rs.lifetime = "'a";
        OwnershipClass cls = structs.classes.at(s.name);
        for (const auto& [f, t] : s.fields) rs.fields.emplace_back(rust_ident(f), translate_field_type(t, cls, structs));
        out.push_back(std::move(rs));
    }
    return out;
}

namespace {

using CK = CExpr::Kind;
using RK = RustExpr::Kind;

bool same(const RustType& a, const RustType& b) { return erase_annotations(a) == erase_annotations(b); }

std::string plain(const std::string& ident) { return ident.rfind("r#", 0) == 0 ? ident.substr(2) : ident; }

RustExpr usize_lit(uint64_t v) { return rx::int_lit(v, RustType::usize()); }

RustExpr suffixed(RustExpr e) {
    if (e.kind == RK::int_lit && e.ty) e.suffixed = true;
    return e;
}

RustExpr with_loc(RustExpr e, const SourceLoc& loc) {
    e.loc = loc;
    return e;
}

struct FnSig {
    std::vector<RustType> params;
    RustType ret;
};

/// One statement-level item of a block before folding into nested lets.
struct Piece {
    enum class Kind { let, let_tuple, expr };
    Kind kind = Kind::expr;
    std::string name;
    std::vector<std::string> names;
    std::optional<RustType> ty;
    RustExpr value;
    SourceLoc loc;

    static Piece let(std::string n, RustType t, RustExpr v, SourceLoc l) {
        return {Kind::let, std::move(n), {}, std::move(t), std::move(v), std::move(l)};
    }
    static Piece expr(RustExpr v) {
        SourceLoc l = v.loc;
        return {Kind::expr, {}, {}, std::nullopt, std::move(v), std::move(l)};
    }
};
using Pieces = std::vector<Piece>;

RustExpr fold(Pieces pieces) {
    RustExpr tail = rx::unit();
    for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) {
        Piece& p = *it;
        switch (p.kind) {
        case Piece::Kind::let: tail = rx::let(p.name, p.ty, std::move(p.value), std::move(tail), p.loc); break;
        case Piece::Kind::let_tuple:
            tail = rx::let_tuple(p.names, *p.ty, std::move(p.value), std::move(tail), p.loc);
            break;
        case Piece::Kind::expr:
            if (p.value.kind == RK::unit) break;
            if (tail.kind == RK::unit) tail = std::move(p.value);
            else if (tail.kind == RK::seq) tail.kids.insert(tail.kids.begin(), std::move(p.value));
            else tail = rx::seq({std::move(p.value), std::move(tail)});
            break;
        }
    }
    return tail;
}

/// Whole-program facts shared by every function translation.
struct Context {
    const CProgram& program;
    const StructTable& structs;
    DiagnosticSink& sink;
    std::vector<RustStruct> rust_structs;
    std::map<std::string, std::string> rust_to_c;  // struct names
    std::map<std::string, FnSig> sigs;
    TraitFacts facts;
    std::set<std::string> fn_names;

    RustType rust(const CType& t) const { return translate_type(t, Flavor::by_default(), structs); }

    const RustStruct& rstruct(const std::string& rust_name) const {
        for (const auto& s : rust_structs)
            if (s.name == rust_name) return s;
        throw CompileError("internal", {}, "no Rust definition for struct " + rust_name);
    }

    bool is_copy(const RustType& t) const { return type_has_trait(t, Trait::copy, facts); }

    FnSig sig(const std::string& name) const {
        auto it = sigs.find(name);
        if (it != sigs.end()) return it->second;
        if (const RustFn* b = builtin_rust_fn(name)) {
            FnSig s;
            for (const auto& [n, t] : b->params) s.params.push_back(t);
            s.ret = b->ret;
            return s;
        }
        throw CompileError("internal", {}, "no signature for function " + name);
    }
};

struct Binding {
    std::string c_name;
    std::string rust;
    CType ctype;
    RustType ty;
    bool live = true;
    int loop_depth = 0;
    // Pointer views: base binding and absolute offset into it.
    bool is_view = false;
    int base = -1;
    SymbolicOffset offset;
    int seq = 0;
    int generation = 0;
};

struct BaseState {
    SplitTree tree;
    bool shadowed = false;
    int generation = 0;
};

struct Typed {
    RustExpr e;
    RustType t;
};

/// Pointer expression decomposed as `root + extra`.
struct PtrRef {
    const CExpr* root = nullptr;
    int base = -1;   // binding id of the root variable's base
    int view = -1;   // binding id when the root is a pointer view
    SymbolicOffset extra;
};

/// A slice place and the offset of the pointer inside it.
struct SliceRef {
    RustExpr base;
    RustType type;
    SymbolicOffset rel;
};

class FnTranslator {
public:
    FnTranslator(Context& ctx, const CFunction& fn, RustFn& out) : ctx_(ctx), fn_(fn), out_(out) {}

    void run() {
        for (const auto& f : ctx_.fn_names) used_.insert(plain(rust_ident(f)));
        used_.insert(plain(rust_ident(fn_.name)));
        for (const auto& p : fn_.params) used_.insert(plain(rust_ident(p.name)));
        visit_stmts(fn_.body, [&](const CStmt& s) {
            if (s.kind == CStmt::Kind::decl_var || s.kind == CStmt::Kind::decl_array)
                used_.insert(plain(rust_ident(s.name)));
        });

        if (!fn_.ret.is_void() && !ends_in_return(fn_.body))
            throw CompileError("missing-return", fn_.loc, "function '" + fn_.name + "' does not end with a return");

        ret_ = out_.ret;
        scopes_.emplace_back();
        for (std::size_t i = 0; i < fn_.params.size(); ++i) {
            Binding b;
            b.c_name = fn_.params[i].name;
            b.rust = rust_ident(b.c_name);
            b.ctype = fn_.params[i].type;
            b.ty = out_.params[i].second;
            bind(std::move(b));
        }
        Pieces pieces;
        for (std::size_t i = 0; i < fn_.body.size();) i = stmt(fn_.body, i, pieces);
        out_.body = fold(std::move(pieces));
    }

private:
    static bool ends_in_return(const std::vector<CStmt>& body) {
        if (body.empty()) return false;
        const CStmt& last = body.back();
        switch (last.kind) {
        case CStmt::Kind::ret: return true;
        case CStmt::Kind::if_: return ends_in_return(last.body) && ends_in_return(last.else_body);
        case CStmt::Kind::block: return ends_in_return(last.body);
        default: return false;
        }
    }

    // ---- names and bindings ----

    std::string fresh(const std::string& base) {
        std::string b = plain(base);
        if (used_.insert(b).second) return b;
        for (int k = 2;; ++k) {
            std::string n = b + std::to_string(k);
            if (used_.insert(n).second) return n;
        }
    }

    std::pair<std::string, std::string> fresh_pair(const std::string& base) {
        std::string b = plain(base);
        for (int k = 1;; ++k) {
            std::string suffix = k == 1 ? "" : std::to_string(k);
            std::string l = b + "_l" + suffix, r = b + "_r" + suffix;
            if (!used_.count(l) && !used_.count(r)) {
                used_.insert(l);
                used_.insert(r);
                return {l, r};
            }
        }
    }

    int bind(Binding b) {
        b.loop_depth = loop_depth_;
        int id = static_cast<int>(bindings_.size());
        scopes_.back()[b.c_name] = id;
        bindings_.push_back(std::move(b));
        return id;
    }

    int find(const std::string& c_name) const {
        for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
            auto f = it->find(c_name);
            if (f != it->end()) return f->second;
        }
        return -1;
    }

    int lookup(const std::string& c_name, const SourceLoc& loc) const {
        int id = find(c_name);
        if (id < 0) throw CompileError("internal", loc, "unbound variable '" + c_name + "' after resolution");
        return id;
    }

    void require_live(int id, const SourceLoc& loc) const {
        const Binding& b = bindings_[static_cast<std::size_t>(id)];
        if (!b.live) throw CompileError("use-after-move", loc, "use of '" + b.c_name + "' after it was moved");
    }

    void kill(int id, const SourceLoc& loc) {
        Binding& b = bindings_[static_cast<std::size_t>(id)];
        if (b.loop_depth < loop_depth_)
            throw CompileError("use-after-move", loc,
                               "'" + b.c_name + "' is moved inside a loop and would be used again by the next iteration");
        b.live = false;
    }

    Binding& at(int id) { return bindings_[static_cast<std::size_t>(id)]; }

    // ---- split trees ----

    BaseState* state(int id) {
        auto it = bases_.find(id);
        return it == bases_.end() ? nullptr : &it->second;
    }

    BaseState& state_for(int id) {
        auto it = bases_.find(id);
        if (it == bases_.end()) it = bases_.emplace(id, BaseState{SplitTree(at(id).rust), false, 0}).first;
        return it->second;
    }

    RustType value_type(int id) {
        const Binding& b = at(id);
        BaseState* st = state(id);
        if (st && st->shadowed) return RustType::slice(b.ty.elem());
        return b.ty;
    }

    RustType elem_of_base(int id) {
        const RustType& t = at(id).ty;
        if (t.is_array() || t.is_slice() || t.is_box()) return t.elem();
        throw CompileError("internal", {}, "pointer arithmetic on non-indexable '" + at(id).c_name + "'");
    }

    void reset_base(int id) {
        BaseState* st = state(id);
        if (!st || st->tree.is_singleton()) return;
        st->tree.reset();
        ++st->generation;
    }

    void require_fresh_view(int view, const SourceLoc& loc) {
        const Binding& v = at(view);
        BaseState* st = state(v.base);
        if (!st || st->generation != v.generation)
            throw CompileError("lookup-error", loc,
                               "pointer '" + v.c_name + "' into '" + at(v.base).c_name +
                                   "' is used after the split tree of its base was reset");
    }

    /// Splits the base so that a slice starts at `abs`; returns the insertion sequence.
    int insert(int base, const SymbolicOffset& abs, const std::string& hint, const SourceLoc& loc, Pieces& out) {
        BaseState& st = state_for(base);
        int seq = st.tree.next_seq();
        auto step = st.tree.insert(abs, seq, [&] { return fresh_pair(hint); });
        if (!step) return seq;
        const Binding& b = at(base);
        RustType elem = elem_of_base(base);
        if (b.ty.is_array() && !st.shadowed) {
            RustExpr whole = rx::borrow(rx::make(RK::array_to_slice, {rx::var(b.rust, loc)}));
            out.push_back(Piece::let(b.rust, RustType::slice(elem), std::move(whole), loc));
            st.shadowed = true;
        }
        RustType sl = RustType::slice(elem);
        Piece p;
        p.kind = Piece::Kind::let_tuple;
        p.names = {step->left, step->right};
        p.ty = RustType::tuple({sl, sl});
        p.value = rx::method(rx::var(step->parent, loc), "split_at", {render(step->rel, loc)});
        p.loc = loc;
        out.push_back(std::move(p));
        if (step->fallback && warned_.insert(std::to_string(base) + "@" + to_string(abs)).second)
            ctx_.sink.warn("split-fallback", loc,
                           "offset " + to_string(abs) + " of '" + b.c_name +
                               "' cannot be ordered against earlier split points; assuming offsets increase in "
                               "program order");
        return seq;
    }

    void check_not_in_offsets(const std::string& c_name, const SourceLoc& loc) {
        for (const auto& scope : scopes_) {
            for (const auto& [n, id] : scope) {
                const Binding& b = at(id);
                if (!b.is_view || !b.live) continue;
                BaseState* st = state(b.base);
                if (st && st->generation == b.generation && b.offset.mentions(c_name))
                    throw CompileError("subset-error", loc,
                                       "'" + c_name + "' is assigned while pointer '" + b.c_name + "' depends on it");
            }
        }
        for (const auto& [id, st] : bases_) {
            for (std::size_t i = 0; i < st.tree.size(); ++i) {
                if (st.tree.node(static_cast<int>(i)).origin.mentions(c_name))
                    throw CompileError("subset-error", loc,
                                       "'" + c_name + "' is assigned while '" + at(id).c_name +
                                           "' is split at an offset that depends on it");
            }
        }
    }

    // ---- offsets ----

    SymbolicOffset linear(const CExpr& e) {
        try {
            return sym_normalize(e);
        } catch (const CompileError& err) {
            Diagnostic d = err.diagnostic();
            if (d.loc == SourceLoc{}) d.loc = e.loc;
            throw CompileError(d);
        }
    }

    std::optional<SymbolicOffset> try_linear(const CExpr& e) {
        try {
            SymbolicOffset o = sym_normalize(e);
            for (const auto& [v, c] : o.terms)
                if (find(v) < 0) return std::nullopt;
            return o;
        } catch (const CompileError&) {
            return std::nullopt;
        }
    }

    RustExpr offset_var(const std::string& c_name, const SourceLoc& loc) {
        int id = lookup(c_name, loc);
        require_live(id, loc);
        const Binding& b = at(id);
        RustExpr v = rx::var(b.rust, loc);
        if (b.ctype.is_base() && b.ctype.base == BaseType::usize) return v;
        return rx::cast(std::move(v), RustType::usize());
    }

    /// `lead + o` as a usize expression; `lead` may be absent.
    RustExpr render(const SymbolicOffset& o, const SourceLoc& loc, std::optional<RustExpr> lead = std::nullopt) {
        std::optional<RustExpr> acc = std::move(lead);
        auto add = [&](std::string op, RustExpr t) {
            if (!acc) {
                if (op == "-") t = rx::binop("-", usize_lit(0), std::move(t));
                acc = std::move(t);
            } else {
                acc = rx::binop(std::move(op), std::move(*acc), std::move(t));
            }
        };
        auto term = [&](const std::string& v, int64_t c) {
            RustExpr x = offset_var(v, loc);
            uint64_t a = static_cast<uint64_t>(c < 0 ? -c : c);
            return a == 1 ? x : rx::binop("*", usize_lit(a), std::move(x));
        };
        for (const auto& [v, c] : o.terms)
            if (c > 0) add("+", term(v, c));
        if (o.constant > 0) add("+", usize_lit(static_cast<uint64_t>(o.constant)));
        for (const auto& [v, c] : o.terms)
            if (c < 0) add("-", term(v, c));
        if (o.constant < 0) add("-", usize_lit(static_cast<uint64_t>(-o.constant)));
        if (!acc) return usize_lit(0);
        return std::move(*acc);
    }

    RustExpr to_usize(RustExpr e, const CExpr& c) {
        if (c.type && c.type->is_base() && c.type->base == BaseType::usize) return e;
        if (e.kind == RK::int_lit) {
            e.ty = RustType::usize();
            e.suffixed = false;
            return e;
        }
        return rx::cast(std::move(e), RustType::usize());
    }

    /// Index expression inside a leaf given the leaf-relative offset of the access.
    RustExpr rel_index(const SymbolicOffset& rel, const std::optional<SymbolicOffset>& idx_sym, RustExpr idx,
                       const SourceLoc& loc) {
        if (idx_sym && rel.is_constant()) {
            if (rel.constant < 0)
                throw CompileError("overlap-error", loc, "access lands before the start of its slice");
            return usize_lit(static_cast<uint64_t>(rel.constant));
        }
        SymbolicOffset part = idx_sym ? rel - *idx_sym : rel;
        if (part == SymbolicOffset{}) return idx;
        return render(part, loc, std::move(idx));
    }

    PtrRef pointer_ref(const CExpr& e) {
        if (e.kind == CK::binop && e.op == "+" && e.kids[0].type && e.kids[0].type->is_indexable()) {
            PtrRef r = pointer_ref(e.kids[0]);
            r.extra = r.extra + linear(e.kids[1]);
            return r;
        }
        PtrRef r;
        r.root = &e;
        if (e.kind == CK::var) {
            int id = lookup(e.name, e.loc);
            if (at(id).is_view) {
                r.view = id;
                r.base = at(id).base;
            } else if (at(id).ctype.is_indexable()) {
                r.base = id;
            }
        }
        return r;
    }

    /// Slice place a pointer expression designates, plus its offset in that place.
    SliceRef pointer_slice(const CExpr& e, Pieces& pre) {
        PtrRef r = pointer_ref(e);
        if (r.base < 0) {
            Typed p = place(*r.root, pre);
            return {std::move(p.e), std::move(p.t), r.extra};
        }
        require_live(r.base, e.loc);
        if (r.view >= 0) {
            require_live(r.view, r.root->loc);
            require_fresh_view(r.view, r.root->loc);
        }
        if (r.view < 0 && r.extra == SymbolicOffset{}) {
            reset_base(r.base);
            return {rx::var(at(r.base).rust, r.root->loc), value_type(r.base), {}};
        }
        SymbolicOffset ptr_off;
        int seq;
        if (r.extra == SymbolicOffset{}) {
            ptr_off = at(r.view).offset;
            seq = at(r.view).seq;
        } else {
            ptr_off = (r.view >= 0 ? at(r.view).offset : SymbolicOffset{}) + r.extra;
            std::string hint = at(r.view >= 0 ? r.view : r.base).rust;
            seq = insert(r.base, ptr_off, hint, e.loc, pre);
        }
        LeafAccess la = tree_lookup(state_for(r.base).tree, ptr_off, seq, {}, false, e.loc);
        return {rx::var(la.leaf, e.loc), RustType::slice(elem_of_base(r.base)), la.rel};
    }

    /// Value of a pointer expression as a slice (or the root's own type when unsplit).
    Typed pointer_value(const CExpr& e, Pieces& pre) {
        SliceRef s = pointer_slice(e, pre);
        if (s.rel == SymbolicOffset{}) return {std::move(s.base), std::move(s.type)};
        RustType elem = *element_type(s.type);
        RustExpr range = rx::make(RK::index_range, {std::move(s.base), render(s.rel, e.loc), rx::unit()});
        return {rx::borrow(std::move(range)), RustType::slice(elem)};
    }

    /// `ptr[idx]` as an index place; `idx == nullptr` means `*ptr`.
    Typed element(const CExpr& ptr, const CExpr* idx, Pieces& pre, const SourceLoc& loc) {
        std::optional<SymbolicOffset> idx_sym;
        RustExpr idx_expr;
        if (!idx) {
            idx_sym = SymbolicOffset{};
            idx_expr = usize_lit(0);
        } else {
            idx_sym = try_linear(*idx);
            idx_expr = to_usize(scalar(*idx, pre), *idx);
        }
        PtrRef r = pointer_ref(ptr);
        if (r.base < 0) {
            Typed p = place(*r.root, pre);
            RustType elem = *element_type(p.t);
            SymbolicOffset rel = r.extra + (idx_sym ? *idx_sym : SymbolicOffset{});
            return {rx::index(std::move(p.e), rel_index(rel, idx_sym, std::move(idx_expr), loc)), elem};
        }
        require_live(r.base, ptr.loc);
        if (r.view >= 0) {
            require_live(r.view, r.root->loc);
            require_fresh_view(r.view, r.root->loc);
        }
        RustType elem = elem_of_base(r.base);
        const Binding& v = at(r.view >= 0 ? r.view : r.base);
        SymbolicOffset ptr_off = r.view >= 0 ? v.offset : SymbolicOffset{};
        BaseState* st = state(r.base);
        if (!st || st->tree.is_singleton()) {
            SymbolicOffset rel = ptr_off + r.extra + (idx_sym ? *idx_sym : SymbolicOffset{});
            return {rx::index(rx::var(at(r.base).rust, r.root->loc), rel_index(rel, idx_sym, std::move(idx_expr), loc)),
                    elem};
        }
        int seq = r.view >= 0 ? v.seq : INT_MAX;
        SymbolicOffset access = r.extra + (idx_sym ? *idx_sym : SymbolicOffset{});
        if (r.view < 0 && (!idx_sym || !st->tree.leaf_for_exact(access)) &&
            warned_.insert(std::to_string(r.base) + "@" + to_string(access)).second)
            ctx_.sink.warn("split-fallback", loc,
                           "cannot tell which slice of '" + at(r.base).c_name + "' holds offset " + to_string(access) +
                               "; assuming offsets increase in program order");
        LeafAccess la = tree_lookup(st->tree, ptr_off, seq, access, r.view < 0, loc);
        return {rx::index(rx::var(la.leaf, r.root->loc), rel_index(la.rel, idx_sym, std::move(idx_expr), loc)), elem};
    }

    // ---- places and values ----

    Typed place(const CExpr& e, Pieces& pre) {
        switch (e.kind) {
        case CK::var: {
            int id = lookup(e.name, e.loc);
            require_live(id, e.loc);
            if (at(id).is_view) return pointer_value(e, pre);
            return {rx::var(at(id).rust, e.loc), value_type(id)};
        }
        case CK::field: {
            Typed base = place(e.kids[0], pre);
            if (!base.t.is_named()) throw CompileError("internal", e.loc, "field access on " + print_type(base.t));
            const RustStruct& rs = ctx_.rstruct(base.t.name);
            std::string fname = rust_ident(e.name);
            for (const auto& [n, t] : rs.fields)
                if (n == fname) return {rx::field(std::move(base.e), fname, rs.name), t};
            throw CompileError("internal", e.loc, "unknown field " + e.name);
        }
        case CK::index: return element(e.kids[0], &e.kids[1], pre, e.loc);
        case CK::deref: return element(e.kids[0], nullptr, pre, e.loc);
        case CK::call: {
            FnSig sig = ctx_.sig(e.name);
            RustExpr c = call(e, nullptr, pre);
            std::string tmp = fresh(e.name + "_res");
            pre.push_back(Piece::let(tmp, sig.ret, std::move(c), e.loc));
            return {rx::var(tmp, e.loc), sig.ret};
        }
        case CK::binop:
            if (e.type && e.type->is_pointer()) return pointer_value(e, pre);
            break;
        default: break;
        }
        throw CompileError("subset-error", e.loc, "expression cannot be used as a memory location");
    }

    RustExpr coerce(Typed v, const RustType& want, int kill_id, const SourceLoc& loc) {
        const RustType& have = v.t;
        if (same(have, want)) {
            if (kill_id >= 0 && !ctx_.is_copy(have)) kill(kill_id, loc);
            return std::move(v.e);
        }
        bool elems_match = (have.is_array() || have.is_slice() || have.is_box()) &&
                           (want.is_slice() || want.is_box()) && same(have.elem(), want.elem());
        if (elems_match && want.is_slice()) {
            if (have.is_array()) return rx::borrow(rx::make(RK::array_to_slice, {std::move(v.e)}));
            if (have.is_box()) return rx::borrow(std::move(v.e));
        }
        if (elems_match && want.is_box()) {
            if (have.is_slice()) {
                if (kill_id >= 0) kill(kill_id, loc);
                return rx::method(rx::deref(std::move(v.e)), "into", {});
            }
            if (have.is_array()) {
                if (kill_id >= 0) kill(kill_id, loc);
                return rx::make(RK::box_new, {std::move(v.e)});
            }
        }
        throw CompileError("coercion-error", loc,
                           "cannot convert " + print_type(have) + " to " + print_type(want));
    }

    RustExpr call(const CExpr& e, const RustType* want, Pieces& pre) {
        FnSig sig = ctx_.sig(e.name);
        std::vector<RustExpr> args;
        for (std::size_t i = 0; i < e.kids.size(); ++i) args.push_back(value(e.kids[i], sig.params[i], pre));
        RustExpr c = rx::call(rust_ident(e.name), std::move(args), e.loc);
        if (!want || sig.ret.is_unit() || same(sig.ret, *want)) return c;
        std::string tmp = fresh(e.name + "_res");
        pre.push_back(Piece::let(tmp, sig.ret, std::move(c), e.loc));
        return coerce({rx::var(tmp, e.loc), sig.ret}, *want, -1, e.loc);
    }

    RustExpr malloc_expr(const CExpr& e, Pieces& pre, std::optional<RustExpr> fill = std::nullopt) {
        RustType elem = ctx_.rust(e.type->elem());
        RustExpr init = fill ? std::move(*fill) : default_value(elem, e.loc);
        RustExpr count = to_usize(scalar(e.kids[0], pre), e.kids[0]);
        return with_loc(rx::make(RK::vec_boxed, {suffixed(std::move(init)), std::move(count)}), e.loc);
    }

    RustExpr value(const CExpr& e, const RustType& want, Pieces& pre) {
        const CType& ct = *e.type;
        if (ct.is_base()) return scalar(e, pre);
        switch (e.kind) {
        case CK::var: {
            int id = lookup(e.name, e.loc);
            require_live(id, e.loc);
            if (at(id).is_view) return coerce(pointer_value(e, pre), want, id, e.loc);
            reset_base(id);
            return coerce({rx::var(at(id).rust, e.loc), value_type(id)}, want, id, e.loc);
        }
        case CK::binop: return coerce(pointer_value(e, pre), want, -1, e.loc);
        case CK::call: return call(e, &want, pre);
        case CK::malloc: return coerce({malloc_expr(e, pre), RustType::boxed(ctx_.rust(ct.elem()))}, want, -1, e.loc);
        case CK::addr_of: {
            Typed p = place(e.kids[0], pre);
            RustExpr s = rx::make(RK::slice_from_ref, {std::move(p.e)});
            if (p.t.is_named()) s.aux = p.t.name;
            return coerce({std::move(s), RustType::slice(p.t)}, want, -1, e.loc);
        }
        case CK::field:
        case CK::index:
        case CK::deref: return coerce(place(e, pre), want, -1, e.loc);
        case CK::struct_init: return struct_literal(e, pre);
        default: break;
        }
        throw CompileError("internal", e.loc, "unexpected expression of type " + to_string(ct));
    }

    RustExpr struct_literal(const CExpr& e, Pieces& pre) {
        const CStruct* cs = ctx_.program.find_struct(e.type->name);
        const RustStruct& rs = ctx_.rstruct(rust_struct_name(cs->name));
        RustExpr lit = rx::make(RK::struct_lit);
        lit.name = rs.name;
        lit.loc = e.loc;
        for (std::size_t i = 0; i < cs->fields.size(); ++i) {
            const auto& [fname, ft] = cs->fields[i];
            const RustType& rt = rs.fields[i].second;
            lit.names.push_back(rs.fields[i].first);
            auto it = std::find(e.field_names.begin(), e.field_names.end(), fname);
            if (it == e.field_names.end()) {
                lit.kids.push_back(default_value(rt, e.loc));
            } else {
                lit.kids.push_back(value(e.kids[static_cast<std::size_t>(it - e.field_names.begin())], rt, pre));
            }
        }
        return lit;
    }

    RustExpr scalar(const CExpr& e, Pieces& pre) {
        switch (e.kind) {
        case CK::int_lit: return with_loc(rx::int_lit(e.value, ctx_.rust(*e.type)), e.loc);
        case CK::bool_lit: return with_loc(rx::bool_lit(e.value != 0), e.loc);
        case CK::var: {
            int id = lookup(e.name, e.loc);
            require_live(id, e.loc);
            return rx::var(at(id).rust, e.loc);
        }
        case CK::index:
        case CK::deref:
        case CK::field: return place(e, pre).e;
        case CK::call: return call(e, nullptr, pre);
        case CK::cast: {
            RustExpr inner = scalar(e.kids[0], pre);
            return with_loc(rx::cast(suffixed(std::move(inner)), ctx_.rust(e.target)), e.loc);
        }
        case CK::unop: {
            RustExpr inner = scalar(e.kids[0], pre);
            if (e.op == "-" && !is_signed(e.type->base))
                return with_loc(rx::method(suffixed(std::move(inner)), "wrapping_neg", {}), e.loc);
            RustExpr u = rx::make(RK::unop, {std::move(inner)});
            u.name = e.op == "~" ? "!" : e.op;
            u.loc = e.loc;
            return u;
        }
        case CK::binop: {
            RustExpr l = scalar(e.kids[0], pre);
            RustExpr r;
            if (e.op == "&&" || e.op == "||") {
                Pieces rp;
                r = scalar(e.kids[1], rp);
                if (!rp.empty())
                    throw CompileError("subset-error", e.kids[1].loc,
                                       "right operand of " + e.op + " needs a temporary binding; hoist it into a local");
            } else {
                r = scalar(e.kids[1], pre);
            }
            bool wrap = (e.op == "+" || e.op == "-" || e.op == "*") && e.type->is_integer() && !is_signed(e.type->base);
            if (wrap) {
                std::string m = e.op == "+" ? "wrapping_add" : e.op == "-" ? "wrapping_sub" : "wrapping_mul";
                return with_loc(rx::method(suffixed(std::move(l)), m, {std::move(r)}), e.loc);
            }
            return with_loc(rx::binop(e.op, std::move(l), std::move(r)), e.loc);
        }
        default: break;
        }
        throw CompileError("internal", e.loc, "unexpected scalar expression");
    }

    RustExpr default_value(const RustType& t, const SourceLoc& loc) {
        switch (t.kind) {
        case RustType::Kind::base:
            if (t.name == "bool") return rx::bool_lit(false);
            return rx::int_lit(0, t);
        case RustType::Kind::unit: return rx::unit();
        case RustType::Kind::array: {
            RustExpr d = suffixed(default_value(t.elem(), loc));
            if (ctx_.is_copy(t.elem())) return rx::make(RK::array_repeat, {std::move(d), usize_lit(t.len)});
            RustExpr list = rx::make(RK::array_list);
            for (uint64_t i = 0; i < t.len; ++i) list.kids.push_back(d);
            return list;
        }
        case RustType::Kind::slice_ref: {
            RustExpr empty = rx::make(RK::array_list);
            empty.ty = RustType::array(t.elem(), 0);
            return rx::borrow(std::move(empty));
        }
        case RustType::Kind::boxed_slice:
            return rx::make(RK::vec_boxed, {suffixed(default_value(t.elem(), loc)), usize_lit(0)});
        case RustType::Kind::named: {
            const RustStruct& rs = ctx_.rstruct(t.name);
            RustExpr lit = rx::make(RK::struct_lit);
            lit.name = rs.name;
            for (const auto& [n, ft] : rs.fields) {
                lit.names.push_back(n);
                lit.kids.push_back(default_value(ft, loc));
            }
            return lit;
        }
        case RustType::Kind::tuple: {
            RustExpr lit = rx::make(RK::tuple_lit);
            for (const auto& e : t.elems) lit.kids.push_back(default_value(e, loc));
            return lit;
        }
        case RustType::Kind::function: break;
        }
        throw CompileError("internal", loc, "no default value for " + print_type(t));
    }

    // ---- statements ----

    RustExpr block_expr(const std::vector<CStmt>& body) {
        if (body.size() == 1 && body[0].kind == CStmt::Kind::block) return block_expr(body[0].body);
        scopes_.emplace_back();
        std::map<int, BaseState> saved = bases_;
        Pieces pieces;
        for (std::size_t i = 0; i < body.size();) i = stmt(body, i, pieces);
        scopes_.pop_back();
        restore(std::move(saved));
        return fold(std::move(pieces));
    }

    // Splits made inside a block end with it; a reset inside it invalidates the outer splits too.
    void restore(std::map<int, BaseState> saved) {
        for (auto& [id, st] : saved) {
            auto it = bases_.find(id);
            if (it != bases_.end() && it->second.generation != st.generation) {
                st.tree.reset();
                st.generation = it->second.generation;
            }
        }
        bases_ = std::move(saved);
    }

    static bool mentions(const CExpr& e, const std::string& name) {
        bool found = false;
        visit_expr(e, [&](const CExpr& x) {
            if (x.kind == CK::var && x.name == name) found = true;
        });
        return found;
    }

    static bool has_call(const CExpr& e) {
        bool found = false;
        visit_expr(e, [&](const CExpr& x) {
            if (x.kind == CK::call || x.kind == CK::malloc) found = true;
        });
        return found;
    }

    static bool is_var(const CExpr& e, const std::string& name) { return e.kind == CK::var && e.name == name; }

    /// `for (i = 0; i < bound; i++) x[i] = e;` with `e` independent of `i` and `x`.
    static const CExpr* fill_loop(const CStmt& s, const std::string& arr, const std::function<bool(const CExpr&)>& bound) {
        if (s.kind != CStmt::Kind::for_ || s.for_init.size() != 1 || s.for_step.size() != 1 || s.body.size() != 1)
            return nullptr;
        const CStmt& init = s.for_init[0];
        if (init.kind != CStmt::Kind::decl_var || init.exprs.empty() || !init.type.is_integer()) return nullptr;
        if (init.exprs[0].kind != CK::int_lit || init.exprs[0].value != 0) return nullptr;
        const std::string& i = init.name;
        const CExpr& cond = s.exprs[0];
        if (cond.kind != CK::binop || cond.op != "<" || !is_var(cond.kids[0], i) || !bound(cond.kids[1])) return nullptr;
        const CStmt& step = s.for_step[0];
        if (step.kind != CStmt::Kind::assign || !is_var(step.exprs[0], i)) return nullptr;
        const CExpr& inc = step.exprs[1];
        if (inc.kind != CK::binop || inc.op != "+" || !is_var(inc.kids[0], i) || inc.kids[1].kind != CK::int_lit ||
            inc.kids[1].value != 1)
            return nullptr;
        const CStmt& body = s.body[0];
        if (body.kind != CStmt::Kind::assign) return nullptr;
        const CExpr& lhs = body.exprs[0];
        if (lhs.kind != CK::index || !is_var(lhs.kids[0], arr) || !is_var(lhs.kids[1], i)) return nullptr;
        const CExpr& v = body.exprs[1];
        if (mentions(v, i) || mentions(v, arr) || has_call(v)) return nullptr;
        return &v;
    }

    /// `memset(x, v, n)` right after the declaration of `x`, with `bound(n)`.
    static const CExpr* fill_memset(const CStmt& s, const std::string& arr, const std::function<bool(const CExpr&)>& bound) {
        if (s.kind != CStmt::Kind::memset || !is_var(s.exprs[0], arr) || !bound(s.exprs[2])) return nullptr;
        if (has_call(s.exprs[1])) return nullptr;
        return &s.exprs[1];
    }

    static bool all_zero(const std::vector<CExpr>& inits) {
        for (const auto& e : inits)
            if (!(e.kind == CK::int_lit && e.value == 0) && !(e.kind == CK::bool_lit && e.value == 0)) return false;
        return true;
    }

    std::size_t decl_array(const std::vector<CStmt>& list, std::size_t i, Pieces& out) {
        const CStmt& s = list[i];
        RustType elem = ctx_.rust(s.type);
        RustType ty = RustType::array(elem, s.len);
        std::size_t next = i + 1;
        RustExpr init;
        if (all_zero(s.exprs) && (elem.is_base() || s.exprs.empty())) {
            const CExpr* fill = nullptr;
            if (next < list.size()) {
                auto bound = [&](const CExpr& n) { return n.kind == CK::int_lit && n.value == s.len; };
                fill = fill_memset(list[next], s.name, bound);
                if (!fill) fill = fill_loop(list[next], s.name, bound);
            }
            if (fill) {
                init = rx::make(RK::array_repeat, {suffixed(scalar_or_value(*fill, elem, out)), usize_lit(s.len)});
                ++next;
            } else {
                init = default_value(ty, s.loc);
            }
        } else {
            init = rx::make(RK::array_list);
            for (const auto& e : s.exprs) init.kids.push_back(value(e, elem, out));
            for (std::size_t k = s.exprs.size(); k < s.len; ++k) init.kids.push_back(default_value(elem, s.loc));
        }
        init.loc = s.loc;
        Binding b;
        b.c_name = s.name;
        b.rust = rust_ident(s.name);
        b.ctype = CType::array_of(s.type, s.len);
        b.ty = ty;
        bind(std::move(b));
        out.push_back(Piece::let(rust_ident(s.name), ty, std::move(init), s.loc));
        return next;
    }

    RustExpr scalar_or_value(const CExpr& e, const RustType& want, Pieces& pre) {
        if (e.type->is_base()) return scalar(e, pre);
        return value(e, want, pre);
    }

    std::size_t decl_var(const std::vector<CStmt>& list, std::size_t i, Pieces& out) {
        const CStmt& s = list[i];
        std::size_t next = i + 1;
        const CExpr* init = s.exprs.empty() ? nullptr : &s.exprs[0];

        if (s.type.is_pointer() && init) {
            // Views: `p = base + e` and aliases of other views.
            bool arith = init->kind == CK::binop;
            bool alias = init->kind == CK::var && at(lookup(init->name, init->loc)).is_view;
            if (arith || alias) {
                PtrRef r = pointer_ref(*init);
                if (r.base >= 0) {
                    require_live(r.base, init->loc);
                    if (r.view >= 0) {
                        require_live(r.view, r.root->loc);
                        require_fresh_view(r.view, r.root->loc);
                    }
                    Binding v;
                    v.c_name = s.name;
                    v.rust = rust_ident(s.name);
                    v.ctype = s.type;
                    v.ty = RustType::slice(elem_of_base(r.base));
                    v.is_view = true;
                    v.base = r.base;
                    if (alias && r.extra == SymbolicOffset{}) {
                        const Binding& src = at(r.view);
                        v.offset = src.offset;
                        v.seq = src.seq;
                    } else {
                        v.offset = (r.view >= 0 ? at(r.view).offset : SymbolicOffset{}) + r.extra;
                        v.seq = insert(r.base, v.offset, v.rust, s.loc, out);
                    }
                    v.generation = state_for(r.base).generation;
                    bind(std::move(v));
                    return next;
                }
            }
        }

        RustType ty = ctx_.rust(s.type);
        RustExpr rhs;
        if (init && init->kind == CK::malloc) {
            ty = RustType::boxed(ctx_.rust(s.type.elem()));
            std::optional<RustExpr> fill;
            if (init->zeroed) {
                fill = default_value(ty.elem(), s.loc);
            } else if (next < list.size()) {
                const CExpr& count = init->kids[0];
                auto bound = [&](const CExpr& n) { return same_structure(n, count); };
                const CExpr* f = fill_memset(list[next], s.name, bound);
                if (!f) f = fill_loop(list[next], s.name, bound);
                if (f) {
                    fill = scalar_or_value(*f, ty.elem(), out);
                    ++next;
                }
            }
            rhs = malloc_expr(*init, out, std::move(fill));
        } else if (init) {
            if (init->kind == CK::call && s.type.is_pointer()) {
                FnSig sig = ctx_.sig(init->name);
                if (sig.ret.is_box()) ty = sig.ret;
            }
            if (init->kind == CK::struct_init) rhs = struct_literal(*init, out);
            else rhs = value(*init, ty, out);
        } else {
            rhs = default_value(ty, s.loc);
        }
        Binding b;
        b.c_name = s.name;
        b.rust = rust_ident(s.name);
        b.ctype = s.type;
        b.ty = ty;
        bind(std::move(b));
        out.push_back(Piece::let(rust_ident(s.name), ty, std::move(rhs), s.loc));
        return next;
    }

    RustExpr range(const CExpr& ptr, const CExpr& count, Pieces& pre) {
        RustExpr n = to_usize(scalar(count, pre), count);
        SliceRef s = pointer_slice(ptr, pre);
        if (s.rel == SymbolicOffset{}) return rx::make(RK::index_range, {std::move(s.base), rx::unit(), std::move(n)});
        RustExpr lo = render(s.rel, ptr.loc);
        RustExpr hi;
        if (s.rel.is_constant() && n.kind == RK::int_lit)
            hi = usize_lit(static_cast<uint64_t>(s.rel.constant) + n.value);
        else
            hi = rx::binop("+", render(s.rel, ptr.loc), std::move(n));
        return rx::make(RK::index_range, {std::move(s.base), std::move(lo), std::move(hi)});
    }

    std::size_t stmt(const std::vector<CStmt>& list, std::size_t i, Pieces& out) {
        const CStmt& s = list[i];
        using SK = CStmt::Kind;
        switch (s.kind) {
        case SK::decl_var: return decl_var(list, i, out);
        case SK::decl_array: return decl_array(list, i, out);
        case SK::block: {
            RustExpr inner = block_expr(s.body);
            if (inner.kind != RK::unit) out.push_back(Piece::expr(rx::block(std::move(inner))));
            break;
        }
        case SK::break_: out.push_back(Piece::expr(with_loc(rx::make(RK::break_), s.loc))); break;
        case SK::ret: {
            RustExpr r = rx::make(RK::return_);
            r.loc = s.loc;
            if (!s.exprs.empty()) r.kids.push_back(value(s.exprs[0], ret_, out));
            out.push_back(Piece::expr(std::move(r)));
            break;
        }
        case SK::if_: {
            RustExpr cond = scalar(s.exprs[0], out);
            RustExpr then = block_expr(s.body);
            RustExpr e = rx::make(RK::if_, {std::move(cond), std::move(then)});
            if (!s.else_body.empty()) e.kids.push_back(block_expr(s.else_body));
            e.loc = s.loc;
            out.push_back(Piece::expr(std::move(e)));
            break;
        }
        case SK::while_: {
            ++loop_depth_;
            Pieces cp;
            RustExpr cond = scalar(s.exprs[0], cp);
            if (!cp.empty())
                throw CompileError("subset-error", s.exprs[0].loc,
                                   "loop condition needs a temporary binding; compute it into a local first");
            RustExpr body = block_expr(s.body);
            --loop_depth_;
            out.push_back(Piece::expr(with_loc(rx::make(RK::while_, {std::move(cond), std::move(body)}), s.loc)));
            break;
        }
        case SK::for_: for_loop(s, out); break;
        case SK::assign: assign(s, out); break;
        case SK::expr: {
            const CExpr& e = s.exprs[0];
            RustExpr v;
            RustType t = RustType::unit();
            if (e.kind == CK::call) {
                v = call(e, nullptr, out);
                t = ctx_.sig(e.name).ret;
            } else if (e.type->is_base()) {
                v = scalar(e, out);
                t = ctx_.rust(*e.type);
            } else {
                t = ctx_.rust(*e.type);
                v = value(e, t, out);
            }
            if (t.is_unit()) out.push_back(Piece::expr(std::move(v)));
            else out.push_back(Piece::let("_", t, std::move(v), s.loc));
            break;
        }
        case SK::memset: {
            RustExpr dst = range(s.exprs[0], s.exprs[2], out);
            RustType elem = ctx_.rust(s.exprs[0].type->elem());
            RustExpr v = scalar_or_value(s.exprs[1], elem, out);
            out.push_back(Piece::expr(with_loc(rx::method(std::move(dst), "fill", {std::move(v)}), s.loc)));
            break;
        }
        case SK::memcpy: {
            RustExpr dst = range(s.exprs[0], s.exprs[2], out);
            RustExpr src = range(s.exprs[1], s.exprs[2], out);
            out.push_back(Piece::expr(
                with_loc(rx::method(std::move(dst), "copy_from_slice", {rx::borrow(std::move(src))}), s.loc)));
            break;
        }
        case SK::void_cast: {
            int id = lookup(s.name, s.loc);
            require_live(id, s.loc);
            reset_base(at(id).is_view ? at(id).base : id);
            break;
        }
        }
        return i + 1;
    }

    void for_loop(const CStmt& s, Pieces& out) {
        bool shadows = false;
        for (const auto& init : s.for_init)
            if ((init.kind == CStmt::Kind::decl_var || init.kind == CStmt::Kind::decl_array) && find(init.name) >= 0)
                shadows = true;
        scopes_.emplace_back();
        std::map<int, BaseState> saved = bases_;
        Pieces local;
        for (std::size_t k = 0; k < s.for_init.size();) k = stmt(s.for_init, k, local);
        ++loop_depth_;
        Pieces cp;
        RustExpr cond = scalar(s.exprs[0], cp);
        if (!cp.empty())
            throw CompileError("subset-error", s.exprs[0].loc,
                               "loop condition needs a temporary binding; compute it into a local first");
        RustExpr body = block_expr(s.body);
        Pieces steps;
        for (std::size_t k = 0; k < s.for_step.size();) k = stmt(s.for_step, k, steps);
        --loop_depth_;
        std::vector<RustExpr> items;
        if (body.kind != RK::unit) items.push_back(std::move(body));
        RustExpr step = fold(std::move(steps));
        if (step.kind == RK::seq) {
            for (auto& k : step.kids) items.push_back(std::move(k));
        } else if (step.kind != RK::unit) {
            items.push_back(std::move(step));
        }
        RustExpr loop_body = items.empty() ? rx::unit() : items.size() == 1 ? std::move(items[0]) : rx::seq(std::move(items));
        local.push_back(Piece::expr(with_loc(rx::make(RK::while_, {std::move(cond), std::move(loop_body)}), s.loc)));
        scopes_.pop_back();
        restore(std::move(saved));
        if (shadows) {
            out.push_back(Piece::expr(rx::block(fold(std::move(local)))));
        } else {
            for (auto& p : local) out.push_back(std::move(p));
        }
    }

    void assign(const CStmt& s, Pieces& out) {
        const CExpr& lhs = s.exprs[0];
        const CExpr& rhs = s.exprs[1];
        switch (lhs.kind) {
        case CK::var: {
            int id = lookup(lhs.name, lhs.loc);
            require_live(id, lhs.loc);
            if (at(id).is_view || at(id).ctype.is_pointer())
                throw CompileError("subset-error", lhs.loc,
                                   "reassigning pointer '" + lhs.name + "' is not supported; declare a new pointer");
            check_not_in_offsets(lhs.name, lhs.loc);
            RustExpr v = scalar_or_value(rhs, at(id).ty, out);
            RustExpr a = rx::make(RK::assign_var, {std::move(v)});
            a.name = at(id).rust;
            a.loc = s.loc;
            out.push_back(Piece::expr(std::move(a)));
            return;
        }
        case CK::index:
        case CK::deref: {
            Typed place_ = lhs.kind == CK::index ? element(lhs.kids[0], &lhs.kids[1], out, lhs.loc)
                                                 : element(lhs.kids[0], nullptr, out, lhs.loc);
            RustExpr v = scalar_or_value(rhs, place_.t, out);
            RustExpr a = rx::make(RK::assign_index,
                                  {std::move(place_.e.kids[0]), std::move(place_.e.kids[1]), std::move(v)});
            a.loc = s.loc;
            out.push_back(Piece::expr(std::move(a)));
            return;
        }
        case CK::field: {
            Typed f = place(lhs, out);
            RustExpr v = scalar_or_value(rhs, f.t, out);
            RustExpr a = rx::make(RK::assign_field, {std::move(f.e.kids[0]), std::move(v)});
            a.name = f.e.name;
            a.aux = f.e.aux;
            a.loc = s.loc;
            out.push_back(Piece::expr(std::move(a)));
            return;
        }
        default: break;
        }
        throw CompileError("subset-error", lhs.loc, "unsupported assignment target");
    }

    Context& ctx_;
    const CFunction& fn_;
    RustFn& out_;
    RustType ret_;
    std::deque<Binding> bindings_;
    std::vector<std::map<std::string, int>> scopes_;
    std::map<int, BaseState> bases_;
    std::set<std::string> used_;
    std::set<std::string> warned_;
    int loop_depth_ = 0;
};

int lifetime_positions(const RustType& t) {
    switch (t.kind) {
    case RustType::Kind::slice_ref: return 1 + lifetime_positions(t.elem());
    case RustType::Kind::named: return t.lifetime ? 1 : 0;
    default: {
        int n = 0;
        for (const auto& e : t.elems) n += lifetime_positions(e);
        return n;
    }
    }
}

RustType with_lifetime(const RustType& t, const std::string& lt) {
    return map_type(t, [&](RustType x) {
        if (x.is_slice() || (x.is_named() && x.lifetime)) x.lifetime = lt;
        return x;
    });
}

/// Copy is withheld from structs that become tuples: their components may
/// turn into mutable borrows per use site.
void withhold_copy(TraitFacts& facts, const std::vector<RustStruct>& structs, const std::set<std::string>& names) {
    for (const auto& n : names) facts[n].erase(Trait::copy);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& s : structs) {
            auto& mine = facts[s.name];
            if (!mine.count(Trait::copy)) continue;
            for (const auto& [f, t] : s.fields) {
                if (!type_has_trait(t, Trait::copy, facts)) {
                    mine.erase(Trait::copy);
                    changed = true;
                    break;
                }
            }
        }
    }
}

} // namespace

RustProgram translate_program(const TranslateInput& input, DiagnosticSink& sink) {
    const CProgram& program = *input.program;
    Context ctx{program, *input.structs, sink, translate_structs(program, *input.structs), {}, {}, {}, {}};
    RustProgram shell;
    shell.structs = ctx.rust_structs;
    ctx.facts = derive_traits(shell);
    std::set<std::string> tuple_rust;
    for (const auto& n : input.tuple_structs) tuple_rust.insert(rust_struct_name(n));
    withhold_copy(ctx.facts, ctx.rust_structs, tuple_rust);

    RustProgram out;
    out.structs = ctx.rust_structs;
    for (const auto& f : program.functions) {
        ctx.fn_names.insert(f.name);
        RustFn rf;
        rf.name = rust_ident(f.name);
        rf.loc = f.loc;
        for (const auto& p : f.params) rf.params.emplace_back(rust_ident(p.name), ctx.rust(p.type));
        Flavor ret_flavor = input.fresh.count(f.name) ? Flavor::boxed() : Flavor::by_default();
        rf.ret = translate_type(f.ret, ret_flavor, *input.structs);
        int inputs = 0;
        for (const auto& [n, t] : rf.params) inputs += lifetime_positions(t);
        if (lifetime_positions(rf.ret) > 0 && inputs != 1) {
            for (auto& [n, t] : rf.params) t = with_lifetime(t, "'a");
            rf.ret = with_lifetime(rf.ret, "'a");
            rf.lifetimes = {"'a"};
        }
        FnSig sig;
        for (const auto& [n, t] : rf.params) sig.params.push_back(t);
        sig.ret = rf.ret;
        ctx.sigs[f.name] = sig;
        out.fns.push_back(std::move(rf));
    }
    for (std::size_t i = 0; i < program.functions.size(); ++i)
        FnTranslator(ctx, program.functions[i], out.fns[i]).run();
    return out;
}

} // namespace c2r
