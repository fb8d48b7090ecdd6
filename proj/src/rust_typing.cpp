#include "c2r/rust_typing.hpp"

#include <cctype>

namespace c2r {

const RustType* TypeScope::find(const std::string& name) const {
    for (auto it = frames_.rbegin(); it != frames_.rend(); ++it) {
        auto f = it->find(name);
        if (f != it->end()) return &f->second;
    }
    return nullptr;
}

const RustFn* builtin_rust_fn(const std::string& name) {
    static const std::vector<RustFn> builtins = [] {
        std::vector<RustFn> out;
        for (const char* t : {"u8", "u16", "u32", "u64", "i32", "i64", "bool"}) {
            RustFn f;
            f.name = std::string("print_") + (std::string(t) == "bool" ? "bool" : t);
            f.params.push_back({"x", RustType::base(t)});
            out.push_back(f);
        }
        RustFn bytes;
        bytes.name = "print_bytes";
        bytes.params.push_back({"p", RustType::slice(RustType::base("u8"))});
        bytes.params.push_back({"len", RustType::base("u32")});
        out.push_back(bytes);
        return out;
    }();
    for (const auto& f : builtins)
        if (f.name == name) return &f;
    return nullptr;
}

std::optional<RustType> element_type(const RustType& t) {
    if (t.is_array() || t.is_slice() || t.is_box()) return t.elem();
    return std::nullopt;
}

std::optional<RustType> field_type(const RustType& owner, const std::string& field, const RustProgram& program) {
    if (owner.is_tuple()) {
        if (field.empty() || !std::isdigit(static_cast<unsigned char>(field[0]))) return std::nullopt;
        std::size_t i = std::stoul(field);
        if (i < owner.elems.size()) return owner.elems[i];
        return std::nullopt;
    }
    if (owner.is_named()) {
        if (auto it = program.tuple_aliases.find(owner.name); it != program.tuple_aliases.end())
            return field_type(it->second, field, program);
        const RustStruct* s = program.find_struct(owner.name);
        if (!s) return std::nullopt;
        for (const auto& [n, t] : s->fields)
            if (n == field) return t;
    }
    return std::nullopt;
}

namespace {

std::optional<RustType> slice_of(const std::optional<RustType>& t, bool mut_ = false) {
    if (!t) return std::nullopt;
    if (auto e = element_type(*t)) return RustType::slice(*e, mut_);
    return std::nullopt;
}

std::optional<RustType> body_type(const RustExpr& e, TypeScope scope, const RustProgram& program) {
    using K = RustExpr::Kind;
    const RustExpr* cur = &e;
    while (true) {
        if (cur->kind == K::let) {
            if (cur->ty) scope.bind(cur->name, *cur->ty);
            else if (auto t = type_of(cur->kids[0], scope, program)) scope.bind(cur->name, *t);
            cur = &cur->kids[1];
        } else if (cur->kind == K::let_tuple) {
            if (cur->ty && cur->ty->is_tuple())
                for (std::size_t i = 0; i < cur->names.size() && i < cur->ty->elems.size(); ++i)
                    scope.bind(cur->names[i], cur->ty->elems[i]);
            cur = &cur->kids[1];
        } else if (cur->kind == K::seq) {
            if (cur->kids.empty()) return RustType::unit();
            cur = &cur->kids.back();
        } else if (cur->kind == K::block) {
            cur = &cur->kids[0];
        } else {
            return type_of(*cur, scope, program);
        }
    }
}

} // namespace

std::optional<RustType> type_of(const RustExpr& e, const TypeScope& scope, const RustProgram& program) {
    using K = RustExpr::Kind;
    switch (e.kind) {
    case K::var:
        if (const RustType* t = scope.find(e.name)) return *t;
        return std::nullopt;
    case K::let:
    case K::let_tuple:
    case K::seq:
    case K::block: return body_type(e, scope, program);
    case K::unit:
    case K::assign_var:
    case K::assign_index:
    case K::assign_field:
    case K::while_:
    case K::return_:
    case K::break_: return RustType::unit();
    case K::int_lit:
        if (e.ty) return e.ty;
        return RustType::base("u32");
    case K::bool_lit: return RustType::base("bool");
    case K::array_repeat: {
        auto t = type_of(e.kids[0], scope, program);
        if (!t) return std::nullopt;
        return RustType::array(*t, e.kids[1].value);
    }
    case K::array_list: {
        if (e.kids.empty()) {
            if (e.ty) return e.ty;
            return std::nullopt;
        }
        auto t = type_of(e.kids[0], scope, program);
        if (!t) return std::nullopt;
        return RustType::array(*t, e.kids.size());
    }
    case K::vec_boxed: {
        auto t = type_of(e.kids[0], scope, program);
        if (!t) return std::nullopt;
        return RustType::boxed(*t);
    }
    case K::array_to_slice:
    case K::index_range: return slice_of(type_of(e.kids[0], scope, program));
    case K::borrow: {
        auto t = type_of(e.kids[0], scope, program);
        if (!t) return std::nullopt;
        if (t->is_slice()) return RustType::slice(t->elem(), e.mut_);
        if (t->is_box() || t->is_array()) return RustType::slice(t->elem(), e.mut_);
        return std::nullopt;
    }
    case K::deref: return slice_of(type_of(e.kids[0], scope, program));
    case K::field: {
        auto owner = type_of(e.kids[0], scope, program);
        if (!owner) return std::nullopt;
        return field_type(*owner, e.name, program);
    }
    case K::index: {
        auto t = type_of(e.kids[0], scope, program);
        if (!t) return std::nullopt;
        return element_type(*t);
    }
    case K::struct_lit: return RustType::named(e.name);
    case K::tuple_lit: {
        std::vector<RustType> elems;
        for (const auto& k : e.kids) {
            auto t = type_of(k, scope, program);
            if (!t) return std::nullopt;
            elems.push_back(*t);
        }
        return RustType::tuple(std::move(elems));
    }
    case K::call: {
        if (const RustFn* f = program.find_fn(e.name)) return f->ret;
        if (const RustFn* b = builtin_rust_fn(e.name)) return b->ret;
        return std::nullopt;
    }
    case K::method_call: {
        const std::string& m = e.name;
        if (m == "len") return RustType::usize();
        if (m == "fill" || m == "copy_from_slice") return RustType::unit();
        auto recv = type_of(e.kids[0], scope, program);
        if (!recv) return std::nullopt;
        if (m == "split_at") {
            auto s = slice_of(recv, e.mut_);
            if (!s) return std::nullopt;
            return RustType::tuple({*s, *s});
        }
        if (m == "into" || m == "to_vec") {
            if (auto el = element_type(*recv)) return RustType::boxed(*el);
            return std::nullopt;
        }
        return recv;
    }
    case K::box_new: {
        auto t = type_of(e.kids[0], scope, program);
        if (!t) return std::nullopt;
        if (t->is_array()) return RustType::boxed(t->elem());
        return std::nullopt;
    }
    case K::slice_from_ref: {
        auto t = type_of(e.kids[0], scope, program);
        if (!t) return std::nullopt;
        return RustType::slice(*t, e.mut_);
    }
    case K::if_: {
        if (e.kids.size() < 3) return RustType::unit();
        return type_of(e.kids[1], scope, program);
    }
    case K::binop: {
        static const std::set<std::string> cmp = {"==", "!=", "<", ">", "<=", ">=", "&&", "||"};
        if (cmp.count(e.name)) return RustType::base("bool");
        return type_of(e.kids[0], scope, program);
    }
    case K::unop: return type_of(e.kids[0], scope, program);
    case K::cast: return e.ty;
    }
    return std::nullopt;
}

} // namespace c2r
