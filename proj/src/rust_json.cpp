#include "c2r/rust_json.hpp"

#include <json.hpp>

namespace c2r {

namespace {

using nlohmann::json;

const char* kind_name(RustExpr::Kind k) {
    using K = RustExpr::Kind;
    switch (k) {
    case K::var: return "var";
    case K::let: return "let";
    case K::let_tuple: return "let_tuple";
    case K::seq: return "seq";
    case K::block: return "block";
    case K::unit: return "unit";
    case K::int_lit: return "int_lit";
    case K::bool_lit: return "bool_lit";
    case K::array_repeat: return "array_repeat";
    case K::array_list: return "array_list";
    case K::vec_boxed: return "vec_boxed";
    case K::array_to_slice: return "array_to_slice";
    case K::index_range: return "index_range";
    case K::borrow: return "borrow";
    case K::deref: return "deref";
    case K::field: return "field";
    case K::index: return "index";
    case K::assign_var: return "assign_var";
    case K::assign_index: return "assign_index";
    case K::assign_field: return "assign_field";
    case K::struct_lit: return "struct_lit";
    case K::tuple_lit: return "tuple_lit";
    case K::call: return "call";
    case K::method_call: return "method_call";
    case K::box_new: return "box_new";
    case K::slice_from_ref: return "slice_from_ref";
    case K::if_: return "if";
    case K::while_: return "while";
    case K::return_: return "return";
    case K::break_: return "break";
    case K::binop: return "binop";
    case K::unop: return "unop";
    case K::cast: return "cast";
    }
    return "?";
}

json type_json(const RustType& t) { return print_type(t, true); }

json expr_json(const RustExpr& e) {
    json j;
    j["kind"] = kind_name(e.kind);
    if (!e.name.empty()) j["name"] = e.name;
    if (!e.names.empty()) j["names"] = e.names;
    if (e.ty) j["type"] = type_json(*e.ty);
    if (e.mut_) j["mut"] = true;
    if (e.kind == RustExpr::Kind::int_lit || e.kind == RustExpr::Kind::bool_lit) j["value"] = e.value;
    if (e.suffixed) j["suffixed"] = true;
    if (!e.aux.empty()) j["owner"] = e.aux;
    if (e.loc.line > 0 && !e.loc.file.empty()) j["loc"] = {{"line", e.loc.line}, {"column", e.loc.column}};
    if (!e.kids.empty()) {
        json kids = json::array();
        for (const auto& k : e.kids) kids.push_back(expr_json(k));
        j["kids"] = std::move(kids);
    }
    return j;
}

} // namespace

std::string rust_ast_json(const RustProgram& program) {
    json root;
    root["schema"] = kRustAstSchema;
    json structs = json::array();
    for (const auto& s : program.structs) {
        json js;
        js["name"] = s.name;
        if (s.lifetime) js["lifetime"] = *s.lifetime;
        js["derives"] = s.derives;
        json fields = json::array();
        for (const auto& [n, t] : s.fields) fields.push_back({{"name", n}, {"type", type_json(t)}});
        js["fields"] = std::move(fields);
        structs.push_back(std::move(js));
    }
    root["structs"] = std::move(structs);
    json fns = json::array();
    for (const auto& f : program.fns) {
        json jf;
        jf["name"] = f.name;
        json params = json::array();
        for (std::size_t i = 0; i < f.params.size(); ++i) {
            bool m = i < f.mut_params.size() && f.mut_params[i];
            params.push_back({{"name", f.params[i].first}, {"type", type_json(f.params[i].second)}, {"mut", m}});
        }
        jf["params"] = std::move(params);
        jf["ret"] = type_json(f.ret);
        if (!f.lifetimes.empty()) jf["lifetimes"] = f.lifetimes;
        jf["body"] = expr_json(f.body);
        fns.push_back(std::move(jf));
    }
    root["fns"] = std::move(fns);
    return root.dump(2) + "\n";
}

} // namespace c2r
