#include "c2r/type_translation.hpp"

#include <cctype>

namespace c2r {

const char* to_string(OwnershipClass c) { return c == OwnershipClass::owned ? "owned" : "borrowed"; }

std::string rust_struct_name(const std::string& c_name) {
    std::string out;
    bool upper = true;
    for (char ch : c_name) {
        if (ch == '_') {
            upper = true;
            continue;
        }
        out += upper ? static_cast<char>(std::toupper(static_cast<unsigned char>(ch))) : ch;
        upper = false;
    }
    if (out.empty()) out = "S";
    return out;
}

namespace {

std::string base_name(BaseType b) {
    switch (b) {
    case BaseType::u8: return "u8";
    case BaseType::u16: return "u16";
    case BaseType::u32: return "u32";
    case BaseType::u64: return "u64";
    case BaseType::i8: return "i8";
    case BaseType::i16: return "i16";
    case BaseType::i32: return "i32";
    case BaseType::i64: return "i64";
    case BaseType::usize: return "usize";
    case BaseType::boolean: return "bool";
    }
    return "u32";
}

bool holds_borrow(const CType& t, const StructTable& structs, const std::set<std::string>& lifetimed) {
    if (t.is_pointer()) return true;
    if (t.is_array()) return holds_borrow(t.elem(), structs, lifetimed);
    if (t.is_struct()) return lifetimed.count(t.name) != 0;
    return false;
}

} // namespace

StructTable make_struct_table(const CProgram& program, std::map<std::string, OwnershipClass> classes) {
    StructTable table;
    table.classes = std::move(classes);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& s : program.structs) {
            auto it = table.classes.find(s.name);
            if (it == table.classes.end() || it->second != OwnershipClass::borrowed) continue;
            if (table.needs_lifetime.count(s.name)) continue;
            for (const auto& [f, t] : s.fields) {
                // Pointers in a borrowed struct are borrows; nested structs only if they carry one.
                bool direct = t.is_pointer() || (t.is_array() && t.elem().is_pointer());
                if (direct || holds_borrow(t, table, table.needs_lifetime)) {
                    table.needs_lifetime.insert(s.name);
                    changed = true;
                    break;
                }
            }
        }
    }
    return table;
}

RustType translate_type(const CType& t, const Flavor& flavor, const StructTable& structs) {
    switch (t.kind) {
    case CType::Kind::base: return RustType::base(base_name(t.base));
    case CType::Kind::void_: return RustType::unit();
    case CType::Kind::array: return RustType::array(translate_type(t.elem(), flavor, structs), t.len);
    case CType::Kind::pointer: {
        RustType elem = t.elem().is_pointer() ? translate_type(t.elem(), Flavor::boxed(), structs)
                                              : translate_type(t.elem(), flavor, structs);
        switch (flavor.kind) {
        case Flavor::Kind::default_: return RustType::slice(std::move(elem));
        case Flavor::Kind::boxed: return RustType::boxed(std::move(elem));
        case Flavor::Kind::borrowed: return RustType::slice(std::move(elem), false, flavor.lifetime);
        }
        break;
    }
    case CType::Kind::struct_: {
        if (!structs.has(t.name))
            throw CompileError("unknown-struct", {}, "struct '" + t.name + "' has no ownership class");
        std::optional<std::string> lt;
        if (structs.needs_lifetime.count(t.name)) lt = flavor.kind == Flavor::Kind::borrowed ? flavor.lifetime : "'a";
        return RustType::named(rust_struct_name(t.name), lt);
    }
    case CType::Kind::function: {
        std::vector<RustType> params;
        for (std::size_t i = 0; i + 1 < t.elems.size(); ++i)
            params.push_back(translate_type(t.elems[i], Flavor::by_default(), structs));
        return RustType::function(std::move(params), translate_type(t.elems.back(), flavor, structs));
    }
    }
    return RustType::unit();
}

RustType translate_field_type(const CType& t, OwnershipClass owner, const StructTable& structs) {
    return translate_type(t, owner == OwnershipClass::owned ? Flavor::boxed() : Flavor::borrowed("'a"), structs);
}

} // namespace c2r
