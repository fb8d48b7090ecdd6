#include "c2r/ownership.hpp"

#include <algorithm>
#include <sstream>

namespace c2r {

namespace {

std::string trim(std::string s) {
    auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
}

std::string unquote(const std::string& v, const SourceLoc& loc) {
    if (v.size() < 2 || v.front() != '"' || v.back() != '"')
        throw CompileError("config-error", loc, "expected a quoted string, found '" + v + "'");
    return v.substr(1, v.size() - 2);
}

} // namespace

OwnershipConfig parse_config(std::string_view text, const std::string& file) {
    OwnershipConfig cfg;
    std::istringstream in{std::string(text)};
    std::string line, section;
    uint32_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        SourceLoc loc{file, lineno, 1};
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw CompileError("config-error", loc, "unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section != "ownership" && section != "tuples")
                throw CompileError("config-error", loc, "unknown section [" + section + "]");
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) throw CompileError("config-error", loc, "expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (section == "ownership") {
            std::string v = unquote(value, loc);
            if (v == "owned") cfg.overrides[key] = OwnershipClass::owned;
            else if (v == "borrowed") cfg.overrides[key] = OwnershipClass::borrowed;
            else throw CompileError("config-error", loc, "ownership must be \"owned\" or \"borrowed\"");
        } else if (section == "tuples") {
            if (key != "names") throw CompileError("config-error", loc, "unknown key '" + key + "' in [tuples]");
            if (value.size() < 2 || value.front() != '[' || value.back() != ']')
                throw CompileError("config-error", loc, "expected a list of struct names");
            std::istringstream items(value.substr(1, value.size() - 2));
            std::string item;
            while (std::getline(items, item, ',')) {
                item = trim(item);
                if (!item.empty()) cfg.tuple_structs.insert(unquote(item, loc));
            }
        } else {
            throw CompileError("config-error", loc, "key outside of any section");
        }
    }
    return cfg;
}

void validate_config(const OwnershipConfig& config, const CProgram& program) {
    for (const auto& [n, c] : config.overrides)
        if (!program.find_struct(n)) throw CompileError("config-error", {}, "override names unknown struct '" + n + "'");
    for (const auto& n : config.tuple_structs)
        if (!program.find_struct(n)) throw CompileError("config-error", {}, "tuple lowering names unknown struct '" + n + "'");
}

namespace {

// Locals initialized with heap data: a malloc or a call returning fresh data.
std::set<std::string> fresh_locals(const CFunction& f, const std::set<std::string>& fresh_fns) {
    std::set<std::string> out;
    visit_stmts(f.body, [&](const CStmt& s) {
        if (s.kind != CStmt::Kind::decl_var || s.exprs.empty() || !s.type.is_pointer()) return;
        const CExpr& init = s.exprs[0];
        if (init.kind == CExpr::Kind::malloc || (init.kind == CExpr::Kind::call && fresh_fns.count(init.name)))
            out.insert(s.name);
    });
    return out;
}

bool is_fresh_value(const CExpr& e, const std::set<std::string>& locals, const std::set<std::string>& fresh_fns) {
    if (e.kind == CExpr::Kind::malloc) return true;
    if (e.kind == CExpr::Kind::var) return locals.count(e.name) != 0;
    if (e.kind == CExpr::Kind::call) return fresh_fns.count(e.name) != 0;
    return false;
}

// A value that only exists as a temporary, so it can never be borrowed into a struct.
bool is_fresh_temporary(const CExpr& e, const std::set<std::string>& fresh_fns) {
    return e.kind == CExpr::Kind::malloc || (e.kind == CExpr::Kind::call && fresh_fns.count(e.name) != 0);
}

void collect_struct_fields(const CType& t, std::vector<std::string>& out) {
    if (t.is_struct()) out.push_back(t.name);
    for (const auto& e : t.elems) collect_struct_fields(e, out);
}

} // namespace

std::set<std::string> fresh_returning_functions(const CProgram& program) {
    std::set<std::string> fresh;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& f : program.functions) {
            if (!f.ret.is_pointer() || fresh.count(f.name)) continue;
            auto locals = fresh_locals(f, fresh);
            bool any = false;
            visit_stmts(f.body, [&](const CStmt& s) {
                if (s.kind == CStmt::Kind::ret && !s.exprs.empty() && is_fresh_value(s.exprs[0], locals, fresh))
                    any = true;
            });
            if (any) {
                fresh.insert(f.name);
                changed = true;
            }
        }
    }
    return fresh;
}

std::map<std::string, OwnershipClass> classify_structs(const CProgram& program, const OwnershipConfig& config) {
    std::set<std::string> fresh = fresh_returning_functions(program);
    std::map<std::string, bool> seeds;  // struct -> hard

    auto seed = [&](const std::string& s, bool hard) {
        auto [it, inserted] = seeds.emplace(s, hard);
        if (!inserted) it->second = it->second || hard;
    };

    for (const auto& f : program.functions) {
        if (fresh.count(f.name) && f.ret.elem().is_struct()) seed(f.ret.elem().name, true);
        auto locals = fresh_locals(f, fresh);
        auto check_field_value = [&](const std::string& sname, const std::string& fname, const CExpr& v) {
            const CStruct* st = program.find_struct(sname);
            const CType* ft = st ? st->field(fname) : nullptr;
            if (!ft || !ft->is_pointer()) return;
            if (is_fresh_value(v, locals, fresh)) seed(sname, is_fresh_temporary(v, fresh));
        };
        visit_stmts(f.body, [&](const CStmt& s) {
            if (s.kind == CStmt::Kind::assign && s.exprs[0].kind == CExpr::Kind::field) {
                const CExpr& lhs = s.exprs[0];
                if (lhs.kids[0].type && lhs.kids[0].type->is_struct())
                    check_field_value(lhs.kids[0].type->name, lhs.name, s.exprs[1]);
            }
        });
        visit_body_exprs(f.body, [&](const CExpr& e) {
            if (e.kind != CExpr::Kind::struct_init || !e.type) return;
            for (std::size_t i = 0; i < e.kids.size(); ++i) check_field_value(e.type->name, e.field_names[i], e.kids[i]);
        });
    }

    for (const auto& [s, hard] : seeds) {
        auto it = config.overrides.find(s);
        if (hard && it != config.overrides.end() && it->second == OwnershipClass::borrowed)
            throw CompileError("conflicting-override", {},
                               "struct '" + s + "' holds freshly allocated data and cannot be borrowed");
    }

    std::set<std::string> owned;
    std::vector<std::string> work;
    for (const auto& [s, hard] : seeds) {
        auto it = config.overrides.find(s);
        if (it == config.overrides.end() || it->second == OwnershipClass::owned) work.push_back(s);
    }
    for (const auto& [s, c] : config.overrides)
        if (c == OwnershipClass::owned) work.push_back(s);
    while (!work.empty()) {
        std::string s = work.back();
        work.pop_back();
        if (!owned.insert(s).second) continue;
        auto it = config.overrides.find(s);
        if (it != config.overrides.end() && it->second == OwnershipClass::borrowed)
            throw CompileError("conflicting-override", {},
                               "struct '" + s + "' is nested in an owned struct and cannot be borrowed");
        const CStruct* st = program.find_struct(s);
        if (!st) continue;
        for (const auto& [fname, ft] : st->fields) {
            std::vector<std::string> nested;
            collect_struct_fields(ft, nested);
            for (auto& n : nested) work.push_back(n);
        }
    }

    std::map<std::string, OwnershipClass> out;
    for (const auto& s : program.structs)
        out[s.name] = owned.count(s.name) ? OwnershipClass::owned : OwnershipClass::borrowed;
    return out;
}

SignatureFlavor choose_signature_flavor(const CFunction& fn, const std::set<std::string>& fresh) {
    SignatureFlavor sf;
    sf.params.assign(fn.params.size(), Flavor::by_default());
    sf.ret = fresh.count(fn.name) ? Flavor::boxed() : Flavor::by_default();
    return sf;
}

void lower_to_tuple(RustProgram& program, const std::set<std::string>& rust_names) {
    if (rust_names.empty()) return;
    std::map<std::string, std::vector<std::string>> field_order;
    std::map<std::string, RustType> shapes;
    for (const auto& s : program.structs) {
        if (!rust_names.count(s.name)) continue;
        std::vector<RustType> elems;
        for (const auto& [n, t] : s.fields) {
            field_order[s.name].push_back(n);
            elems.push_back(t);
        }
        shapes[s.name] = RustType::tuple(std::move(elems));
    }

    std::function<RustType(RustType)> lower = [&](RustType t) -> RustType {
        if (t.is_named() && shapes.count(t.name)) return map_type(shapes.at(t.name), lower);
        if ((t.is_slice() || t.is_box()) && t.elem().is_named() && shapes.count(t.elem().name))
            throw CompileError("tuple-lowering-error", {},
                               "a pointer to struct '" + t.elem().name + "' prevents lowering it to a tuple");
        return t;
    };
    auto position = [&](const std::string& sname, const std::string& field) {
        const auto& order = field_order.at(sname);
        return std::to_string(std::find(order.begin(), order.end(), field) - order.begin());
    };

    auto lower_expr = [&](RustExpr& body) {
        walk_post(body, [&](RustExpr& e) {
            using K = RustExpr::Kind;
            if (e.kind == K::slice_from_ref && shapes.count(e.aux))
                throw CompileError("tuple-lowering-error", e.loc, "address of struct '" + e.aux + "' is taken");
            if ((e.kind == K::field || e.kind == K::assign_field) && shapes.count(e.aux)) {
                e.name = position(e.aux, e.name);
            } else if (e.kind == K::struct_lit && shapes.count(e.name)) {
                const auto& order = field_order.at(e.name);
                std::vector<RustExpr> kids;
                for (const auto& f : order) {
                    auto it = std::find(e.names.begin(), e.names.end(), f);
                    kids.push_back(std::move(e.kids[static_cast<std::size_t>(it - e.names.begin())]));
                }
                RustExpr t = rx::make(K::tuple_lit, std::move(kids));
                t.loc = e.loc;
                e = std::move(t);
            }
        });
        map_expr_types(body, lower);
    };

    for (auto& f : program.fns) {
        for (auto& [n, t] : f.params) t = map_type(t, lower);
        f.ret = map_type(f.ret, lower);
        lower_expr(f.body);
    }
    std::vector<RustStruct> kept;
    for (auto& s : program.structs) {
        if (rust_names.count(s.name)) continue;
        for (auto& [n, t] : s.fields) t = map_type(t, lower);
        kept.push_back(std::move(s));
    }
    program.structs = std::move(kept);
    for (auto& [n, shape] : shapes) program.tuple_aliases[n] = map_type(shape, lower);
}

} // namespace c2r
