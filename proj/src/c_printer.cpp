#include "c2r/c_frontend.hpp"

#include <sstream>

namespace c2r {

namespace {

std::string decl(const CType& t, const std::string& name) {
    if (t.is_pointer()) {
        std::string stars;
        const CType* cur = &t;
        while (cur->is_pointer()) {
            stars += '*';
            cur = &cur->elem();
        }
        return to_string(*cur) + " " + stars + name;
    }
    return to_string(t) + " " + name;
}

std::string expr(const CExpr& e);

std::string atom(const CExpr& e) {
    if (e.kind == CExpr::Kind::var || e.kind == CExpr::Kind::int_lit || e.kind == CExpr::Kind::call ||
        e.kind == CExpr::Kind::index || e.kind == CExpr::Kind::field)
        return expr(e);
    return "(" + expr(e) + ")";
}

std::string expr(const CExpr& e) {
    using K = CExpr::Kind;
    switch (e.kind) {
    case K::var: return e.name;
    case K::int_lit: return std::to_string(e.value);
    case K::bool_lit: return e.value ? "true" : "false";
    case K::index: return atom(e.kids[0]) + "[" + expr(e.kids[1]) + "]";
    case K::field: return atom(e.kids[0]) + "." + e.name;
    case K::deref: return "*" + atom(e.kids[0]);
    case K::addr_of: return "&" + atom(e.kids[0]);
    case K::unop: return e.op + atom(e.kids[0]);
    case K::cast: return "(" + to_string(e.target) + ")" + atom(e.kids[0]);
    case K::binop: return atom(e.kids[0]) + " " + e.op + " " + atom(e.kids[1]);
    case K::sizeof_type: return "sizeof(" + to_string(e.target) + ")";
    case K::malloc:
        if (e.zeroed) return "calloc(" + expr(e.kids[0]) + ", sizeof(" + to_string(e.target) + "))";
        return "malloc(" + atom(e.kids[0]) + " * sizeof(" + to_string(e.target) + "))";
    case K::call: {
        std::string s = e.name + "(";
        for (std::size_t i = 0; i < e.kids.size(); ++i) {
            if (i) s += ", ";
            s += expr(e.kids[i]);
        }
        return s + ")";
    }
    case K::struct_init: {
        std::string s = "{ ";
        for (std::size_t i = 0; i < e.kids.size(); ++i) {
            if (i) s += ", ";
            if (!e.field_names[i].empty()) s += "." + e.field_names[i] + " = ";
            s += expr(e.kids[i]);
        }
        return s + " }";
    }
    }
    return "?";
}

class Printer {
public:
    std::string run(const CProgram& p) {
        out_ << "#include <stdint.h>\n#include <stdbool.h>\n#include <stdlib.h>\n#include <string.h>\n";
        for (const auto& s : p.structs) {
            out_ << "\nstruct " << s.name << " {\n";
            for (const auto& [n, t] : s.fields) {
                if (t.is_array()) out_ << "    " << decl(t.elem(), n) << "[" << t.len << "];\n";
                else out_ << "    " << decl(t, n) << ";\n";
            }
            out_ << "};\n";
        }
        if (!p.functions.empty()) out_ << "\n";
        for (const auto& f : p.functions) out_ << signature(f) << ";\n";
        for (const auto& f : p.functions) {
            out_ << "\n" << signature(f) << " {\n";
            indent_ = 1;
            for (const auto& s : f.body) stmt(s);
            out_ << "}\n";
        }
        return out_.str();
    }

private:
    static std::string signature(const CFunction& f) {
        std::string s = decl(f.ret, f.name) + "(";
        if (f.params.empty()) s += "void";
        for (std::size_t i = 0; i < f.params.size(); ++i) {
            if (i) s += ", ";
            s += decl(f.params[i].type, f.params[i].name);
        }
        return s + ")";
    }

    void line(const std::string& s) { out_ << std::string(static_cast<std::size_t>(indent_) * 4, ' ') << s << "\n"; }

    void body(const std::vector<CStmt>& b) {
        ++indent_;
        for (const auto& s : b) stmt(s);
        --indent_;
    }

    static std::string inline_stmt(const CStmt& s) {
        if (s.kind == CStmt::Kind::assign) return expr(s.exprs[0]) + " = " + expr(s.exprs[1]);
        if (s.kind == CStmt::Kind::expr) return expr(s.exprs[0]);
        if (s.kind == CStmt::Kind::decl_var)
            return decl(s.type, s.name) + (s.exprs.empty() ? "" : " = " + expr(s.exprs[0]));
        return "";
    }

    void stmt(const CStmt& s) {
        using K = CStmt::Kind;
        switch (s.kind) {
        case K::ret: line(s.exprs.empty() ? "return;" : "return " + expr(s.exprs[0]) + ";"); return;
        case K::break_: line("break;"); return;
        case K::void_cast: line("(void)" + s.name + ";"); return;
        case K::assign:
        case K::expr:
        case K::decl_var: line(inline_stmt(s) + ";"); return;
        case K::decl_array: {
            std::string d = decl(s.type, s.name) + "[" + std::to_string(s.len) + "]";
            if (s.has_init) {
                d += " = { ";
                for (std::size_t i = 0; i < s.exprs.size(); ++i) {
                    if (i) d += ", ";
                    d += expr(s.exprs[i]);
                }
                d += " }";
            }
            line(d + ";");
            return;
        }
        case K::memset:
        case K::memcpy:
            line(std::string(s.kind == K::memset ? "memset(" : "memcpy(") + expr(s.exprs[0]) + ", " +
                 expr(s.exprs[1]) + ", " + expr(s.exprs[2]) + ");");
            return;
        case K::block:
            line("{");
            body(s.body);
            line("}");
            return;
        case K::if_:
            line("if (" + expr(s.exprs[0]) + ") {");
            body(s.body);
            if (!s.else_body.empty()) {
                line("} else {");
                body(s.else_body);
            }
            line("}");
            return;
        case K::while_:
            line("while (" + expr(s.exprs[0]) + ") {");
            body(s.body);
            line("}");
            return;
        case K::for_: {
            std::string init = s.for_init.empty() ? "" : inline_stmt(s.for_init[0]);
            std::string step = s.for_step.empty() ? "" : inline_stmt(s.for_step[0]);
            line("for (" + init + "; " + expr(s.exprs[0]) + "; " + step + ") {");
            body(s.body);
            line("}");
            return;
        }
        }
    }

    std::ostringstream out_;
    int indent_ = 0;
};

} // namespace

std::string print_c(const CProgram& program) { return Printer().run(program); }

} // namespace c2r
