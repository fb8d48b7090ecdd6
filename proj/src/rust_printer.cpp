#include "c2r/rust_ast.hpp"

#include <sstream>

namespace c2r {

std::string print_type(const RustType& t, bool with_lifetimes) {
    using K = RustType::Kind;
    switch (t.kind) {
    case K::base: return t.name;
    case K::unit: return "()";
    case K::array: return "[" + print_type(t.elem(), with_lifetimes) + "; " + std::to_string(t.len) + "]";
    case K::slice_ref: {
        std::string s = "&";
        if (with_lifetimes && t.lifetime) s += *t.lifetime + " ";
        if (t.mut_) s += "mut ";
        return s + "[" + print_type(t.elem(), with_lifetimes) + "]";
    }
    case K::boxed_slice: return "Box<[" + print_type(t.elem(), with_lifetimes) + "]>";
    case K::named:
        if (with_lifetimes && t.lifetime) return t.name + "<" + *t.lifetime + ">";
        return t.name;
    case K::tuple: {
        std::string s = "(";
        for (std::size_t i = 0; i < t.elems.size(); ++i) {
            if (i) s += ", ";
            s += print_type(t.elems[i], with_lifetimes);
        }
        if (t.elems.size() == 1) s += ",";
        return s + ")";
    }
    case K::function: {
        std::string s = "fn(";
        for (std::size_t i = 0; i + 1 < t.elems.size(); ++i) {
            if (i) s += ", ";
            s += print_type(t.elems[i], with_lifetimes);
        }
        s += ")";
        if (!t.elems.back().is_unit()) s += " -> " + print_type(t.elems.back(), with_lifetimes);
        return s;
    }
    }
    return "?";
}

namespace {

constexpr int kPostfix = 100;
constexpr int kUnary = 90;
constexpr int kCast = 80;

int binop_prec(const std::string& op) {
    if (op == "*" || op == "/" || op == "%") return 70;
    if (op == "+" || op == "-") return 60;
    if (op == "<<" || op == ">>") return 55;
    if (op == "&") return 50;
    if (op == "^") return 45;
    if (op == "|") return 40;
    if (op == "==" || op == "!=" || op == "<" || op == ">" || op == "<=" || op == ">=") return 30;
    if (op == "&&") return 20;
    if (op == "||") return 10;
    return 0;
}

int prec(const RustExpr& e) {
    using K = RustExpr::Kind;
    switch (e.kind) {
    case K::borrow: case K::deref: case K::unop: return kUnary;
    case K::cast: return kCast;
    case K::binop: return binop_prec(e.name);
    case K::let: case K::let_tuple: case K::seq: case K::if_: case K::while_: case K::return_:
    case K::break_: case K::assign_var: case K::assign_index: case K::assign_field:
        return 0;
    default: return kPostfix;
    }
}

class Printer {
public:
    std::string expr(const RustExpr& e, int indent, int min_prec = 0) {
        std::string s = render(e, indent);
        if (prec(e) < min_prec) return "(" + s + ")";
        return s;
    }

    std::string block(const RustExpr& body, int indent) {
        std::vector<std::string> lines;
        emit_body(body, indent + 1, lines);
        if (lines.empty()) return "{}";
        std::string s = "{\n";
        for (const auto& l : lines) s += l + "\n";
        return s + pad(indent) + "}";
    }

    void emit_body(const RustExpr& e, int indent, std::vector<std::string>& out) {
        using K = RustExpr::Kind;
        switch (e.kind) {
        case K::let: {
            std::string l = pad(indent) + "let " + (e.mut_ ? "mut " : "") + e.name;
            if (e.ty) l += ": " + print_type(*e.ty);
            l += " = " + expr(e.kids[0], indent) + ";";
            out.push_back(l);
            emit_body(e.kids[1], indent, out);
            return;
        }
        case K::let_tuple: {
            std::string l = pad(indent) + "let (";
            for (std::size_t i = 0; i < e.names.size(); ++i) {
                if (i) l += ", ";
                l += e.names[i];
            }
            if (e.names.size() == 1) l += ",";
            l += ") = " + expr(e.kids[0], indent) + ";";
            out.push_back(l);
            emit_body(e.kids[1], indent, out);
            return;
        }
        case K::seq:
            for (std::size_t i = 0; i + 1 < e.kids.size(); ++i) emit_stmt(e.kids[i], indent, out);
            if (!e.kids.empty()) emit_body(e.kids.back(), indent, out);
            return;
        case K::unit: return;
        case K::return_: case K::break_: case K::assign_var: case K::assign_index: case K::assign_field:
            out.push_back(pad(indent) + expr(e, indent) + ";");
            return;
        default:
            out.push_back(pad(indent) + expr(e, indent));
            return;
        }
    }

private:
    static std::string pad(int indent) { return std::string(static_cast<std::size_t>(indent) * 4, ' '); }

    void emit_stmt(const RustExpr& e, int indent, std::vector<std::string>& out) {
        using K = RustExpr::Kind;
        switch (e.kind) {
        case K::unit: return;
        case K::let: case K::let_tuple: case K::seq:
            out.push_back(pad(indent) + block(e, indent));
            return;
        case K::if_: case K::while_: case K::block:
            out.push_back(pad(indent) + expr(e, indent));
            return;
        default:
            out.push_back(pad(indent) + expr(e, indent) + ";");
            return;
        }
    }

    std::string list(const std::vector<RustExpr>& kids, std::size_t from, int indent) {
        std::string s;
        for (std::size_t i = from; i < kids.size(); ++i) {
            if (i > from) s += ", ";
            s += expr(kids[i], indent);
        }
        return s;
    }

    std::string operand(const RustExpr& e, int indent, int min_prec) {
        if (e.kind == RustExpr::Kind::cast) return "(" + render(e, indent) + ")";
        return expr(e, indent, min_prec);
    }

    std::string render(const RustExpr& e, int indent) {
        using K = RustExpr::Kind;
        switch (e.kind) {
        case K::var: return e.name;
        case K::unit: return "()";
        case K::int_lit: {
            std::string s = std::to_string(e.value);
            if (e.suffixed && e.ty) s += e.ty->name;
            return s;
        }
        case K::bool_lit: return e.value ? "true" : "false";
        case K::let: case K::let_tuple: case K::seq: case K::block: return block(e.kind == K::block ? e.kids[0] : e, indent);
        case K::array_repeat: return "[" + expr(e.kids[0], indent) + "; " + expr(e.kids[1], indent) + "]";
        case K::array_list: return "[" + list(e.kids, 0, indent) + "]";
        case K::vec_boxed:
            return "vec![" + expr(e.kids[0], indent) + "; " + expr(e.kids[1], indent) + "].into_boxed_slice()";
        case K::array_to_slice: return expr(e.kids[0], indent, kPostfix) + "[..]";
        case K::index_range: {
            std::string s = expr(e.kids[0], indent, kPostfix) + "[";
            if (e.kids[1].kind != K::unit) s += expr(e.kids[1], indent, 61);
            s += "..";
            if (e.kids[2].kind != K::unit) s += expr(e.kids[2], indent, 61);
            return s + "]";
        }
        case K::borrow: return std::string(e.mut_ ? "&mut " : "&") + expr(e.kids[0], indent, kUnary);
        case K::deref: return "*" + expr(e.kids[0], indent, kUnary);
        case K::field: return expr(e.kids[0], indent, kPostfix) + "." + e.name;
        case K::index: return expr(e.kids[0], indent, kPostfix) + "[" + expr(e.kids[1], indent) + "]";
        case K::assign_var: return e.name + " = " + expr(e.kids[0], indent);
        case K::assign_index:
            return expr(e.kids[0], indent, kPostfix) + "[" + expr(e.kids[1], indent) + "] = " + expr(e.kids[2], indent);
        case K::assign_field:
            return expr(e.kids[0], indent, kPostfix) + "." + e.name + " = " + expr(e.kids[1], indent);
        case K::struct_lit: {
            std::string s = e.name + " { ";
            for (std::size_t i = 0; i < e.kids.size(); ++i) {
                if (i) s += ", ";
                s += e.names[i] + ": " + expr(e.kids[i], indent);
            }
            return s + (e.kids.empty() ? "}" : " }");
        }
        case K::tuple_lit: {
            std::string s = "(" + list(e.kids, 0, indent);
            if (e.kids.size() == 1) s += ",";
            return s + ")";
        }
        case K::call: return e.name + "(" + list(e.kids, 0, indent) + ")";
        case K::method_call: {
            std::string m = e.name;
            if (m == "split_at" && e.mut_) m = "split_at_mut";
            return expr(e.kids[0], indent, kPostfix) + "." + m + "(" + list(e.kids, 1, indent) + ")";
        }
        case K::box_new: return "Box::new(" + expr(e.kids[0], indent) + ")";
        case K::slice_from_ref:
            if (e.mut_) return "core::slice::from_mut(&mut " + expr(e.kids[0], indent, kUnary) + ")";
            return "core::slice::from_ref(&" + expr(e.kids[0], indent, kUnary) + ")";
        case K::if_: {
            std::string s = "if " + expr(e.kids[0], indent, 1) + " " + block(e.kids[1], indent);
            if (e.kids.size() > 2 && e.kids[2].kind != K::unit) {
                if (e.kids[2].kind == K::if_) s += " else " + render(e.kids[2], indent);
                else s += " else " + block(e.kids[2], indent);
            }
            return s;
        }
        case K::while_: return "while " + expr(e.kids[0], indent, 1) + " " + block(e.kids[1], indent);
        case K::return_:
            if (e.kids.empty() || e.kids[0].kind == K::unit) return "return";
            return "return " + expr(e.kids[0], indent);
        case K::break_: return "break";
        case K::binop: {
            int p = binop_prec(e.name);
            bool cmp = p == 30;
            return operand(e.kids[0], indent, cmp ? p + 1 : p) + " " + e.name + " " + operand(e.kids[1], indent, p + 1);
        }
        case K::unop: return e.name + expr(e.kids[0], indent, kUnary);
        case K::cast: return expr(e.kids[0], indent, kUnary) + " as " + print_type(*e.ty);
        }
        return "?";
    }
};

} // namespace

std::string print_expr(const RustExpr& e) { return Printer().expr(e, 0); }

std::string pretty_print(const RustProgram& p) {
    Printer pr;
    std::ostringstream out;
    bool first = true;
    for (const auto& s : p.structs) {
        if (!first) out << "\n";
        first = false;
        if (!s.derives.empty()) {
            out << "#[derive(";
            for (std::size_t i = 0; i < s.derives.size(); ++i) out << (i ? ", " : "") << s.derives[i];
            out << ")]\n";
        }
        out << "pub struct " << s.name;
        if (s.lifetime) out << "<" << *s.lifetime << ">";
        if (s.fields.empty()) {
            out << " {}\n";
            continue;
        }
        out << " {\n";
        for (const auto& [n, t] : s.fields) out << "    pub " << n << ": " << print_type(t, true) << ",\n";
        out << "}\n";
    }
    for (const auto& f : p.fns) {
        if (!first) out << "\n";
        first = false;
        bool lt = !f.lifetimes.empty();
        out << "pub fn " << f.name;
        if (lt) {
            out << "<";
            for (std::size_t i = 0; i < f.lifetimes.size(); ++i) out << (i ? ", " : "") << f.lifetimes[i];
            out << ">";
        }
        out << "(";
        for (std::size_t i = 0; i < f.params.size(); ++i)
            out << (i ? ", " : "") << (i < f.mut_params.size() && f.mut_params[i] ? "mut " : "") << f.params[i].first
                << ": " << print_type(f.params[i].second, lt);
        out << ")";
        if (!f.ret.is_unit()) out << " -> " << print_type(f.ret, lt);
        out << " " << pr.block(f.body, 0) << "\n";
    }
    return out.str();
}

} // namespace c2r
