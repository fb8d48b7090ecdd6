#include "c2r/c_frontend.hpp"

#include <set>

namespace c2r {

namespace {

const std::set<std::string> kBaseTypeWords = {
    "uint8_t", "uint16_t", "uint32_t", "uint64_t", "int8_t", "int16_t", "int32_t",
    "int64_t", "int", "unsigned", "size_t", "bool", "void", "struct", "const",
};

const std::set<std::string> kRejectedKeywords = {
    "goto", "switch", "do", "union", "typedef", "enum", "continue", "float", "double",
    "char", "long", "short", "volatile", "register", "extern",
};

int precedence(const std::string& op) {
    if (op == "||") return 1;
    if (op == "&&") return 2;
    if (op == "|") return 3;
    if (op == "^") return 4;
    if (op == "&") return 5;
    if (op == "==" || op == "!=") return 6;
    if (op == "<" || op == ">" || op == "<=" || op == ">=") return 7;
    if (op == "<<" || op == ">>") return 8;
    if (op == "+" || op == "-") return 9;
    if (op == "*" || op == "/" || op == "%") return 10;
    return -1;
}

CExpr make_int(uint64_t v, SourceLoc loc) {
    CExpr e;
    e.kind = CExpr::Kind::int_lit;
    e.value = v;
    e.loc = std::move(loc);
    return e;
}

CExpr make_binop(std::string op, CExpr l, CExpr r, SourceLoc loc) {
    CExpr e;
    e.kind = CExpr::Kind::binop;
    e.op = std::move(op);
    e.kids.push_back(std::move(l));
    e.kids.push_back(std::move(r));
    e.loc = std::move(loc);
    return e;
}

class Parser {
public:
    explicit Parser(const std::vector<Token>& toks) : toks_(toks) {}

    CProgram program() {
        CProgram prog;
        while (!at_eof()) {
            skip_storage();
            if (cur().is("struct") && peek(1).kind == TokKind::ident && peek(2).is("{")) {
                prog.structs.push_back(struct_def());
                continue;
            }
            reject_keyword();
            SourceLoc loc = cur().loc;
            CType ret = parse_type();
            std::string name = expect_ident("function name");
            if (!cur().is("("))
                throw CompileError("subset-error", loc, "global variables are outside mini-C");
            CFunction fn;
            fn.name = name;
            fn.ret = ret;
            fn.loc = loc;
            fn.params = params();
            if (cur().is(";")) {
                next();
                prog.prototypes.push_back(std::move(fn));
                continue;
            }
            fn.body = block();
            prog.functions.push_back(std::move(fn));
        }
        return prog;
    }

private:
    const Token& cur() const { return toks_[pos_]; }
    const Token& peek(std::size_t k) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
    bool at_eof() const { return cur().kind == TokKind::eof; }
    const Token& next() {
        const Token& t = toks_[pos_];
        if (pos_ + 1 < toks_.size()) ++pos_;
        return t;
    }

    [[noreturn]] void fail(const std::string& expected) const {
        std::string found = at_eof() ? "end of input" : "'" + cur().text + "'";
        throw CompileError("parse-error", cur().loc, "expected " + expected + ", found " + found);
    }

    void expect(std::string_view p) {
        if (!cur().is(p)) fail("'" + std::string(p) + "'");
        next();
    }

    std::string expect_ident(const std::string& what) {
        if (cur().kind != TokKind::ident) fail(what);
        return next().text;
    }

    void skip_storage() {
        while (cur().is("static") || cur().is("inline")) next();
    }

    void reject_keyword() const {
        if (cur().kind == TokKind::ident && kRejectedKeywords.count(cur().text))
            throw CompileError("subset-error", cur().loc, "'" + cur().text + "' is outside mini-C");
    }

    bool is_type_start() const {
        return cur().kind == TokKind::ident && kBaseTypeWords.count(cur().text);
    }

    CType parse_base_type() {
        while (cur().is("const")) next();
        reject_keyword();
        if (cur().kind != TokKind::ident) fail("type");
        SourceLoc loc = cur().loc;
        std::string w = next().text;
        CType t;
        if (w == "uint8_t") t = CType::make_base(BaseType::u8);
        else if (w == "uint16_t") t = CType::make_base(BaseType::u16);
        else if (w == "uint32_t") t = CType::make_base(BaseType::u32);
        else if (w == "uint64_t") t = CType::make_base(BaseType::u64);
        else if (w == "int8_t") t = CType::make_base(BaseType::i8);
        else if (w == "int16_t") t = CType::make_base(BaseType::i16);
        else if (w == "int32_t" || w == "int") t = CType::make_base(BaseType::i32);
        else if (w == "int64_t") t = CType::make_base(BaseType::i64);
        else if (w == "size_t") t = CType::make_base(BaseType::usize);
        else if (w == "bool") t = CType::make_base(BaseType::boolean);
        else if (w == "void") t = CType::make_void();
        else if (w == "unsigned") {
            if (cur().is("int")) next();
            else if (cur().is("char") || cur().is("long") || cur().is("short"))
                throw CompileError("subset-error", cur().loc, "'unsigned " + cur().text + "' is outside mini-C");
            t = CType::make_base(BaseType::u32);
        } else if (w == "struct") {
            t = CType::struct_named(expect_ident("struct name"));
        } else {
            throw CompileError("parse-error", loc, "expected type, found '" + w + "'");
        }
        while (cur().is("const")) next();
        return t;
    }

    CType parse_type() {
        CType t = parse_base_type();
        while (cur().is("*")) {
            next();
            t = CType::pointer_to(std::move(t));
            while (cur().is("const")) next();
        }
        if (cur().is("(") && peek(1).is("*"))
            throw CompileError("subset-error", cur().loc, "function pointers are outside mini-C");
        return t;
    }

    uint64_t array_length() {
        expect("[");
        if (cur().kind != TokKind::integer)
            throw CompileError("subset-error", cur().loc, "array length must be an integer constant (no VLAs)");
        SourceLoc loc = cur().loc;
        uint64_t n = next().value;
        if (n == 0) throw CompileError("subset-error", loc, "array length must be positive");
        expect("]");
        return n;
    }

    std::vector<CParam> params() {
        expect("(");
        std::vector<CParam> out;
        if (cur().is("void") && peek(1).is(")")) {
            next();
            next();
            return out;
        }
        if (cur().is(")")) {
            next();
            return out;
        }
        while (true) {
            CParam p;
            p.type = parse_type();
            p.name = expect_ident("parameter name");
            if (cur().is("[")) {
                if (peek(1).is("]")) {
                    next();
                    next();
                } else {
                    array_length();
                }
                p.type = CType::pointer_to(p.type);
            }
            out.push_back(std::move(p));
            if (cur().is(",")) {
                next();
                continue;
            }
            expect(")");
            return out;
        }
    }

    CStruct struct_def() {
        CStruct s;
        s.loc = cur().loc;
        expect("struct");
        s.name = expect_ident("struct name");
        expect("{");
        while (!cur().is("}")) {
            CType t = parse_type();
            std::string f = expect_ident("field name");
            if (cur().is("[")) t = CType::array_of(t, array_length());
            if (cur().is(":")) throw CompileError("subset-error", cur().loc, "bitfields are outside mini-C");
            expect(";");
            s.fields.emplace_back(std::move(f), std::move(t));
        }
        expect("}");
        expect(";");
        return s;
    }

    std::vector<CStmt> block() {
        expect("{");
        std::vector<CStmt> out;
        while (!cur().is("}")) {
            if (at_eof()) fail("'}'");
            out.push_back(statement());
        }
        next();
        return out;
    }

    std::vector<CStmt> body_or_single() {
        if (cur().is("{")) return block();
        std::vector<CStmt> out;
        out.push_back(statement());
        return out;
    }

    CStmt statement() {
        SourceLoc loc = cur().loc;
        reject_keyword();
        CStmt s;
        s.loc = loc;
        if (cur().is("{")) {
            s.kind = CStmt::Kind::block;
            s.body = block();
            return s;
        }
        if (cur().is(";")) {
            next();
            s.kind = CStmt::Kind::block;
            return s;
        }
        if (cur().kind == TokKind::void_cast) {
            next();
            s.kind = CStmt::Kind::void_cast;
            s.name = expect_ident("variable after (void)");
            expect(";");
            return s;
        }
        if (cur().is("return")) {
            next();
            s.kind = CStmt::Kind::ret;
            if (!cur().is(";")) s.exprs.push_back(expr());
            expect(";");
            return s;
        }
        if (cur().is("break")) {
            next();
            expect(";");
            s.kind = CStmt::Kind::break_;
            return s;
        }
        if (cur().is("if")) {
            next();
            s.kind = CStmt::Kind::if_;
            expect("(");
            s.exprs.push_back(expr());
            expect(")");
            s.body = body_or_single();
            if (cur().is("else")) {
                next();
                s.else_body = body_or_single();
            }
            return s;
        }
        if (cur().is("while")) {
            next();
            s.kind = CStmt::Kind::while_;
            expect("(");
            s.exprs.push_back(expr());
            expect(")");
            s.body = body_or_single();
            return s;
        }
        if (cur().is("for")) {
            next();
            s.kind = CStmt::Kind::for_;
            expect("(");
            if (!cur().is(";")) {
                if (is_type_start()) s.for_init.push_back(declaration());
                else {
                    s.for_init.push_back(simple());
                    expect(";");
                }
            } else {
                next();
            }
            if (cur().is(";")) {
                CExpr t;
                t.kind = CExpr::Kind::bool_lit;
                t.value = 1;
                t.loc = cur().loc;
                s.exprs.push_back(t);
            } else {
                s.exprs.push_back(expr());
            }
            expect(";");
            if (!cur().is(")")) s.for_step.push_back(simple());
            expect(")");
            s.body = body_or_single();
            return s;
        }
        if ((cur().is("memset") || cur().is("memcpy")) && peek(1).is("(")) {
            s.kind = next().text == "memset" ? CStmt::Kind::memset : CStmt::Kind::memcpy;
            expect("(");
            s.exprs.push_back(expr());
            expect(",");
            s.exprs.push_back(expr());
            expect(",");
            s.exprs.push_back(expr());
            expect(")");
            expect(";");
            return s;
        }
        if (is_type_start()) return declaration();
        CStmt st = simple();
        expect(";");
        return st;
    }

    CStmt declaration() {
        CStmt s;
        s.loc = cur().loc;
        CType t = parse_type();
        s.name = expect_ident("variable name");
        if (cur().is("[")) {
            s.kind = CStmt::Kind::decl_array;
            s.type = t;
            s.len = array_length();
            if (cur().is("[")) throw CompileError("subset-error", cur().loc, "multi-dimensional arrays are outside mini-C");
            if (cur().is("=")) {
                next();
                s.has_init = true;
                expect("{");
                while (!cur().is("}")) {
                    s.exprs.push_back(expr());
                    if (!cur().is(",")) break;
                    next();
                }
                expect("}");
            }
        } else {
            s.kind = CStmt::Kind::decl_var;
            s.type = t;
            if (cur().is("=")) {
                next();
                if (cur().is("{")) s.exprs.push_back(struct_init());
                else s.exprs.push_back(expr());
            }
        }
        if (cur().is(",")) throw CompileError("subset-error", cur().loc, "one declarator per declaration");
        expect(";");
        return s;
    }

    CExpr struct_init() {
        CExpr e;
        e.kind = CExpr::Kind::struct_init;
        e.loc = cur().loc;
        expect("{");
        while (!cur().is("}")) {
            std::string field;
            if (cur().is(".")) {
                next();
                field = expect_ident("field designator");
                expect("=");
            }
            e.field_names.push_back(field);
            e.kids.push_back(expr());
            if (!cur().is(",")) break;
            next();
        }
        expect("}");
        return e;
    }

    // Assignment, compound assignment, increment, or expression statement.
    CStmt simple() {
        CStmt s;
        s.loc = cur().loc;
        if (cur().is("++") || cur().is("--")) {
            std::string op = next().text == "++" ? "+" : "-";
            CExpr target = unary();
            s.kind = CStmt::Kind::assign;
            CExpr rhs = make_binop(op, target, make_int(1, s.loc), s.loc);
            s.exprs = {std::move(target), std::move(rhs)};
            return s;
        }
        CExpr lhs = expr();
        if (cur().is("=")) {
            next();
            s.kind = CStmt::Kind::assign;
            CExpr rhs = expr();
            s.exprs = {std::move(lhs), std::move(rhs)};
            return s;
        }
        static const std::set<std::string> compound = {"+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>="};
        if (compound.count(cur().text) && cur().kind == TokKind::punct) {
            std::string op = next().text;
            op.pop_back();
            CExpr rhs = expr();
            s.kind = CStmt::Kind::assign;
            CExpr full = make_binop(op, lhs, std::move(rhs), s.loc);
            s.exprs = {std::move(lhs), std::move(full)};
            return s;
        }
        if (cur().is("++") || cur().is("--")) {
            std::string op = next().text == "++" ? "+" : "-";
            s.kind = CStmt::Kind::assign;
            CExpr rhs = make_binop(op, lhs, make_int(1, s.loc), s.loc);
            s.exprs = {std::move(lhs), std::move(rhs)};
            return s;
        }
        s.kind = CStmt::Kind::expr;
        s.exprs.push_back(std::move(lhs));
        return s;
    }

    CExpr expr() { return binary(1); }

    CExpr binary(int min_prec) {
        CExpr lhs = unary();
        while (true) {
            if (cur().is("?")) throw CompileError("subset-error", cur().loc, "conditional expressions are outside mini-C");
            if (cur().kind != TokKind::punct) return lhs;
            int p = precedence(cur().text);
            if (p < min_prec) return lhs;
            SourceLoc loc = cur().loc;
            std::string op = next().text;
            CExpr rhs = binary(p + 1);
            lhs = make_binop(op, std::move(lhs), std::move(rhs), loc);
        }
    }

    CExpr unary() {
        SourceLoc loc = cur().loc;
        if (cur().is("-") || cur().is("!") || cur().is("~")) {
            CExpr e;
            e.kind = CExpr::Kind::unop;
            e.op = next().text;
            e.loc = loc;
            e.kids.push_back(unary());
            return e;
        }
        if (cur().is("*")) {
            next();
            CExpr e;
            e.kind = CExpr::Kind::deref;
            e.loc = loc;
            e.kids.push_back(unary());
            return e;
        }
        if (cur().is("&")) {
            next();
            CExpr e;
            e.kind = CExpr::Kind::addr_of;
            e.loc = loc;
            e.kids.push_back(unary());
            return e;
        }
        if (cur().is("++") || cur().is("--"))
            throw CompileError("subset-error", loc, "increment inside an expression is outside mini-C");
        if (cur().is("(") && peek(1).kind == TokKind::ident && kBaseTypeWords.count(peek(1).text)) {
            next();
            CExpr e;
            e.kind = CExpr::Kind::cast;
            e.loc = loc;
            e.target = parse_type();
            expect(")");
            e.kids.push_back(unary());
            return e;
        }
        return postfix(primary());
    }

    CExpr postfix(CExpr e) {
        while (true) {
            SourceLoc loc = cur().loc;
            if (cur().is("[")) {
                next();
                CExpr idx = expr();
                expect("]");
                CExpr n;
                n.kind = CExpr::Kind::index;
                n.loc = loc;
                n.kids = {std::move(e), std::move(idx)};
                e = std::move(n);
            } else if (cur().is(".")) {
                next();
                CExpr n;
                n.kind = CExpr::Kind::field;
                n.loc = loc;
                n.name = expect_ident("field name");
                n.kids.push_back(std::move(e));
                e = std::move(n);
            } else if (cur().is("->")) {
                next();
                CExpr d;
                d.kind = CExpr::Kind::deref;
                d.loc = loc;
                d.kids.push_back(std::move(e));
                CExpr n;
                n.kind = CExpr::Kind::field;
                n.loc = loc;
                n.name = expect_ident("field name");
                n.kids.push_back(std::move(d));
                e = std::move(n);
            } else {
                return e;
            }
        }
    }

    CType sizeof_operand() {
        SourceLoc loc = cur().loc;
        expect("sizeof");
        if (!cur().is("(") || !(peek(1).kind == TokKind::ident && kBaseTypeWords.count(peek(1).text)))
            throw CompileError("subset-error", loc, "only sizeof(type) is supported");
        next();
        CType t = parse_type();
        expect(")");
        return t;
    }

    CExpr malloc_call(SourceLoc loc, bool is_calloc) {
        expect("(");
        CExpr m;
        m.kind = CExpr::Kind::malloc;
        m.loc = loc;
        m.zeroed = is_calloc;
        if (is_calloc) {
            m.kids.push_back(expr());
            expect(",");
            if (!cur().is("sizeof"))
                throw CompileError("subset-error", cur().loc, "calloc must be written calloc(N, sizeof(type))");
            m.target = sizeof_operand();
            expect(")");
            return m;
        }
        CExpr arg = expr();
        expect(")");
        if (arg.kind == CExpr::Kind::sizeof_type) {
            m.target = arg.target;
            m.kids.push_back(make_int(1, loc));
            return m;
        }
        if (arg.kind == CExpr::Kind::binop && arg.op == "*") {
            if (arg.kids[1].kind == CExpr::Kind::sizeof_type) {
                m.target = arg.kids[1].target;
                m.kids.push_back(std::move(arg.kids[0]));
                return m;
            }
            if (arg.kids[0].kind == CExpr::Kind::sizeof_type) {
                m.target = arg.kids[0].target;
                m.kids.push_back(std::move(arg.kids[1]));
                return m;
            }
        }
        throw CompileError("subset-error", loc,
                           "heap allocation size must be expressed as N * sizeof(type)");
    }

    CExpr primary() {
        SourceLoc loc = cur().loc;
        if (cur().kind == TokKind::integer) return make_int(next().value, loc);
        if (cur().is("(")) {
            next();
            CExpr e = expr();
            expect(")");
            return e;
        }
        if (cur().is("sizeof")) {
            CExpr e;
            e.kind = CExpr::Kind::sizeof_type;
            e.loc = loc;
            e.target = sizeof_operand();
            return e;
        }
        if (cur().kind != TokKind::ident) fail("expression");
        reject_keyword();
        std::string name = next().text;
        if (name == "true" || name == "false") {
            CExpr e;
            e.kind = CExpr::Kind::bool_lit;
            e.value = name == "true";
            e.loc = loc;
            return e;
        }
        if (name == "NULL") throw CompileError("subset-error", loc, "NULL pointers are outside mini-C");
        if (name == "malloc" || name == "calloc") return malloc_call(loc, name == "calloc");
        if (name == "memset" || name == "memcpy")
            throw CompileError("subset-error", loc, name + " is only supported as a statement");
        if (cur().is("(")) {
            next();
            CExpr call;
            call.kind = CExpr::Kind::call;
            call.name = name;
            call.loc = loc;
            if (!cur().is(")")) {
                while (true) {
                    call.kids.push_back(expr());
                    if (!cur().is(",")) break;
                    next();
                }
            }
            expect(")");
            return call;
        }
        CExpr v;
        v.kind = CExpr::Kind::var;
        v.name = name;
        v.loc = loc;
        return v;
    }

    const std::vector<Token>& toks_;
    std::size_t pos_ = 0;
};

} // namespace

CProgram parse_program(const std::vector<Token>& tokens) {
    if (tokens.empty()) return {};
    return Parser(tokens).program();
}

} // namespace c2r
