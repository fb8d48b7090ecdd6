#include "c2r/c_frontend.hpp"

#include <gtest/gtest.h>

using namespace c2r;

namespace {

std::string code_of(const std::string& src) {
    try {
        parse_and_resolve(src, "t.c");
    } catch (const CompileError& e) {
        return e.diagnostic().code;
    }
    return "";
}

} // namespace

TEST(Lexer, DropsCommentsAndIncludes) {
    auto toks = tokenize("#include <stdint.h>\n// x\nuint8_t /* y */ a;\n");
    ASSERT_EQ(toks.size(), 4u);
    EXPECT_EQ(toks[0].text, "uint8_t");
    EXPECT_EQ(toks[0].loc.line, 3u);
    EXPECT_EQ(toks[3].kind, TokKind::eof);
}

TEST(Lexer, RejectsOtherPreprocessorLines) {
    EXPECT_EQ(code_of("#define N 4\nvoid f(void) {}\n"), "subset-error");
}

TEST(Lexer, VoidCastIsOneToken) {
    auto toks = tokenize("(void)x;");
    EXPECT_EQ(toks[0].kind, TokKind::void_cast);
}

TEST(Parser, StructsFunctionsAndSugar) {
    CProgram p = parse_and_resolve(R"(#include <stdint.h>
struct pt { uint32_t x; uint32_t y; };
uint32_t sum(struct pt *p, uint32_t n) {
    uint32_t s = 0;
    for (uint32_t i = 0; i < n; i++) {
        s += p[i].x;
        s += p->y;
    }
    return s;
}
)");
    ASSERT_EQ(p.structs.size(), 1u);
    ASSERT_EQ(p.functions.size(), 1u);
    const CFunction& f = p.functions[0];
    EXPECT_EQ(f.params.size(), 2u);
    EXPECT_TRUE(f.params[0].type.is_pointer());
    EXPECT_EQ(f.body[1].kind, CStmt::Kind::for_);
}

TEST(Parser, PrintRoundTrip) {
    const char* src = R"(#include <stdint.h>
void f(uint8_t *a, uint32_t n) {
    uint8_t *b = a + n;
    b[0] = a[1] + 2;
}
)";
    CProgram p = parse_and_resolve(src);
    CProgram q = parse_and_resolve(print_c(p));
    EXPECT_TRUE(same_structure(p, q));
}

TEST(Resolver, FillsTypes) {
    CProgram p = parse_and_resolve("#include <stdint.h>\nuint32_t f(uint32_t a) { return a + 1; }\n");
    const CExpr& e = p.functions[0].body[0].exprs[0];
    ASSERT_TRUE(e.type.has_value());
    EXPECT_EQ(*e.type, CType::make_base(BaseType::u32));
}

TEST(Resolver, SubsetErrors) {
    EXPECT_EQ(code_of("void f(void) { g(); }\n"), "name-error");
    EXPECT_EQ(code_of("#include <stdint.h>\nvoid f(uint8_t *a, int32_t i) { a[i] = 1; }\n"), "subset-error");
}

TEST(Resolver, BuiltinsKnown) {
    ASSERT_NE(builtin_function("print_u32"), nullptr);
    EXPECT_EQ(builtin_function("nope"), nullptr);
}
