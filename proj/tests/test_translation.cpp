#include "c2r/harness.hpp"
#include "c2r/pipeline.hpp"

#include <gtest/gtest.h>

using namespace c2r;

namespace {

const char* kPrelude = "#include <stdint.h>\n#include <stdlib.h>\n";

PipelineResult tr(const std::string& body, const std::string& config = {}) {
    PipelineOptions o;
    o.config_text = config;
    return run_pipeline(std::string(kPrelude) + body, "t.c", o);
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

std::string error_code(const PipelineResult& r) {
    for (const auto& d : r.diagnostics)
        if (d.severity == Severity::error) return d.code;
    return "";
}

} // namespace

TEST(Translation, ScalarsAndCalls) {
    auto r = tr("uint32_t add(uint32_t a, uint32_t b) { return a + b; }\nvoid run(void) { print_u32(add(1, 2)); }\n");
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_TRUE(contains(r.rust, "pub fn add(a: u32, b: u32) -> u32 {\n    a.wrapping_add(b)\n}"));
    EXPECT_TRUE(contains(r.rust, "print_u32(add(1, 2))"));
}

TEST(Translation, PointerParameterIsSlice) {
    auto r = tr("void put(uint8_t *p) { p[1] = 7; }\nuint8_t get(uint8_t *p) { return p[0]; }\n");
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_TRUE(contains(r.rust, "pub fn put(p: &mut [u8])"));
    EXPECT_TRUE(contains(r.rust, "pub fn get(p: &[u8]) -> u8"));
}

TEST(Translation, AddressOfScalarBecomesOneElementSlice) {
    auto r = tr("void inc(uint32_t *p) { p[0] = p[0] + 1; }\nvoid run(void) { uint32_t x = 1; inc(&x); print_u32(x); }\n");
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_TRUE(contains(r.rust, "core::slice::from_mut(&mut x)"));
    EXPECT_TRUE(contains(r.rust, "let mut x"));
}

TEST(Translation, PointerArithmeticSplits) {
    auto r = tr("void f(uint8_t *x) { uint8_t *y = x + 4; y[0] = 1; x[0] = 2; }\n");
    ASSERT_EQ(r.exit_code, 0);
    std::string n = normalize_fresh_names(r.rust);
    EXPECT_TRUE(contains(n, "split_at_mut(4)"));
    EXPECT_TRUE(contains(n, "y_r[0] = 1;"));
    EXPECT_TRUE(contains(n, "y_l[0] = 2;"));
}

TEST(Translation, ReadOnlySplitsStayShared) {
    auto r = tr("uint8_t f(uint8_t *x) { uint8_t *y = x + 4; return y[0]; }\n");
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_TRUE(contains(r.rust, ".split_at(4)"));
    EXPECT_FALSE(contains(r.rust, "mut"));
}

TEST(Translation, HeapBecomesBoxedSlice) {
    auto r = tr("struct s { uint8_t *data; };\nvoid run(void) {\n    uint8_t *x = malloc(16 * sizeof(uint8_t));\n"
                "    struct s st = { .data = x };\n    st.data[0] = 1;\n}\n");
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_TRUE(contains(r.rust, "vec![0u8; 16].into_boxed_slice()"));
    EXPECT_TRUE(contains(r.rust, "pub data: Box<[u8]>"));
}

TEST(Translation, OwnedOverrideMovesStackArray) {
    auto r = tr("struct s { uint8_t *data; };\nvoid run(void) {\n    uint8_t x[4] = { 0 };\n"
                "    struct s st = { .data = x };\n    st.data[0] = 1;\n}\n",
                "[ownership]\ns = \"owned\"\n");
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_TRUE(contains(r.rust, "Box::new(x)"));
}

TEST(Translation, UseAfterReverseConversionIsRejected) {
    auto r = tr("struct s { uint8_t *data; };\nvoid run(void) {\n    uint8_t x[4] = { 0 };\n"
                "    struct s st = { .data = x };\n    print_u8(x[0]);\n}\n",
                "[ownership]\ns = \"owned\"\n");
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_EQ(error_code(r), "use-after-move");
    ASSERT_FALSE(r.diagnostics.empty());
    EXPECT_EQ(r.diagnostics.back().loc.line, 7u);
}

TEST(Translation, BorrowedStructTakesLifetime) {
    auto r = tr("struct view { uint8_t *data; };\nuint8_t first(struct view v) { return v.data[0]; }\n");
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_TRUE(contains(r.rust, "pub struct View<'a>"));
    EXPECT_TRUE(contains(r.rust, "pub data: &'a [u8]"));
}

TEST(Translation, TupleLowering) {
    auto r = tr("struct pair { uint32_t a; uint32_t b; };\nuint32_t sum(void) {\n"
                "    struct pair p = { .a = 1, .b = 2 };\n    return p.a + p.b;\n}\n",
                "[tuples]\nnames = [\"pair\"]\n");
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_FALSE(contains(r.rust, "struct Pair"));
    EXPECT_TRUE(contains(r.rust, "p.0.wrapping_add(p.1)"));
}

TEST(Translation, OverlapIsAnError) {
    auto r = tr("void run(void) {\n    uint8_t x[16] = { 0 };\n    uint8_t *p = x + 0;\n    uint8_t *q = x + 8;\n"
                "    q[0] = 1;\n    p[9] = 2;\n}\n");
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_EQ(error_code(r), "overlap-error");
}

TEST(Translation, FallbackWarningAndStrictMode) {
    std::string src = std::string(kPrelude) +
                      "void f(uint8_t *x, uint32_t n) {\n    uint8_t *a = x + 4;\n    uint8_t *b = x + n;\n"
                      "    a[0] = 1;\n    b[0] = 2;\n}\n";
    auto lax = run_pipeline(src, "t.c");
    ASSERT_EQ(lax.exit_code, 0);
    std::size_t warnings = 0;
    for (const auto& d : lax.diagnostics) warnings += d.code == "split-fallback" && d.severity == Severity::warning;
    EXPECT_EQ(warnings, 1u);
    PipelineOptions strict;
    strict.strict_splits = true;
    EXPECT_EQ(run_pipeline(src, "t.c", strict).exit_code, 1);
}

TEST(Translation, NoUnsafeAnywhere) {
    auto r = tr("void f(uint8_t *x, uint32_t n) { uint8_t *y = x + n; y[0] = x[0]; }\n");
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_FALSE(contains(r.rust, "unsafe"));
}
