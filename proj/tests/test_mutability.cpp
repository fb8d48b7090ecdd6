#include "c2r/mutability.hpp"
#include "c2r/pipeline.hpp"

#include <gtest/gtest.h>

using namespace c2r;

namespace {

RustProgram translated(const std::string& body) {
    auto r = run_pipeline("#include <stdint.h>\n" + body, "t.c");
    EXPECT_EQ(r.exit_code, 0) << (r.diagnostics.empty() ? "" : r.diagnostics[0].format());
    return r.translated.value_or(RustProgram{});
}

const char* kChain = R"(void leaf(uint8_t *p) { p[0] = 1; }
void middle(uint8_t *p) { leaf(p + 2); }
void top(uint8_t *p) { middle(p); }
uint8_t reader(uint8_t *p) { return p[0]; }
)";

} // namespace

TEST(Mutability, PropagatesFromCalleeToCaller) {
    RustProgram p = translated(kChain);
    infer_mutability(p);
    for (const char* f : {"leaf", "middle", "top"}) {
        const RustFn* fn = p.find_fn(f);
        ASSERT_NE(fn, nullptr);
        EXPECT_TRUE(fn->params[0].second.mut_) << f;
    }
    EXPECT_FALSE(p.find_fn("reader")->params[0].second.mut_);
}

TEST(Mutability, WorklistMatchesSweep) {
    RustProgram a = translated(kChain), b = a;
    infer_mutability(a);
    infer_mutability_naive(b);
    EXPECT_EQ(a, b);
}

TEST(Mutability, CountsNeverDrop) {
    RustProgram p = translated(kChain);
    MutTrace t = infer_mutability(p);
    ASSERT_FALSE(t.qualifier_counts.empty());
    for (std::size_t i = 1; i < t.qualifier_counts.size(); ++i)
        EXPECT_LE(t.qualifier_counts[i - 1], t.qualifier_counts[i]);
    EXPECT_EQ(t.qualifier_counts.back(), count_mut_qualifiers(p));
}

TEST(Mutability, ErasureRestoresTranslation) {
    RustProgram before = translated(kChain), p = before;
    infer_mutability(p);
    EXPECT_NE(p, before);
    erase_mutability(p);
    EXPECT_EQ(p, before);
}

TEST(Mutability, LetMutOnlyForReassignedLocals) {
    RustProgram p = translated("uint32_t f(void) { uint32_t a = 1; uint32_t b = 2; a = a + b; return a; }\n");
    infer_mutability(p);
    const RustExpr& body = p.fns[0].body;
    ASSERT_EQ(body.kind, RustExpr::Kind::let);
    EXPECT_TRUE(body.mut_);
    ASSERT_EQ(body.kids[1].kind, RustExpr::Kind::let);
    EXPECT_FALSE(body.kids[1].mut_);
}

TEST(Mutability, AllMutIsAnUpperBound) {
    RustProgram a = translated(kChain), b = a;
    infer_mutability(a);
    make_all_mut(b);
    EXPECT_GE(count_mut_qualifiers(b), count_mut_qualifiers(a));
}

TEST(Mutability, TypeHelpers) {
    RustType s = RustType::slice(RustType::base("u8"));
    EXPECT_EQ(is_mutborrow(s), Mode::imm);
    EXPECT_EQ(is_mutborrow(make_mut(s)), Mode::mut_);
}
