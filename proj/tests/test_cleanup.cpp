#include "c2r/cleanup.hpp"
#include "c2r/pipeline.hpp"

#include <gtest/gtest.h>

using namespace c2r;

namespace {

std::string body_of(RustExpr e) {
    RustProgram p;
    RustFn f;
    f.name = "f";
    f.ret = RustType::base("u8");
    f.body = std::move(e);
    p.fns.push_back(f);
    cleanup_program(p);
    return print_expr(p.fns[0].body);
}

} // namespace

TEST(Cleanup, DerefOfBorrow) {
    EXPECT_EQ(body_of(rx::index(rx::deref(rx::borrow(rx::var("x"))), rx::int_lit(0))), "x[0]");
}

TEST(Cleanup, FullRangeThenIndex) {
    EXPECT_EQ(body_of(rx::index(rx::make(RustExpr::Kind::array_to_slice, {rx::var("x")}), rx::int_lit(1))), "x[1]");
}

TEST(Cleanup, LetThenReturnSameName) {
    EXPECT_EQ(body_of(rx::let("r", std::nullopt, rx::var("x"), rx::var("r"))), "x");
}

TEST(Cleanup, TrailingReturnBecomesTail) {
    EXPECT_EQ(body_of(rx::make(RustExpr::Kind::return_, {rx::var("x")})), "x");
}

TEST(Cleanup, Idempotent) {
    const char* src = R"(#include <stdint.h>
uint32_t f(uint8_t *x, uint32_t n) {
    uint32_t s = 0;
    for (uint32_t i = 0; i < n; i++) {
        uint8_t *y = x + i;
        s += y[0];
    }
    return s;
}
)";
    auto r = run_pipeline(src, "t.c");
    ASSERT_EQ(r.exit_code, 0);
    RustProgram again = *r.program;
    cleanup_program(again);
    EXPECT_EQ(again, *r.program);
}

TEST(Cleanup, DisabledLeavesReturns) {
    PipelineOptions o;
    o.no_cleanup = true;
    auto r = run_pipeline("#include <stdint.h>\nuint32_t f(uint32_t a) { return a; }\n", "t.c", o);
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_NE(r.rust.find("return a"), std::string::npos);
}
