#include "c2r/c_frontend.hpp"
#include "c2r/symbolic.hpp"

#include <gtest/gtest.h>

using namespace c2r;

namespace {

SymbolicOffset norm(const std::string& expr) {
    CProgram p = parse_and_resolve("#include <stdint.h>\nuint32_t f(uint32_t n, uint32_t m) { return " + expr + "; }\n");
    return sym_normalize(p.functions[0].body[0].exprs[0]);
}

} // namespace

TEST(Symbolic, NormalizesLinearExpressions) {
    SymbolicOffset o = norm("2 * (n + 3) - n + m * 4");
    EXPECT_EQ(o.constant, 6);
    EXPECT_EQ(o.terms.at("n"), 1);
    EXPECT_EQ(o.terms.at("m"), 4);
}

TEST(Symbolic, CancelledTermsDisappear) {
    EXPECT_EQ(norm("n + 1 - n"), SymbolicOffset::of_constant(1));
}

TEST(Symbolic, NonLinearThrows) {
    try {
        norm("n * m");
        FAIL();
    } catch (const CompileError& e) {
        EXPECT_EQ(e.diagnostic().code, "non-linear");
    }
}

TEST(Symbolic, CompareAssumesNonnegativeVariables) {
    auto n = SymbolicOffset::of_var("n");
    auto c = SymbolicOffset::of_constant;
    EXPECT_EQ(sym_compare(c(1), c(2)), Ordering::lt);
    EXPECT_EQ(sym_compare(n, n), Ordering::eq);
    EXPECT_EQ(sym_compare(n + c(1), n), Ordering::gt);
    EXPECT_EQ(sym_compare(c(0), n + c(1)), Ordering::lt);
    EXPECT_EQ(sym_compare(c(4), n), Ordering::unknown);
    EXPECT_EQ(sym_compare(n, SymbolicOffset::of_var("m")), Ordering::unknown);
}

TEST(Symbolic, Evaluate) {
    SymbolicOffset o = SymbolicOffset::of_var("n", 3) + SymbolicOffset::of_constant(2);
    EXPECT_EQ(o.evaluate({{"n", 5}}), 17);
    EXPECT_EQ(to_string(o), "3*n + 2");
}
