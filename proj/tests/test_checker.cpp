#include "c2r/checker.hpp"

#include <gtest/gtest.h>

using namespace c2r;

namespace {

RustType u8() { return RustType::base("u8"); }

RustFn make_fn(std::string name, std::vector<std::pair<std::string, RustType>> params, RustType ret, RustExpr body) {
    RustFn f;
    f.name = std::move(name);
    f.params = std::move(params);
    f.ret = std::move(ret);
    f.body = std::move(body);
    return f;
}

RustExpr at(uint32_t line, RustExpr e) {
    e.loc.line = line;
    return e;
}

RustExpr assign_index(RustExpr base, uint64_t i, uint64_t v) {
    return rx::make(RustExpr::Kind::assign_index, {std::move(base), rx::int_lit(i), rx::int_lit(v, u8())});
}

std::vector<CheckCategory> categories(const RustProgram& p) {
    std::vector<CheckCategory> out;
    for (const auto& d : check_program(p)) out.push_back(d.category);
    return out;
}

} // namespace

TEST(Checker, AcceptsWellFormedProgram) {
    RustProgram p;
    p.fns.push_back(make_fn("put", {{"x", RustType::slice(u8(), true)}}, RustType::unit(),
                            assign_index(rx::var("x"), 0, 1)));
    EXPECT_TRUE(check_program(p).empty());
}

TEST(Checker, UseOfMovedBox) {
    // fn f(x: Box<[u8]>) -> u8 { let y = x; x[0] }
    RustProgram p;
    p.fns.push_back(make_fn("f", {{"x", RustType::boxed(u8())}}, u8(),
                            rx::let("y", std::nullopt, rx::var("x"),
                                    rx::index(at(3, rx::var("x")), rx::int_lit(0)))));
    auto diags = check_program(p);
    ASSERT_EQ(diags.size(), 1u);
    EXPECT_EQ(diags[0].category, CheckCategory::use_after_move_out);
    EXPECT_EQ(diags[0].loc.line, 3u);
    EXPECT_EQ(diags[0].to_diagnostic().code, "use-after-move-out");
}

TEST(Checker, CopyValuesAreNotMoved) {
    RustProgram p;
    p.fns.push_back(make_fn("f", {{"x", RustType::array(u8(), 4)}}, u8(),
                            rx::let("y", std::nullopt, rx::var("x"), rx::index(rx::var("x"), rx::int_lit(0)))));
    EXPECT_TRUE(check_program(p).empty());
}

TEST(Checker, WriteThroughSharedBorrow) {
    RustProgram p;
    p.fns.push_back(make_fn("put", {{"x", RustType::slice(u8())}}, RustType::unit(), assign_index(rx::var("x"), 0, 1)));
    EXPECT_EQ(categories(p), std::vector<CheckCategory>{CheckCategory::write_through_immutable});
}

TEST(Checker, WriteToImmutableLocal) {
    RustExpr assign = rx::make(RustExpr::Kind::assign_var, {rx::int_lit(2)});
    assign.name = "a";
    RustProgram p;
    p.fns.push_back(make_fn("f", {}, RustType::unit(), rx::let("a", RustType::base("u32"), rx::int_lit(1), assign)));
    EXPECT_EQ(categories(p), std::vector<CheckCategory>{CheckCategory::write_through_immutable});
    p.fns[0].body.mut_ = true;
    EXPECT_TRUE(check_program(p).empty());
}

TEST(Checker, TupleComponentWriteNeedsNoLetMut) {
    RustType comp = RustType::slice(u8(), true);
    RustType pair = RustType::tuple({comp, comp});
    RustExpr write = assign_index(rx::field(rx::var("p"), "0"), 0, 1);
    RustProgram p;
    p.fns.push_back(make_fn("f", {{"a", comp}, {"b", comp}}, RustType::unit(),
                            rx::let("p", pair, rx::make(RustExpr::Kind::tuple_lit, {rx::var("a"), rx::var("b")}), write)));
    EXPECT_TRUE(check_program(p).empty());
}

TEST(Checker, TypeMismatch) {
    RustProgram p;
    p.fns.push_back(make_fn("f", {{"x", RustType::slice(u8())}}, u8(), rx::var("x")));
    EXPECT_EQ(categories(p), std::vector<CheckCategory>{CheckCategory::type_mismatch});
}
