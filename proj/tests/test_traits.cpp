#include "c2r/traits.hpp"

#include "support/trait_oracle.hpp"

#include <gtest/gtest.h>

using namespace c2r;

namespace {

RustStruct make(std::string name, std::vector<std::pair<std::string, RustType>> fields) {
    RustStruct s;
    s.name = std::move(name);
    s.fields = std::move(fields);
    return s;
}

std::map<std::string, std::vector<std::string>> derives_of(const std::vector<RustStruct>& structs) {
    RustProgram p;
    p.structs = structs;
    apply_derives(p, derive_traits(p));
    std::map<std::string, std::vector<std::string>> out;
    for (const auto& s : p.structs) out[s.name] = s.derives;
    return out;
}

using Names = std::vector<std::string>;

} // namespace

TEST(Traits, PlainDataGetsEverything) {
    auto d = derives_of({make("P", {{"x", RustType::base("u32")}, {"y", RustType::array(RustType::base("u8"), 4)}})});
    EXPECT_EQ(d["P"], (Names{"Clone", "Copy", "PartialEq"}));
}

TEST(Traits, BoxBlocksCopy) {
    auto d = derives_of({make("O", {{"data", RustType::boxed(RustType::base("u8"))}})});
    EXPECT_EQ(d["O"], (Names{"Clone", "PartialEq"}));
}

TEST(Traits, MutableBorrowBlocksCloneAndCopy) {
    auto d = derives_of({make("V", {{"data", RustType::slice(RustType::base("u8"), true, "'a")}})});
    EXPECT_EQ(d["V"], (Names{"PartialEq"}));
}

TEST(Traits, CyclesKeepTraitsUnlessBroken) {
    auto cyc = derives_of({make("A", {{"b", RustType::named("B")}}), make("B", {{"a", RustType::named("A")}})});
    EXPECT_EQ(cyc["A"], (Names{"Clone", "Copy", "PartialEq"}));
    auto broken = derives_of({make("A", {{"b", RustType::named("B")}}),
                              make("B", {{"a", RustType::named("A")}, {"h", RustType::boxed(RustType::base("u8"))}})});
    EXPECT_EQ(broken["A"], (Names{"Clone", "PartialEq"}));
    EXPECT_EQ(broken["B"], (Names{"Clone", "PartialEq"}));
}

TEST(Traits, AgreesWithBruteForce) {
    std::vector<RustStruct> structs = {
        make("A", {{"x", RustType::tuple({RustType::named("B"), RustType::base("u8")})}}),
        make("B", {{"s", RustType::slice(RustType::named("C"))}}),
        make("C", {{"f", RustType::function({}, RustType::unit())}}),
    };
    auto expected = oracle::brute_force_derives(structs);
    auto got = derives_of(structs);
    for (const auto& s : structs) EXPECT_EQ(got[s.name], expected[s.name]) << s.name;
}

TEST(Traits, CanonicalOrder) {
    EXPECT_EQ(derive_list({Trait::partial_eq, Trait::copy, Trait::clone}), (Names{"Clone", "Copy", "PartialEq"}));
}
