#include "c2r/harness.hpp"

#include <gtest/gtest.h>

#include <fstream>

using namespace c2r;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("c2r_harness_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

void write(const fs::path& p, const std::string& text) {
    fs::create_directories(p.parent_path());
    std::ofstream(p, std::ios::binary) << text;
}

HarnessOptions golden_only() {
    HarnessOptions o;
    o.differential = false;
    o.jobs = 1;
    return o;
}

const char* kProgram = "#include <stdint.h>\nvoid run(void) { print_u32(7); }\n";

} // namespace

TEST(Harness, EmptyCorpus) {
    TempDir d;
    auto cases = load_corpus(d.path);
    EXPECT_TRUE(cases.empty());
    auto results = run_corpus(cases, Toolchains{}, golden_only());
    EXPECT_TRUE(results.empty());
    EXPECT_NE(summary_json(results).find("\"total\""), std::string::npos);
}

TEST(Harness, GoldenMatchAndMismatch) {
    TempDir d;
    write(d.path / "good" / "input.c", kProgram);
    write(d.path / "good" / "golden.rs", "pub fn run() {\n    print_u32(7)\n}\n");
    write(d.path / "bad" / "input.c", kProgram);
    write(d.path / "bad" / "golden.rs", "pub fn run() {\n    print_u32(8)\n}\n");
    auto results = run_corpus(load_corpus(d.path), Toolchains{}, golden_only());
    ASSERT_EQ(results.size(), 2u);
    std::size_t fails = 0;
    for (const auto& r : results) {
        if (r.name == "good") EXPECT_EQ(r.verdict, Verdict::pass) << r.detail;
        if (r.verdict == Verdict::fail) ++fails;
    }
    EXPECT_EQ(fails, 1u);
}

TEST(Harness, ExpectedErrorCase) {
    TempDir d;
    write(d.path / "e" / "input.c", "void run(void) { g(); }\n");
    write(d.path / "e" / "expected_error", "name-error\n");
    auto results = run_corpus(load_corpus(d.path), Toolchains{}, golden_only());
    ASSERT_EQ(results.size(), 1u);
    EXPECT_EQ(results[0].verdict, Verdict::pass) << results[0].detail;
}

TEST(Harness, MissingToolchainsSkip) {
    TempDir d;
    write(d.path / "x" / "input.c", kProgram);
    HarnessOptions o;
    o.jobs = 1;
    auto results = run_corpus(load_corpus(d.path), Toolchains{}, o);
    ASSERT_EQ(results.size(), 1u);
    EXPECT_EQ(results[0].verdict, Verdict::skipped);
}

TEST(Harness, MalformedCaseDirectory) {
    TempDir d;
    fs::create_directories(d.path / "empty");
    EXPECT_THROW(load_case(d.path / "empty"), CompileError);
}

TEST(Harness, NormalizeFreshNames) {
    EXPECT_EQ(normalize_fresh_names("let (x_l12, x_r12) = x.split_at(3); x_r12[0]"),
              "let (x_l, x_r) = x.split_at(3); x_r[0]");
    EXPECT_EQ(normalize_fresh_names("max_len x_left"), "max_len x_left");
}

TEST(Harness, ProcessCapture) {
    auto r = run_process({"/bin/sh", "-c", "cat; echo err >&2; exit 3"}, "in");
    EXPECT_EQ(r.exit_code, 3);
    EXPECT_EQ(r.out, "in");
    EXPECT_EQ(r.err, "err\n");
}

TEST(Harness, MutSitesRoundTrip) {
    auto pr = run_pipeline("#include <stdint.h>\nvoid f(uint8_t *p) { p[0] = 1; }\n", "t.c");
    ASSERT_TRUE(pr.program);
    auto sites = mut_sites(*pr.program);
    ASSERT_EQ(sites.size(), 1u);
    RustProgram flipped = flip_mut(*pr.program, sites[0]);
    EXPECT_EQ(pretty_print(flipped).find("mut"), std::string::npos);
}
