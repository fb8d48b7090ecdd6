#include "c2r/harness.hpp"
#include "c2r/pipeline.hpp"
#include "c2r/rust_json.hpp"

#include <gtest/gtest.h>

#include <fstream>

using namespace c2r;

namespace {

fs::path corpus_input(const std::string& name) { return fs::path(C2R_SOURCE_DIR) / "corpus" / name / "input.c"; }

} // namespace

TEST(Pipeline, ExitCodes) {
    EXPECT_EQ(run_pipeline("#include <stdint.h>\nvoid f(void) {}\n", "t.c").exit_code, 0);
    auto bad = run_pipeline("void f(void) { g(); }\n", "t.c");
    EXPECT_EQ(bad.exit_code, 1);
    ASSERT_FALSE(bad.diagnostics.empty());
    EXPECT_TRUE(bad.rust.empty());
}

TEST(Pipeline, InternalCodesExitTwo) {
    Diagnostic d;
    d.code = "type-mismatch";
    EXPECT_EQ(exit_code_for(d), 2);
    d.code = "overlap-error";
    EXPECT_EQ(exit_code_for(d), 1);
}

TEST(Pipeline, DiagnosticFormat) {
    Diagnostic d{Severity::warning, "split-fallback", {"a.c", 3, 7}, "msg"};
    EXPECT_EQ(d.format(), "warning[split-fallback] a.c:3:7: msg");
}

TEST(Pipeline, BadConfigIsReported) {
    PipelineOptions o;
    o.config_text = "[ownership]\nnope = \"owned\"\n";
    auto r = run_pipeline("#include <stdint.h>\nvoid f(void) {}\n", "t.c", o);
    EXPECT_EQ(r.exit_code, 1);
    ASSERT_FALSE(r.diagnostics.empty());
    EXPECT_EQ(r.diagnostics[0].code, "config-error");
}

TEST(Pipeline, JsonDumpCarriesSchema) {
    auto r = run_pipeline("#include <stdint.h>\nvoid f(uint8_t *p) { p[0] = 1; }\n", "t.c");
    ASSERT_TRUE(r.program);
    std::string j = rust_ast_json(*r.program);
    EXPECT_NE(j.find(kRustAstSchema), std::string::npos);
}

TEST(Cli, TranslatesToStdout) {
    auto r = run_process({C2R_CLI_PATH, corpus_input("stack_sum").string()});
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("pub fn run()"), std::string::npos);
    EXPECT_TRUE(r.err.empty());
}

TEST(Cli, ErrorsGoToStderr) {
    auto r = run_process({C2R_CLI_PATH, corpus_input("err_overlap").string()});
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_NE(r.err.find("error[overlap-error]"), std::string::npos);
    EXPECT_TRUE(r.out.empty());
}

TEST(Cli, FallbackWarningAndStrictMode) {
    auto lax = run_process({C2R_CLI_PATH, corpus_input("fallback_insert").string()});
    EXPECT_EQ(lax.exit_code, 0);
    EXPECT_NE(lax.err.find("warning[split-fallback]"), std::string::npos);
    auto strict = run_process({C2R_CLI_PATH, "--strict-splits", corpus_input("fallback_insert").string()});
    EXPECT_EQ(strict.exit_code, 1);
}

TEST(Cli, OutDirAndJson) {
    fs::path out = fs::temp_directory_path() / "c2r_cli_test_out";
    fs::remove_all(out);
    auto r = run_process({C2R_CLI_PATH, "-o", out.string(), "--emit-json", corpus_input("stack_sum").string()});
    EXPECT_EQ(r.exit_code, 0) << r.err;
    EXPECT_TRUE(fs::exists(out / "input.rs"));
    EXPECT_TRUE(fs::exists(out / "input.json"));
    fs::remove_all(out);
}

TEST(Cli, MissingInputFails) {
    auto r = run_process({C2R_CLI_PATH, "/nonexistent/file.c"});
    EXPECT_NE(r.exit_code, 0);
}
