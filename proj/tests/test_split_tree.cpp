#include "c2r/split_tree.hpp"

#include "support/split_oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using namespace c2r;

namespace {

SplitTree::Namer counter(const std::string& base) {
    auto n = std::make_shared<int>(0);
    return [base, n] {
        ++*n;
        return std::make_pair(base + "_l" + std::to_string(*n), base + "_r" + std::to_string(*n));
    };
}

SymbolicOffset c(int64_t v) { return SymbolicOffset::of_constant(v); }

} // namespace

TEST(SplitTree, AbcdSteps) {
    SplitTree t("abcd");
    auto fresh = counter("abcd");
    std::vector<SplitStep> steps;
    for (int64_t o : {0, 16, 8, 24}) {
        auto s = t.insert(c(o), t.next_seq(), fresh);
        ASSERT_TRUE(s.has_value());
        steps.push_back(*s);
    }
    EXPECT_EQ(steps[0].parent, "abcd");
    EXPECT_EQ(steps[0].rel, c(0));
    EXPECT_EQ(steps[1].parent, steps[0].right);
    EXPECT_EQ(steps[1].rel, c(16));
    EXPECT_EQ(steps[2].parent, steps[1].left);
    EXPECT_EQ(steps[2].rel, c(8));
    EXPECT_EQ(steps[3].parent, steps[1].right);
    EXPECT_EQ(steps[3].rel, c(8));
    EXPECT_EQ(t.leaves().size(), 5u);
}

TEST(SplitTree, ExistingBoundaryAddsNothing) {
    SplitTree t("x");
    auto fresh = counter("x");
    ASSERT_TRUE(t.insert(c(4), t.next_seq(), fresh));
    EXPECT_FALSE(t.insert(c(4), t.next_seq(), fresh));
    EXPECT_FALSE(t.insert(c(0), t.next_seq(), fresh));
}

TEST(SplitTree, LookupThroughDerivedPointer) {
    SplitTree t("x");
    auto fresh = counter("x");
    t.insert(c(0), t.next_seq(), fresh);
    int p = t.next_seq();
    t.insert(c(8), p, fresh);
    LeafAccess a = tree_lookup(t, c(8), p, c(3), false, {});
    EXPECT_EQ(a.leaf, "x_r2");
    EXPECT_EQ(a.rel, c(3));
    LeafAccess b = tree_lookup(t, c(0), 0, c(10), true, {});
    EXPECT_EQ(b.leaf, "x_r2");
    EXPECT_EQ(b.rel, c(2));
}

TEST(SplitTree, DerivedPointerCannotReachNeighbour) {
    SplitTree t("x");
    auto fresh = counter("x");
    int p = t.next_seq();
    t.insert(c(0), p, fresh);
    int q = t.next_seq();
    t.insert(c(8), q, fresh);
    EXPECT_FALSE(tree_resolve(t, c(0), p, c(9), false).has_value());
    try {
        tree_lookup(t, c(0), p, c(9), false, {});
        FAIL();
    } catch (const CompileError& e) {
        EXPECT_EQ(e.diagnostic().code, "overlap-error");
    }
}

TEST(SplitTree, IncomparableOffsetsFollowInsertionOrder) {
    SplitTree t("x");
    auto fresh = counter("x");
    auto n = SymbolicOffset::of_var("n");
    t.insert(c(0), t.next_seq(), fresh);
    t.insert(c(4), t.next_seq(), fresh);
    auto s = t.insert(n, t.next_seq(), fresh);
    ASSERT_TRUE(s);
    EXPECT_TRUE(s->fallback);
    EXPECT_FALSE(t.leaf_for_exact(n).has_value());
}

TEST(SplitTree, ResetKeepsBaseName) {
    SplitTree t("x");
    auto fresh = counter("x");
    t.insert(c(3), t.next_seq(), fresh);
    t.reset();
    EXPECT_TRUE(t.is_singleton());
    EXPECT_EQ(t.root_name(), "x");
}

TEST(SplitOracle, EveryOrderOnSmallArrays) {
    oracle::SplitCheck check;
    for (int64_t len = 0; len <= 8; ++len) {
        std::vector<int64_t> cells(static_cast<std::size_t>(len + 1));
        std::iota(cells.begin(), cells.end(), 0);
        for (unsigned mask = 0; mask < (1u << cells.size()); ++mask) {
            std::vector<int64_t> offsets;
            for (std::size_t i = 0; i < cells.size(); ++i)
                if (mask & (1u << i)) offsets.push_back(cells[i]);
            if (offsets.size() > 4) continue;
            do {
                oracle::check_offsets(len, offsets, check);
            } while (std::next_permutation(offsets.begin(), offsets.end()));
        }
    }
    EXPECT_GT(check.cells, 0u);
    EXPECT_EQ(check.mismatches, 0u) << check.first_failure;
}
