#pragma once

// Concrete replay of split trees: every slice is an interval of the base array.

#include "c2r/split_tree.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace c2r::oracle {

struct Interval {
    int64_t start = 0;
    int64_t len = 0;
};

struct SplitCheck {
    std::uint64_t cells = 0;     // accesses compared against direct indexing
    std::uint64_t mismatches = 0;
    std::string first_failure;
};

/// A split tree over an array of `len` cells next to the concrete interval
/// of every slice it has emitted. Copyable, so enumerations can extend a
/// shared prefix of inserts.
class ReplayedTree {
public:
    explicit ReplayedTree(int64_t len) : len_(len), slices_{{0, len}}, slice_names_{"x"} {}

    /// Inserts `o` and replays the emitted split. False if the split does not
    /// cut its parent at `o`.
    bool insert(int64_t o, SplitCheck& out) {
        static const std::vector<std::pair<std::string, std::string>> names = [] {
            std::vector<std::pair<std::string, std::string>> v;
            for (int i = 0; i < 64; ++i) v.emplace_back("x_l" + std::to_string(i), "x_r" + std::to_string(i));
            return v;
        }();
        offsets_.push_back(o);
        int seq = tree_.next_seq();
        auto namer = [&] {
            std::size_t i = fresh_++;
            if (i < names.size()) return names[i];
            return std::pair{"x_l" + std::to_string(i), "x_r" + std::to_string(i)};
        };
        auto step = tree_.insert(SymbolicOffset::of_constant(o), seq, namer);
        pointers_.emplace_back(o, seq);
        if (!step) return true;
        auto pn = static_cast<std::size_t>(step->parent_node);
        if (pn >= slices_.size() || slice_names_[pn] != step->parent || !step->rel.is_constant() ||
            static_cast<std::size_t>(step->left_node) != slices_.size()) {
            fail(out, "split of unknown slice " + step->parent);
            return false;
        }
        Interval p = slices_[pn];
        int64_t rel = step->rel.constant;
        if (rel < 0 || rel > p.len || p.start + rel != o) {
            fail(out, "split of " + step->parent + " at " + std::to_string(rel) + " does not land on " + std::to_string(o));
            return false;
        }
        slices_.push_back({p.start, rel});
        slices_.push_back({p.start + rel, p.len - rel});
        slice_names_.push_back(step->left);
        slice_names_.push_back(step->right);
        return true;
    }

    /// Reads every cell through the base, and through each derived pointer
    /// every cell of its own slice; each must land where direct indexing
    /// would. The first cell past a derived pointer's slice must be rejected.
    void check(SplitCheck& out) const {
        for (std::size_t i = 0; i < slices_.size(); ++i)
            if (tree_.node(static_cast<int>(i)).name != slice_names_[i]) {
                fail(out, "node " + std::to_string(i) + " is named " + tree_.node(static_cast<int>(i)).name +
                              " but was emitted as " + slice_names_[i]);
                return;
            }
        const SymbolicOffset zero;
        SymbolicOffset at;
        for (int64_t c = 0; c < len_; ++c) {
            at.constant = c;
            land(out, *tree_resolve(tree_, zero, 0, at, true), c);
        }

        for (auto [o, seq] : pointers_) {
            // The slice a derived pointer denotes: the nonempty leaf holding it.
            Interval own{len_, 0};
            for (std::size_t i = 0; i < slices_.size(); ++i)
                if (!tree_.node(static_cast<int>(i)).is_split && slices_[i].start <= o &&
                    o < slices_[i].start + slices_[i].len)
                    own = slices_[i];
            int64_t end = own.start + own.len;
            const SymbolicOffset ptr = SymbolicOffset::of_constant(o);
            for (int64_t c = o; c < end; ++c) {
                at.constant = c - o;
                auto a = tree_resolve(tree_, ptr, seq, at, false);
                if (a) {
                    land(out, *a, c);
                } else {
                    ++out.cells;
                    fail(out, "pointer at " + std::to_string(o) + " rejected access to cell " + std::to_string(c));
                }
            }
            if (end < len_) {
                ++out.cells;
                at.constant = end - o;
                if (tree_resolve(tree_, ptr, seq, at, false))
                    fail(out, "pointer at " + std::to_string(o) + " reached cell " + std::to_string(end) + " past its slice");
            }
        }
    }

private:
    void land(SplitCheck& out, const LeafRef& a, int64_t cell) const {
        ++out.cells;
        auto n = static_cast<std::size_t>(a.node);
        if (n >= slices_.size() || !a.rel.is_constant() || tree_.node(a.node).is_split) {
            fail(out, "lookup of cell " + std::to_string(cell) + " returned node " + std::to_string(a.node));
            return;
        }
        int64_t rel = a.rel.constant;
        if (rel < 0 || rel >= slices_[n].len || slices_[n].start + rel != cell)
            fail(out, "cell " + std::to_string(cell) + " resolved to " + slice_names_[n] + "[" + std::to_string(rel) + "]");
    }

    void fail(SplitCheck& out, const std::string& what) const {
        ++out.mismatches;
        if (!out.first_failure.empty()) return;
        std::string s = "len " + std::to_string(len_) + " offsets [";
        for (auto o : offsets_) s += std::to_string(o) + " ";
        out.first_failure = s + "]: " + what;
    }

    int64_t len_;
    SplitTree tree_{"x"};
    std::size_t fresh_ = 0;
    std::vector<Interval> slices_;  // indexed like the tree's nodes
    std::vector<std::string> slice_names_;
    std::vector<std::pair<int64_t, int>> pointers_;
    std::vector<int64_t> offsets_;
};

/// Inserts `offsets` in order into a fresh tree over `len` cells and checks it.
inline void check_offsets(int64_t len, const std::vector<int64_t>& offsets, SplitCheck& out) {
    ReplayedTree t(len);
    for (int64_t o : offsets)
        if (!t.insert(o, out)) return;
    t.check(out);
}

} // namespace c2r::oracle
