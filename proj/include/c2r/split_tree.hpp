#pragma once

#include "c2r/symbolic.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace c2r {

/// One emitted `let (left, right) = parent.split_at(rel);`.
struct SplitStep {
    std::string parent;
    SymbolicOffset rel;   // relative to the parent's origin
    SymbolicOffset abs;   // relative to the base
    std::string left;
    std::string right;
    bool fallback = false;  // an incomparable offset was ordered by flow position
    int parent_node = -1;
    int left_node = -1;     // right_node is left_node + 1
};

/// Binary search tree of split points for one base pointer. Leaves are the
/// slices that are currently usable; inner nodes have been consumed.
class SplitTree {
public:
    struct Node {
        std::string name;
        SymbolicOffset origin;     // absolute start of this slice
        bool is_split = false;
        SymbolicOffset at;         // absolute split point (inner nodes)
        int seq = 0;               // insertion order of `at`
        int left = -1;
        int right = -1;
    };

    using Namer = std::function<std::pair<std::string, std::string>()>;

    explicit SplitTree(std::string root);

    /// Splits the leaf holding `abs` so that a slice starts exactly there.
    /// Returns the emitted step, or nothing when a leaf already starts at
    /// `abs`. The root is always split on the first insert.
    std::optional<SplitStep> insert(const SymbolicOffset& abs, int seq, const Namer& fresh);

    /// Leaf holding `abs`. Incomparable split points are ordered by
    /// insertion sequence: a point inserted before `seq` is assumed smaller.
    int leaf_for(const SymbolicOffset& abs, int seq) const;

    /// Leaf holding `abs` when every comparison on the way is decided.
    std::optional<int> leaf_for_exact(const SymbolicOffset& abs) const;

    /// Start of the next split point to the right of `leaf`, if any.
    std::optional<SymbolicOffset> leaf_end(int leaf) const;

    const Node& node(int i) const { return nodes_.at(static_cast<std::size_t>(i)); }
    const std::string& root_name() const { return nodes_.front().name; }
    bool is_singleton() const { return nodes_.size() == 1; }
    std::size_t size() const { return nodes_.size(); }
    std::vector<std::string> leaves() const;

    /// Back to a single leaf named after the base.
    void reset();

    /// Next insertion sequence number (0 is the base itself).
    int next_seq() { return ++seq_counter_; }

private:
    std::vector<Node> nodes_;
    int seq_counter_ = 0;
};

/// Result of resolving `ptr[access]` against a tree.
struct LeafAccess {
    std::string leaf;
    SymbolicOffset rel;
};

/// A leaf of a tree by node index, and the index relative to its origin.
struct LeafRef {
    int node = -1;
    SymbolicOffset rel;
};

/// Like `tree_lookup`, but returns nullopt instead of throwing when a derived
/// pointer provably reaches into another slice.
std::optional<LeafRef> tree_resolve(const SplitTree& tree, const SymbolicOffset& ptr_offset, int ptr_seq,
                                    const SymbolicOffset& access, bool from_base);

/// Resolves an access at `ptr_offset + access` for a pointer whose offset
/// was inserted with sequence `ptr_seq`. `from_base` is true when the
/// pointer is the base itself. Throws `overlap-error` when a derived
/// pointer provably reaches into a slice other than its own.
LeafAccess tree_lookup(const SplitTree& tree, const SymbolicOffset& ptr_offset, int ptr_seq,
                       const SymbolicOffset& access, bool from_base, const SourceLoc& loc);

} // namespace c2r
