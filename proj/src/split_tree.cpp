#include "c2r/split_tree.hpp"

namespace c2r {

SplitTree::SplitTree(std::string root) {
    Node n;
    n.name = std::move(root);
    nodes_.push_back(std::move(n));
}

void SplitTree::reset() {
    std::string root = nodes_.front().name;
    nodes_.clear();
    Node n;
    n.name = std::move(root);
    nodes_.push_back(std::move(n));
}

std::optional<SplitStep> SplitTree::insert(const SymbolicOffset& abs, int seq, const Namer& fresh) {
    int cur = 0;
    bool fallback = false;
    while (nodes_[static_cast<std::size_t>(cur)].is_split) {
        const Node& n = nodes_[static_cast<std::size_t>(cur)];
        switch (sym_compare(abs, n.at)) {
        case Ordering::lt: cur = n.left; break;
        case Ordering::eq:
        case Ordering::gt: cur = n.right; break;
        case Ordering::unknown:
            fallback = true;
            cur = n.seq <= seq ? n.right : n.left;
            break;
        }
    }
    Node& leaf = nodes_[static_cast<std::size_t>(cur)];
    if (cur != 0 && sym_compare(abs, leaf.origin) == Ordering::eq) return std::nullopt;
    if (cur != 0 && sym_compare(abs, leaf.origin) == Ordering::unknown) fallback = true;

    auto [lname, rname] = fresh();
    SplitStep step;
    step.parent = leaf.name;
    step.rel = abs - leaf.origin;
    step.abs = abs;
    step.left = lname;
    step.right = rname;
    step.fallback = fallback;
    step.parent_node = cur;
    step.left_node = static_cast<int>(nodes_.size());

    Node l, r;
    l.name = lname;
    l.origin = leaf.origin;
    r.name = rname;
    r.origin = abs;
    leaf.is_split = true;
    leaf.at = abs;
    leaf.seq = seq;
    leaf.left = static_cast<int>(nodes_.size());
    leaf.right = leaf.left + 1;
    nodes_.push_back(std::move(l));
    nodes_.push_back(std::move(r));
    return step;
}

int SplitTree::leaf_for(const SymbolicOffset& abs, int seq) const {
    int cur = 0;
    while (nodes_[static_cast<std::size_t>(cur)].is_split) {
        const Node& n = nodes_[static_cast<std::size_t>(cur)];
        switch (sym_compare(abs, n.at)) {
        case Ordering::lt: cur = n.left; break;
        case Ordering::eq:
        case Ordering::gt: cur = n.right; break;
        case Ordering::unknown: cur = n.seq <= seq ? n.right : n.left; break;
        }
    }
    return cur;
}

std::optional<int> SplitTree::leaf_for_exact(const SymbolicOffset& abs) const {
    int cur = 0;
    while (nodes_[static_cast<std::size_t>(cur)].is_split) {
        const Node& n = nodes_[static_cast<std::size_t>(cur)];
        switch (sym_compare(abs, n.at)) {
        case Ordering::lt: cur = n.left; break;
        case Ordering::eq:
        case Ordering::gt: cur = n.right; break;
        case Ordering::unknown: return std::nullopt;
        }
    }
    return cur;
}

std::optional<SymbolicOffset> SplitTree::leaf_end(int leaf) const {
    // The closest ancestor for which `leaf` sits in the left subtree bounds it.
    std::vector<int> parent(nodes_.size(), -1);
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (nodes_[i].is_split) {
            parent[static_cast<std::size_t>(nodes_[i].left)] = static_cast<int>(i);
            parent[static_cast<std::size_t>(nodes_[i].right)] = static_cast<int>(i);
        }
    }
    int cur = leaf;
    while (parent[static_cast<std::size_t>(cur)] != -1) {
        int p = parent[static_cast<std::size_t>(cur)];
        if (nodes_[static_cast<std::size_t>(p)].left == cur) return nodes_[static_cast<std::size_t>(p)].at;
        cur = p;
    }
    return std::nullopt;
}

std::vector<std::string> SplitTree::leaves() const {
    std::vector<std::string> out;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        const Node& n = nodes_[static_cast<std::size_t>(i)];
        if (!n.is_split) {
            out.push_back(n.name);
            continue;
        }
        stack.push_back(n.right);
        stack.push_back(n.left);
    }
    return out;
}

std::optional<LeafRef> tree_resolve(const SplitTree& tree, const SymbolicOffset& ptr_offset, int ptr_seq,
                                    const SymbolicOffset& access, bool from_base) {
    SymbolicOffset abs = ptr_offset + access;
    std::optional<int> exact = tree.leaf_for_exact(abs);
    int chosen;
    if (from_base) {
        // The base reaches every slice; only the target cell matters.
        chosen = exact ? *exact : tree.leaf_for(abs, ptr_seq);
    } else {
        chosen = tree.leaf_for(ptr_offset, ptr_seq);
        if (exact && *exact != chosen) return std::nullopt;
    }
    const SymbolicOffset& origin = tree.node(chosen).origin;
    abs.constant -= origin.constant;
    if (!origin.terms.empty()) abs.add_terms(origin, -1);
    return LeafRef{chosen, std::move(abs)};
}

LeafAccess tree_lookup(const SplitTree& tree, const SymbolicOffset& ptr_offset, int ptr_seq,
                       const SymbolicOffset& access, bool from_base, const SourceLoc& loc) {
    if (auto r = tree_resolve(tree, ptr_offset, ptr_seq, access, from_base))
        return {tree.node(r->node).name, std::move(r->rel)};
    SymbolicOffset abs = ptr_offset + access;
    throw CompileError("overlap-error", loc,
                       "access at offset " + to_string(abs) + " crosses from slice '" +
                           tree.node(tree.leaf_for(ptr_offset, ptr_seq)).name + "' into '" +
                           tree.node(*tree.leaf_for_exact(abs)).name + "'");
}

} // namespace c2r
