#pragma once

#include <utility>
#include <vector>

#include "intsep/core.hpp"

namespace intsep {

// Decision-recording tree built during the fast solve. Leaves mirror live
// candidate lists; when a Case-III spawn is kept, the parent's leaf becomes
// a branch node storing the processed index, with one child for the
// appended continuation and one for the swapped (spawned) list. Pruned
// lists leave dead leaves behind; only the path to the surviving optimal
// leaf is ever replayed.
class Lineage {
public:
    using Handle = int;

    Lineage() { nodes_.push_back(Node{-1, false, 0}); }

    Handle root_leaf() const { return 0; }

    // parent_leaf becomes internal with branch index i; returns
    // (child_append, child_swap).
    std::pair<Handle, Handle> record_spawn(Handle parent_leaf, int i);

    bool is_internal(Handle h) const { return nodes_[static_cast<size_t>(h)].branch != 0; }
    int branch_index(Handle h) const { return nodes_[static_cast<size_t>(h)].branch; }
    size_t node_count() const { return nodes_.size(); }

    // Branch events on the root-to-leaf path as (index, swapped) pairs,
    // in strictly increasing index order.
    std::vector<std::pair<int, bool>> path_events(Handle leaf) const;

private:
    struct Node {
        int parent;   // -1 at the root
        bool swapped; // which child of the parent this node is
        int branch;   // 0 while a leaf; the branch interval once internal
    };
    std::vector<Node> nodes_;
};

// Replays the branch decisions along the path to opt_leaf, re-deriving
// every non-branch step from the incrementally maintained configuration.
// Returns the optimal order; throws if its left-possible placement's
// max-displacement differs from expected_delta.
std::vector<int> replay(const Instance& inst, const Lineage& lineage, Lineage::Handle opt_leaf,
                        const Scalar& expected_delta);

} // namespace intsep
