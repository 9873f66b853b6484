#include "intsep/lineage.hpp"

#include <algorithm>

namespace intsep {

std::pair<Lineage::Handle, Lineage::Handle> Lineage::record_spawn(Handle parent_leaf, int i) {
    Node& p = nodes_[static_cast<size_t>(parent_leaf)];
    if (p.branch != 0) throw Error("lineage node already internal");
    p.branch = i;
    Handle child_append = static_cast<Handle>(nodes_.size());
    nodes_.push_back(Node{parent_leaf, false, 0});
    Handle child_swap = static_cast<Handle>(nodes_.size());
    nodes_.push_back(Node{parent_leaf, true, 0});
    return {child_append, child_swap};
}

std::vector<std::pair<int, bool>> Lineage::path_events(Handle leaf) const {
    std::vector<std::pair<int, bool>> events;
    Handle h = leaf;
    while (nodes_[static_cast<size_t>(h)].parent >= 0) {
        const Node& node = nodes_[static_cast<size_t>(h)];
        events.emplace_back(nodes_[static_cast<size_t>(node.parent)].branch, node.swapped);
        h = node.parent;
    }
    std::reverse(events.begin(), events.end());
    for (size_t k = 0; k + 1 < events.size(); ++k) {
        if (events[k].first >= events[k + 1].first) throw Error("lineage path indices not increasing");
    }
    return events;
}

std::vector<int> replay(const Instance& inst, const Lineage& lineage, Lineage::Handle opt_leaf,
                        const Scalar& expected_delta) {
    std::vector<int> order;
    if (inst.n() == 0) return order;
    auto events = lineage.path_events(opt_leaf);
    size_t ev = 0;

    order.reserve(static_cast<size_t>(inst.n()));
    order.push_back(1);
    Scalar pos_last = inst.left(1);
    Scalar x_end = inst.right(1);
    int last = 1;

    for (int i = 2; i <= inst.n(); ++i) {
        bool append;
        if (ev < events.size() && events[ev].first == i) {
            append = !events[ev].second;
            ++ev;
        } else {
            if (ev < events.size() && events[ev].first < i) throw Error("lineage replay out of order");
            if (inst.right(i) >= inst.right(last)) {
                append = true; // Case I
            } else if (inst.left(i) <= pos_last) {
                append = false; // Case II
            } else {
                append = true; // Case III whose spawned twin was pruned
            }
        }
        if (append) {
            Scalar pos = max(x_end, inst.left(i));
            x_end = pos + inst.length(i);
            pos_last = std::move(pos);
            last = i;
            order.push_back(i);
        } else {
            Scalar pos_i = max(pos_last, inst.left(i));
            pos_last = pos_i + inst.length(i);
            x_end = pos_last + inst.length(last);
            order.push_back(i);
            std::swap(order[order.size() - 2], order.back());
        }
    }
    if (ev != events.size()) throw Error("lineage replay left unconsumed branches");

    Configuration cfg = left_possible_placement(inst, order);
    if (max_displacement(cfg, inst) != expected_delta) {
        throw Error("reconstructed order does not reproduce the solver's delta");
    }
    return order;
}

} // namespace intsep
