#include "intsep/core.hpp"

#include <algorithm>

namespace intsep {

bool Instance::operator==(const Instance& o) const {
    if (intervals_.size() != o.intervals_.size()) return false;
    for (size_t i = 0; i < intervals_.size(); ++i) {
        if (intervals_[i].id != o.intervals_[i].id) return false;
        if (intervals_[i].left != o.intervals_[i].left) return false;
        if (intervals_[i].right != o.intervals_[i].right) return false;
    }
    return true;
}

void Configuration::set(int index, Scalar position) {
    size_t i = static_cast<size_t>(index);
    if (index < 1 || i >= present_.size()) throw Error("configuration index out of range");
    if (!present_[i]) covered_.push_back(index);
    present_[i] = 1;
    pos_[i] = std::move(position);
}

const Scalar& Configuration::at(int index) const {
    size_t i = static_cast<size_t>(index);
    if (!has(index)) throw Error("configuration does not cover index " + std::to_string(index));
    return pos_[i];
}

Instance normalize_instance(const std::vector<std::pair<Scalar, Scalar>>& raw) {
    std::vector<Interval> v;
    v.reserve(raw.size());
    int ordinal = 0;
    for (const auto& [l, r] : raw) {
        ++ordinal;
        if (!(l < r)) {
            throw DegenerateInterval("interval " + std::to_string(ordinal) +
                                     " is degenerate (left >= right)");
        }
        v.push_back(Interval{ordinal, l, r});
    }
    std::sort(v.begin(), v.end(), [](const Interval& a, const Interval& b) {
        int c = a.left.cmp(b.left);
        if (c != 0) return c < 0;
        c = a.right.cmp(b.right);
        if (c != 0) return c < 0;
        return a.id < b.id;
    });
    return Instance(std::move(v));
}

Configuration left_possible_placement(const Instance& inst, const std::vector<int>& order) {
    Configuration cfg(inst.n());
    std::vector<char> seen(static_cast<size_t>(inst.n()) + 1, 0);
    Scalar prev_right;
    bool first = true;
    for (int idx : order) {
        if (idx < 1 || idx > inst.n() || seen[static_cast<size_t>(idx)]) {
            throw Error("order is not a permutation of a subset of 1..n");
        }
        seen[static_cast<size_t>(idx)] = 1;
        Scalar pos = first ? inst.left(idx) : max(inst.left(idx), prev_right);
        prev_right = pos + inst.length(idx);
        cfg.set(idx, std::move(pos));
        first = false;
    }
    return cfg;
}

Scalar max_displacement(const Configuration& config, const Instance& inst, Direction dir) {
    Scalar best;
    bool first = true;
    for (int idx : config.covered()) {
        Scalar d = config.displacement(idx, inst);
        if (dir == Direction::TwoDirection) d = d.abs();
        if (first || best < d) best = std::move(d);
        first = false;
    }
    return best; // zero for an empty configuration
}

bool is_feasible(const Configuration& config, const Instance& inst, Direction dir) {
    std::vector<int> order = config.covered();
    for (int idx : order) {
        if (dir == Direction::OneDirection && config.displacement(idx, inst).sign() < 0) return false;
    }
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int c = config.at(a).cmp(config.at(b));
        if (c != 0) return c < 0;
        return a < b;
    });
    for (size_t k = 0; k + 1 < order.size(); ++k) {
        Scalar right_end = config.at(order[k]) + inst.length(order[k]);
        // a single shared point is not overlap
        if (config.at(order[k + 1]) < right_end) return false;
    }
    return true;
}

Solution to_two_direction(const Solution& one_dir) {
    Solution out;
    out.direction = Direction::TwoDirection;
    out.order = one_dir.order;
    Scalar shift = one_dir.delta.half();
    out.delta = shift;
    int maxidx = 0;
    for (int idx : one_dir.config.covered()) maxidx = std::max(maxidx, idx);
    out.config = Configuration(maxidx);
    for (int idx : one_dir.config.covered()) {
        out.config.set(idx, one_dir.config.at(idx) - shift);
    }
    return out;
}

} // namespace intsep
