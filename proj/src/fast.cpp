#include "intsep/fast.hpp"

#include <algorithm>

namespace intsep {

const char* to_string(StepCaseTag tag) {
    switch (tag) {
        case StepCaseTag::SingleAppend: return "single-append";
        case StepCaseTag::SingleMixed: return "single-mixed";
        case StepCaseTag::DualAppend: return "dual-append";
        case StepCaseTag::DualMixed: return "dual-mixed";
        case StepCaseTag::DualInsert: return "dual-insert";
    }
    return "?";
}

void CoverageCounters::add(StepCaseTag tag, const StepFlags& f) {
    ++case_counts[static_cast<size_t>(tag)];
    c_zero += f.c_zero;
    c_full += f.c_full;
    cprime_exhausted += f.cprime_exhausted;
    if (tag == StepCaseTag::DualMixed) bprime_exhausted_mixed += f.bprime_exhausted;
    if (tag == StepCaseTag::DualInsert) bprime_exhausted_insert += f.bprime_exhausted;
    xeq_removed += f.xeq_removed;
}

CoverageCounters& CoverageCounters::operator+=(const CoverageCounters& o) {
    for (size_t k = 0; k < case_counts.size(); ++k) case_counts[k] += o.case_counts[k];
    c_zero += o.c_zero;
    c_full += o.c_full;
    cprime_exhausted += o.cprime_exhausted;
    bprime_exhausted_mixed += o.bprime_exhausted_mixed;
    bprime_exhausted_insert += o.bprime_exhausted_insert;
    xeq_removed += o.xeq_removed;
    return *this;
}

FastSolver::FastSolver(const Instance& inst, FastOptions opts)
    : inst_(inst), opts_(std::move(opts)), shift_(0) {
    if (inst.n() < 1) throw Error("fast solver needs n >= 1");
    Leaf first;
    first.delta = Scalar(0);
    first.lin = lineage_.root_leaf();
    if (opts_.track_orders) first.order = {1};
    tree_.emplace(inst.right(1), std::move(first));
    m_ = 1;
}

FastSolver::It FastSolver::erase_leaf(It it, int& removed) {
    ++removed;
    ++removed_total_;
    return tree_.erase(it);
}

StepOutcome FastSolver::process_interval(int i) {
    if (i != next_index_ || i > inst_.n()) throw Error("intervals must be processed in index order");
    ++next_index_;

    StepOutcome out;
    if (!has_pb_) {
        if (inst_.right(i) >= inst_.right(m_)) {
            out = case_append_all(i, StepCaseTag::SingleAppend);
        } else {
            out = case_mixed(i, false);
        }
    } else {
        if (inst_.right(i) >= inst_.right(m_)) {
            out = case_append_all(i, StepCaseTag::DualAppend);
        } else if (inst_.right(i) >= inst_.right(m_prime_)) {
            out = case_mixed(i, true);
        } else {
            out = case_insert_all(i);
        }
    }
    finish_step(i, out);
    return out;
}

StepOutcome FastSolver::case_append_all(int i, StepCaseTag tag) {
    StepOutcome out;
    out.case_tag = tag;
    const Scalar xl = inst_.left(i);
    const Scalar xr = inst_.right(i);
    const Scalar len_i = inst_.length(i);
    auto nd_app = [&](It v) { return max(v->second.delta, v->first + shift_ - xl); };

    // A delta tie across the block boundary loses its excuse here: both
    // lists append the new interval, and with equal deltas and a smaller
    // x-value the left one dominates once the last indices match.
    if (has_pb_) {
        It first_m = std::next(pb_);
        if (first_m != tree_.end() && pb_->second.delta == first_m->second.delta) {
            erase_leaf(first_m, out.removed_count);
        }
    }

    // Leaves whose configuration already ends at or before the new
    // interval's input position collapse to one: the new interval sits at
    // its own left there, so only the least-delta one can matter.
    It a1 = tree_.end();
    It cur = tree_.begin();
    if (!(cur->first + shift_ > xl)) {
        while (true) {
            It nxt = std::next(cur);
            if (nxt == tree_.end() || nxt->first + shift_ > xl) {
                a1 = cur;
                break;
            }
            cur = erase_leaf(cur, out.removed_count);
        }
    }
    if (a1 != tree_.end()) {
        auto node = tree_.extract(a1);
        node.key() = xr - shift_ - len_i; // true x becomes right(i) once R grows
        a1 = tree_.insert(tree_.begin(), std::move(node));
    }

    // Strip the increasing tail of the unimodal new-delta sequence.
    It a2 = std::prev(tree_.end());
    while (a2 != tree_.begin()) {
        It prv = std::prev(a2);
        if (nd_app(prv) <= nd_app(a2)) {
            erase_leaf(a2, out.removed_count);
            a2 = prv;
        } else {
            break;
        }
    }
    a2->second.delta = nd_app(a2);

    shift_ += len_i;
    m_ = i;
    m_prime_ = 0;
    has_pb_ = false;

    if (opts_.track_orders) {
        apply_order_tracking(i, std::nullopt, std::nullopt, It{}, false, {}, tag);
    }
    return out;
}

StepOutcome FastSolver::case_mixed(int i, bool dual) {
    StepOutcome out;
    out.case_tag = dual ? StepCaseTag::DualMixed : StepCaseTag::SingleMixed;
    const Scalar xl = inst_.left(i);
    const Scalar xr = inst_.right(i);
    const Scalar len_i = inst_.length(i);
    const Scalar m_right = inst_.right(m_);
    const Scalar m_left = inst_.left(m_);
    auto nd_app = [&](It v) { return max(v->second.delta, v->first + shift_ - xl); };
    auto nd_ins_m = [&](It v) { return max(v->second.delta, v->first + shift_ + len_i - m_right); };

    std::optional<Scalar> pb_key;
    if (dual) pb_key = pb_->first;

    // Rightmost list whose last interval still sits left of the new one:
    // everything at or before it branches (Case III), everything after it
    // absorbs the new interval before its last (Case II).
    Scalar threshold = xl - shift_ + inst_.length(m_);
    It lb = tree_.lower_bound(threshold);
    bool has_c = false;
    It cleaf{};
    if (lb != tree_.begin()) {
        It cand = std::prev(lb);
        if (!dual || *pb_key < cand->first) {
            has_c = true;
            cleaf = cand;
        }
    }
    out.flags.c_zero = !has_c;
    out.flags.c_full = has_c && std::next(cleaf) == tree_.end();

    Scalar delta_c;
    Lineage::Handle lin_c = 0;
    std::vector<int> c_order;
    std::optional<Scalar> branch_key;
    if (has_c) {
        delta_c = cleaf->second.delta; // kept across the possible removal of its leaf
        lin_c = cleaf->second.lin;
        if (opts_.track_orders) c_order = cleaf->second.order;
        branch_key = cleaf->first;
    }

    // Prune the branching block down to its strictly decreasing prefix.
    It c1{};
    bool c_survived = true;
    if (has_c) {
        It cur = cleaf;
        while (true) {
            if (cur == tree_.begin()) break;
            It prv = std::prev(cur);
            if (dual && prv == pb_) break;
            if (nd_app(prv) > nd_app(cur)) break;
            erase_leaf(cur, out.removed_count);
            c_survived = false; // the first leaf erased here is cleaf itself
            cur = prv;
        }
        c1 = cur;
        c1->second.delta = nd_app(c1);
    }

    // Spawn the one kept new list (old last index moves behind the new
    // interval). An equal x-value with the old right neighbor means exactly
    // one of the pair survives.
    It spawn_leaf{};
    bool has_spawn = false;
    It walk_boundary{};
    bool boundary_is_spawn = false;
    std::vector<int> spawn_order;
    if (has_c) {
        Scalar sp_delta = max(delta_c, xr - m_left);
        Scalar sp_key = xr + inst_.length(m_) - shift_ - len_i;
        It succ = std::next(c1);
        if (succ != tree_.end() && sp_key == succ->first) {
            out.flags.xeq_removed = true;
            if (sp_delta == nd_ins_m(succ)) {
                // the old neighbor is dominated; the spawned list replaces it
                erase_leaf(succ, out.removed_count);
                auto [child_append, child_swap] = lineage_.record_spawn(lin_c, i);
                if (c_survived) cleaf->second.lin = child_append;
                spawn_leaf = tree_.insert(std::next(c1), {sp_key, Leaf{sp_delta, child_swap, {}}});
                has_spawn = true;
                walk_boundary = spawn_leaf;
                boundary_is_spawn = true;
            } else {
                // spawned list dominated at birth; never enters the set
                walk_boundary = succ;
            }
        } else {
            auto [child_append, child_swap] = lineage_.record_spawn(lin_c, i);
            if (c_survived) cleaf->second.lin = child_append;
            spawn_leaf = tree_.insert(succ, {sp_key, Leaf{sp_delta, child_swap, {}}});
            has_spawn = true;
            walk_boundary = spawn_leaf;
            boundary_is_spawn = true;
        }
        if (has_spawn) {
            ++created_;
            out.spawned = true;
            max_leaves_ = std::max(max_leaves_, tree_.size());
            if (opts_.track_orders) {
                spawn_order = c_order;
                spawn_order.push_back(i);
                std::swap(spawn_order[spawn_order.size() - 2], spawn_order.back());
            }
        }
    } else {
        walk_boundary = dual ? std::next(pb_) : tree_.begin();
    }

    // Strip the increasing tail of the insert-side delta sequence.
    It c2 = std::prev(tree_.end());
    while (c2 != walk_boundary) {
        It prv = std::prev(c2);
        if (nd_ins_m(prv) <= nd_ins_m(c2)) {
            erase_leaf(c2, out.removed_count);
            c2 = prv;
        } else {
            break;
        }
    }
    if (!(boundary_is_spawn && c2 == spawn_leaf)) {
        c2->second.delta = nd_ins_m(c2);
    }

    // Lists right of the appended block are dominated by it when its delta
    // is at most their last interval's displacement. Comparing against the
    // displacement term rather than the whole delta matters when the two
    // deltas tie by both inheriting the same parent value: neither list
    // dominates then, and the tied pair stays.
    auto ins_displacement_m = [&](It v) { return v->first + shift_ + len_i - m_right; };
    if (has_c) {
        It cur = std::next(c1);
        while (cur != tree_.end()) {
            if (!(c1->second.delta <= ins_displacement_m(cur))) break;
            cur = erase_leaf(cur, out.removed_count);
        }
        out.flags.cprime_exhausted = std::next(c1) == tree_.end();
    }

    if (!dual) {
        shift_ += len_i;
        if (has_c) {
            if (std::next(c1) != tree_.end()) {
                m_prime_ = i;
                has_pb_ = true;
                pb_ = c1;
            } else {
                m_ = i;
                m_prime_ = 0;
                has_pb_ = false;
            }
        }
        if (opts_.track_orders) {
            apply_order_tracking(i, pb_key, branch_key, spawn_leaf, has_spawn, spawn_order, out.case_tag);
        }
        return out;
    }

    // Append side (the lists ending with the old contained index).
    It a2 = pb_;
    while (a2 != tree_.begin()) {
        It prv = std::prev(a2);
        if (nd_app(prv) <= nd_app(a2)) {
            erase_leaf(a2, out.removed_count);
            a2 = prv;
        } else {
            break;
        }
    }
    a2->second.delta = nd_app(a2);

    // Cross-boundary domination by the append side's best list. Leaves that
    // also appended the new interval fall on an equal-or-larger delta; lists
    // still ending with the long interval fall only when the best delta is
    // at most their last displacement.
    bool c1_alive = has_c;
    {
        It cur = std::next(a2);
        while (cur != tree_.end()) {
            // keys at or below the branch block's end identify the lists
            // that appended the new interval (the spawn sits above it)
            bool same_last = has_c && !(*branch_key < cur->first);
            bool dominated = same_last ? a2->second.delta <= cur->second.delta
                                       : a2->second.delta <= ins_displacement_m(cur);
            if (!dominated) break;
            if (c1_alive && cur == c1) c1_alive = false;
            cur = erase_leaf(cur, out.removed_count);
        }
    }
    out.flags.bprime_exhausted = std::next(a2) == tree_.end();

    shift_ += len_i;
    It last_append = (has_c && c1_alive) ? c1 : a2;
    if (std::next(last_append) != tree_.end()) {
        m_prime_ = i;
        has_pb_ = true;
        pb_ = last_append;
    } else {
        m_ = i;
        m_prime_ = 0;
        has_pb_ = false;
    }
    if (opts_.track_orders) {
        apply_order_tracking(i, pb_key, branch_key, spawn_leaf, has_spawn, spawn_order, out.case_tag);
    }
    return out;
}

StepOutcome FastSolver::case_insert_all(int i) {
    StepOutcome out;
    out.case_tag = StepCaseTag::DualInsert;
    const Scalar len_i = inst_.length(i);
    const Scalar m_right = inst_.right(m_);
    const Scalar mp_right = inst_.right(m_prime_);
    auto nd_ins_m = [&](It v) { return max(v->second.delta, v->first + shift_ + len_i - m_right); };
    auto nd_ins_mp = [&](It v) { return max(v->second.delta, v->first + shift_ + len_i - mp_right); };

    // Insert-before-last everywhere; prune each side to its strictly
    // decreasing delta prefix, then resolve the boundary.
    It e2 = std::prev(tree_.end());
    while (true) {
        It prv = std::prev(e2);
        if (prv == pb_) break;
        if (nd_ins_m(prv) <= nd_ins_m(e2)) {
            erase_leaf(e2, out.removed_count);
            e2 = prv;
        } else {
            break;
        }
    }
    e2->second.delta = nd_ins_m(e2);

    It e1 = pb_;
    while (e1 != tree_.begin()) {
        It prv = std::prev(e1);
        if (nd_ins_mp(prv) <= nd_ins_mp(e1)) {
            erase_leaf(e1, out.removed_count);
            e1 = prv;
        } else {
            break;
        }
    }
    e1->second.delta = nd_ins_mp(e1);

    // Cross-boundary removal needs the short side's best delta to cover the
    // long-side list's last displacement, not just its delta (the two can
    // tie through a shared inherited value without any domination).
    {
        It cur = std::next(e1);
        while (cur != tree_.end()) {
            if (!(e1->second.delta <= cur->first + shift_ + len_i - m_right)) break;
            cur = erase_leaf(cur, out.removed_count);
        }
    }
    out.flags.bprime_exhausted = std::next(e1) == tree_.end();

    shift_ += len_i;
    if (std::next(e1) != tree_.end()) {
        pb_ = e1; // both last indices survive unchanged
    } else {
        m_ = m_prime_;
        m_prime_ = 0;
        has_pb_ = false;
    }
    if (opts_.track_orders) {
        apply_order_tracking(i, std::nullopt, std::nullopt, It{}, false, {}, StepCaseTag::DualInsert);
    }
    return out;
}

void FastSolver::apply_order_tracking(int i, const std::optional<Scalar>& pb_key,
                                      const std::optional<Scalar>& branch_key, It spawn_leaf,
                                      bool has_spawn, const std::vector<int>& spawn_order,
                                      StepCaseTag tag) {
    for (It it = tree_.begin(); it != tree_.end(); ++it) {
        if (has_spawn && it == spawn_leaf) {
            it->second.order = spawn_order;
            continue;
        }
        bool append = true;
        if (tag == StepCaseTag::DualInsert) {
            append = false;
        } else if (tag == StepCaseTag::SingleMixed || tag == StepCaseTag::DualMixed) {
            bool append_side = (pb_key && !(*pb_key < it->first)) ||
                               (branch_key && !(*branch_key < it->first));
            append = append_side;
        }
        it->second.order.push_back(i);
        if (!append) std::swap(it->second.order[it->second.order.size() - 2], it->second.order.back());
    }
}

void FastSolver::finish_step(int i, StepOutcome& out) {
    out.leaf_count = leaf_count();
    max_leaves_ = std::max(max_leaves_, tree_.size());
    coverage_.add(out.case_tag, out.flags);
    if (opts_.check_invariants_each_step) {
        auto violations = check_invariants();
        if (!violations.empty()) {
            throw Error("invariant violated after interval " + std::to_string(i) + ": " + violations.front());
        }
    }
    if (opts_.track_orders) {
        for (It it = tree_.begin(); it != tree_.end(); ++it) {
            const auto& ord = it->second.order;
            if (ord.size() != static_cast<size_t>(i)) throw Error("tracked order has wrong size");
            Configuration cfg = left_possible_placement(inst_, ord);
            if (max_displacement(cfg, inst_) != it->second.delta) {
                throw Error("leaf delta drifted from its list configuration");
            }
            int last = ord.back();
            if (cfg.at(last) + inst_.length(last) != it->first + shift_) {
                throw Error("leaf x-value drifted from its list configuration");
            }
        }
    }
    if (opts_.on_step) opts_.on_step(i, out);
}

std::vector<std::string> FastSolver::check_invariants() const {
    std::vector<std::string> v;
    if (tree_.empty()) {
        v.push_back("no live leaves");
        return v;
    }
    // Delta-values decrease rightward, strictly except for one sanctioned
    // equality: the last short-ending list may tie the first long-ending
    // one when both carry the delta of the parent they split from.
    auto it = tree_.begin();
    auto prev = it++;
    for (; it != tree_.end(); ++prev, ++it) {
        if (prev->second.delta < it->second.delta) {
            v.push_back("delta-values increase in x-order");
            break;
        }
        if (prev->second.delta == it->second.delta) {
            bool boundary_pair = has_pb_ && prev == pb_;
            if (!boundary_pair) {
                v.push_back("delta-values tie away from the block boundary");
                break;
            }
        }
    }
    if (has_pb_) {
        if (m_prime_ == 0) {
            v.push_back("boundary set but contained last index undefined");
        } else {
            if (!(inst_.left(m_) <= inst_.left(m_prime_) && inst_.right(m_prime_) <= inst_.right(m_))) {
                v.push_back("short last interval not contained in the long one");
            }
            if (m_prime_ == m_) v.push_back("last indices coincide");
        }
        bool live = false;
        for (auto jt = tree_.begin(); jt != tree_.end(); ++jt) {
            if (jt == pb_) live = true;
        }
        if (!live) {
            v.push_back("boundary leaf is not live");
        } else if (std::next(pb_) == tree_.end()) {
            v.push_back("boundary leaf has no successor");
        }
    } else if (m_prime_ != 0) {
        v.push_back("contained last index defined without a boundary");
    }
    if (opts_.track_orders) {
        std::vector<int> lasts;
        for (auto jt = tree_.begin(); jt != tree_.end(); ++jt) {
            int last = jt->second.order.empty() ? 0 : jt->second.order.back();
            if (std::find(lasts.begin(), lasts.end(), last) == lasts.end()) lasts.push_back(last);
            int expected = (has_pb_ && !(pb_->first < jt->first)) ? m_prime_ : m_;
            if (last != expected) v.push_back("leaf ends with unexpected last index");
        }
        if (lasts.size() > 2) v.push_back("more than two distinct last indices");
    }
    return v;
}

Scalar FastSolver::min_delta() const {
    if (tree_.empty()) throw Error("empty solver state");
    return std::prev(tree_.end())->second.delta;
}

Lineage::Handle FastSolver::opt_leaf() const {
    if (tree_.empty()) throw Error("empty solver state");
    return std::prev(tree_.end())->second.lin;
}

std::vector<FastSolver::LeafView> FastSolver::leaves() const {
    std::vector<LeafView> out;
    out.reserve(tree_.size());
    for (const auto& [key, leaf] : tree_) {
        out.push_back(LeafView{key + shift_, leaf.delta, leaf.order});
    }
    return out;
}

std::optional<int> FastSolver::last_short() const {
    if (m_prime_ == 0) return std::nullopt;
    return m_prime_;
}

void FastSolver::debug_overwrite_delta(int position, Scalar delta) {
    It it = tree_.begin();
    std::advance(it, position);
    it->second.delta = std::move(delta);
}

FastResult solve_fast(const Instance& inst, const FastOptions& opts) {
    FastResult r;
    r.delta = Scalar(0);
    if (inst.n() == 0) return r;
    FastSolver solver(inst, opts);
    for (int i = 2; i <= inst.n(); ++i) solver.process_interval(i);
    r.delta = solver.min_delta();
    r.order = replay(inst, solver.lineage(), solver.opt_leaf(), r.delta);
    r.leaves_created = solver.leaves_created();
    r.leaves_removed = solver.leaves_removed();
    r.max_leaves = solver.max_leaves();
    r.coverage = solver.coverage();
    return r;
}

} // namespace intsep
