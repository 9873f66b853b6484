#include "intsep/prelim.hpp"

#include <algorithm>

namespace intsep {

namespace {

enum class Case { AppendI, InsertBeforeLast, Branch };

Case classify(const Instance& inst, const CandidateList& list, int i) {
    if (inst.right(i) >= inst.right(list.last)) return Case::AppendI;
    if (inst.left(i) <= list.pos_last) return Case::InsertBeforeLast;
    return Case::Branch;
}

// Appends i following the left-possible strategy (Cases I and III share it).
void apply_append(const Instance& inst, CandidateList& list, int i) {
    Scalar pos = max(list.x_end, inst.left(i));
    list.delta = max(list.delta, pos - inst.left(i));
    list.pos_last = pos;
    list.x_end = pos + inst.length(i);
    list.last = i;
    list.order.push_back(i);
}

// Case II: i takes the last interval's position, which shifts right by |I_i|.
// Only the last interval's displacement can grow.
void apply_insert_before_last(const Instance& inst, CandidateList& list, int i) {
    Scalar pos_i = list.pos_last;
    list.pos_last = pos_i + inst.length(i);
    list.x_end = list.pos_last + inst.length(list.last);
    list.delta = max(list.delta, list.pos_last - inst.left(list.last));
    list.order.push_back(i);
    std::swap(list.order[list.order.size() - 2], list.order.back());
}

// Case III spawn: same prefix, i at its input position, old last at right(i).
// `pre_delta` is the parent's delta before i was appended to it.
CandidateList make_spawn(const Instance& inst, const CandidateList& updated_parent, int i,
                         const Scalar& pre_delta, int old_last) {
    CandidateList s;
    s.order = updated_parent.order; // ends with [old_last, i]
    std::swap(s.order[s.order.size() - 2], s.order.back());
    s.last = old_last;
    s.pos_last = inst.right(i);
    s.x_end = s.pos_last + inst.length(old_last);
    s.delta = max(pre_delta, s.pos_last - inst.left(old_last));
    return s;
}

void verify_list(const Instance& inst, const CandidateList& list) {
    Configuration cfg = list.configuration(inst);
    if (max_displacement(cfg, inst) != list.delta) throw Error("candidate list delta drifted from its configuration");
    if (cfg.at(list.last) != list.pos_last) throw Error("candidate list last-position drifted");
    if (cfg.at(list.last) + inst.length(list.last) != list.x_end) throw Error("candidate list x-end drifted");
    if (list.order.back() != list.last) throw Error("candidate list last index mismatch");
}

} // namespace

CandidateList initial_list(const Instance& inst) {
    CandidateList l;
    l.order = {1};
    l.delta = Scalar(0);
    l.pos_last = inst.left(1);
    l.x_end = inst.right(1);
    l.last = 1;
    return l;
}

std::pair<CandidateList, std::optional<CandidateList>>
step_list(const Instance& inst, const CandidateList& list, int i) {
    CandidateList updated = list;
    switch (classify(inst, list, i)) {
        case Case::AppendI:
            apply_append(inst, updated, i);
            return {std::move(updated), std::nullopt};
        case Case::InsertBeforeLast:
            apply_insert_before_last(inst, updated, i);
            return {std::move(updated), std::nullopt};
        case Case::Branch: {
            Scalar pre_delta = list.delta;
            int old_last = list.last;
            apply_append(inst, updated, i);
            CandidateList spawned = make_spawn(inst, updated, i, pre_delta, old_last);
            return {std::move(updated), std::make_optional(std::move(spawned))};
        }
    }
    throw Error("unreachable");
}

Solution solve_preliminary(const Instance& inst, const PrelimOptions& opts, PrelimStats* stats) {
    Solution out;
    out.direction = Direction::OneDirection;
    if (inst.n() == 0) return out;

    ListSet set;
    set.lists.push_back(initial_list(inst));

    for (int i = 2; i <= inst.n(); ++i) {
        // Best spawn this step: min delta, then min x_end, then earliest parent.
        bool have_spawn = false;
        Scalar best_delta, best_x_end;
        size_t best_parent = 0;

        for (size_t li = 0; li < set.lists.size(); ++li) {
            CandidateList& l = set.lists[li];
            switch (classify(inst, l, i)) {
                case Case::AppendI:
                    apply_append(inst, l, i);
                    break;
                case Case::InsertBeforeLast:
                    apply_insert_before_last(inst, l, i);
                    break;
                case Case::Branch: {
                    Scalar pre_delta = l.delta;
                    Scalar s_pos = inst.right(i);
                    Scalar s_delta = max(pre_delta, s_pos - inst.left(l.last));
                    Scalar s_x_end = s_pos + inst.length(l.last);
                    apply_append(inst, l, i);
                    if (!have_spawn || s_delta < best_delta ||
                        (s_delta == best_delta && s_x_end < best_x_end)) {
                        have_spawn = true;
                        best_delta = std::move(s_delta);
                        best_x_end = std::move(s_x_end);
                        best_parent = li;
                    }
                    break;
                }
            }
        }

        if (have_spawn) {
            // Reconstruct the one kept spawn from its (already updated) parent.
            const CandidateList& parent = set.lists[best_parent];
            int old_last = parent.order[parent.order.size() - 2];
            CandidateList s;
            s.order = parent.order;
            std::swap(s.order[s.order.size() - 2], s.order.back());
            s.last = old_last;
            s.pos_last = inst.right(i);
            s.x_end = best_x_end;
            s.delta = best_delta;
            set.lists.push_back(std::move(s));
            if (stats) ++stats->spawned_kept;
        }

        if (stats) stats->max_lists = std::max(stats->max_lists, set.lists.size());
        if (set.lists.size() > static_cast<size_t>(i)) throw Error("list set exceeded prefix size");
        if (opts.check_lists) {
            for (const CandidateList& l : set.lists) verify_list(inst, l);
        }
    }

    size_t winner = 0;
    for (size_t li = 1; li < set.lists.size(); ++li) {
        const CandidateList& l = set.lists[li];
        const CandidateList& w = set.lists[winner];
        if (l.delta < w.delta || (l.delta == w.delta && l.x_end < w.x_end)) winner = li;
    }

    out.order = set.lists[winner].order;
    out.config = left_possible_placement(inst, out.order);
    out.delta = set.lists[winner].delta;
    if (max_displacement(out.config, inst) != out.delta) throw Error("preliminary solve delta inconsistent");
    return out;
}

} // namespace intsep
