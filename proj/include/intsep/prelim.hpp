#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "intsep/core.hpp"

namespace intsep {

// One candidate order over the processed prefix together with the scalars
// of its left-possible configuration that the algorithm actually consults:
// max-displacement, right end of the last interval, and the last interval's
// position. The full configuration is recomputable from `order`.
struct CandidateList {
    std::vector<int> order;
    Scalar delta;    // max displacement of the left-possible placement of `order`
    Scalar x_end;    // right endpoint of the last interval in that placement
    Scalar pos_last; // left endpoint of the last interval
    int last = 0;    // index of the last interval

    Configuration configuration(const Instance& inst) const {
        return left_possible_placement(inst, order);
    }
};

struct ListSet {
    std::vector<CandidateList> lists; // creation order: initial list, then kept spawns
};

struct PrelimOptions {
    // Recompute every list's configuration from its order after each step
    // and cross-check delta/x_end/pos_last. Quadratic per step; tests only.
    bool check_lists = false;
};

struct PrelimStats {
    size_t max_lists = 0;
    size_t spawned_kept = 0;
};

CandidateList initial_list(const Instance& inst);

// Cases I/II/III for one list. `updated` always carries interval i;
// `spawned` is engaged only in Case III (i and the old last swapped).
std::pair<CandidateList, std::optional<CandidateList>>
step_list(const Instance& inst, const CandidateList& list, int i);

Solution solve_preliminary(const Instance& inst, const PrelimOptions& opts = {},
                           PrelimStats* stats = nullptr);

} // namespace intsep
