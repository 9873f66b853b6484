#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "intsep/core.hpp"
#include "intsep/lineage.hpp"

namespace intsep {

// Which of the five step shapes ran: whether two last indices were live
// (dual) and how the new interval's right endpoint compared.
enum class StepCaseTag {
    SingleAppend, // one last index, appended everywhere
    SingleMixed,  // one last index, insert/branch mix
    DualAppend,   // two last indices, appended everywhere
    DualMixed,    // two last indices, append side + insert/branch side
    DualInsert,   // two last indices, inserted before last everywhere
};
const char* to_string(StepCaseTag tag);

struct StepFlags {
    bool c_zero = false;             // mixed step with no branching list
    bool c_full = false;             // mixed step where every list branched
    bool cprime_exhausted = false;   // delta walk from the appended block removed every later list
    bool bprime_exhausted = false;   // cross-boundary walk removed everything to its right
    bool xeq_removed = false;        // spawned list dropped: equal x-value with its right neighbor
};

struct StepOutcome {
    StepCaseTag case_tag = StepCaseTag::SingleAppend;
    int removed_count = 0;
    bool spawned = false;
    int leaf_count = 0; // after the step
    StepFlags flags;
};

struct FastOptions {
    bool check_invariants_each_step = false; // throw on the first violation
    // Maintain explicit per-leaf orders and cross-check every leaf's stored
    // x/delta against a fresh left-possible placement after each step.
    // Quadratic; tests only.
    bool track_orders = false;
    std::function<void(int interval, const StepOutcome&)> on_step;
};

struct CoverageCounters {
    std::array<long long, 5> case_counts{};
    long long c_zero = 0;
    long long c_full = 0;
    long long cprime_exhausted = 0;
    long long bprime_exhausted_mixed = 0;
    long long bprime_exhausted_insert = 0;
    long long xeq_removed = 0;

    void add(StepCaseTag tag, const StepFlags& f);
    CoverageCounters& operator+=(const CoverageCounters& o);
};

struct FastResult {
    Scalar delta;
    std::vector<int> order; // reconstructed witness
    size_t leaves_created = 0;
    size_t leaves_removed = 0;
    size_t max_leaves = 0;
    CoverageCounters coverage;
};

// The implicit candidate-list store: one ordered-tree leaf per live list,
// keyed by its shifted x-value (true x-value minus the global shift R) and
// carrying its delta-value. m is the containing last index, m' the
// contained one, and the boundary leaf separates m'-ending lists (left of
// or at it) from m-ending ones.
class FastSolver {
public:
    explicit FastSolver(const Instance& inst, FastOptions opts = {});

    // Intervals must be fed in index order 2..n.
    StepOutcome process_interval(int i);

    // Empty when the monotonicity invariants hold: x-values strictly
    // increasing with strictly decreasing delta-values, at most two last
    // indices with input containment, and m'-lists preceding m-lists.
    std::vector<std::string> check_invariants() const;

    Scalar min_delta() const;            // rightmost leaf
    Lineage::Handle opt_leaf() const;    // rightmost leaf's lineage handle
    const Lineage& lineage() const { return lineage_; }

    int leaf_count() const { return static_cast<int>(tree_.size()); }
    size_t leaves_created() const { return created_; }
    size_t leaves_removed() const { return removed_total_; }
    size_t max_leaves() const { return max_leaves_; }
    const CoverageCounters& coverage() const { return coverage_; }

    struct LeafView {
        Scalar x_true;
        Scalar delta;
        std::vector<int> order; // only when track_orders
    };
    std::vector<LeafView> leaves() const;
    const Scalar& global_shift() const { return shift_; }
    int last_long() const { return m_; }
    std::optional<int> last_short() const;
    bool has_boundary() const { return has_pb_; }

    // Test hook: overwrite a leaf's delta (position in key order) to probe
    // the invariant checker with corrupted states.
    void debug_overwrite_delta(int position, Scalar delta);

private:
    struct Leaf {
        Scalar delta;
        Lineage::Handle lin = 0;
        std::vector<int> order; // only when track_orders
    };
    using Tree = std::map<Scalar, Leaf>;
    using It = Tree::iterator;

    const Instance& inst_;
    FastOptions opts_;
    Tree tree_;
    Scalar shift_; // R
    int m_ = 1;
    int m_prime_ = 0; // 0 = undefined
    bool has_pb_ = false;
    It pb_{};
    Lineage lineage_;

    size_t created_ = 1;
    size_t removed_total_ = 0;
    size_t max_leaves_ = 1;
    CoverageCounters coverage_;
    int next_index_ = 2;

    It erase_leaf(It it, int& removed);
    StepOutcome case_append_all(int i, StepCaseTag tag);
    StepOutcome case_mixed(int i, bool dual);
    StepOutcome case_insert_all(int i);
    void apply_order_tracking(int i, const std::optional<Scalar>& pb_key,
                              const std::optional<Scalar>& branch_key, It spawn_leaf,
                              bool has_spawn, const std::vector<int>& spawn_order,
                              StepCaseTag tag);
    void finish_step(int i, StepOutcome& out);
};

FastResult solve_fast(const Instance& inst, const FastOptions& opts = {});

} // namespace intsep
