#include "doctest.h"

#include "intsep/oracles.hpp"
#include "intsep/prelim.hpp"

using namespace intsep;

namespace {

Instance make(std::initializer_list<std::pair<long long, long long>> pairs) {
    std::vector<std::pair<Scalar, Scalar>> raw;
    for (auto [l, r] : pairs) raw.emplace_back(Scalar(l), Scalar(r));
    return normalize_instance(raw);
}

} // namespace

TEST_CASE("step: appending a disjoint interval keeps delta at zero") {
    Instance inst = make({{0, 1}, {2, 3}});
    auto [updated, spawned] = step_list(inst, initial_list(inst), 2);
    CHECK_FALSE(spawned.has_value());
    CHECK(updated.order == std::vector<int>{1, 2});
    CHECK(updated.delta == Scalar(0));
    CHECK(updated.pos_last == Scalar(2));
    CHECK(updated.x_end == Scalar(3));
    CHECK(updated.last == 2);
}

TEST_CASE("step: a contained interval branches into append and swap") {
    Instance inst = make({{0, 10}, {1, 3}});
    auto [updated, spawned] = step_list(inst, initial_list(inst), 2);
    REQUIRE(spawned.has_value());
    CHECK(updated.order == std::vector<int>{1, 2});
    CHECK(updated.pos_last == Scalar(10));
    CHECK(updated.delta == Scalar(9));
    CHECK(spawned->order == std::vector<int>{2, 1});
    CHECK(spawned->pos_last == Scalar(3)); // old last lands at right(i)
    CHECK(spawned->x_end == Scalar(13));
    CHECK(spawned->delta == Scalar(3));
    CHECK(brute_force(inst).delta == Scalar(3));
}

TEST_CASE("step: insert-before-last when the pushed last interval reaches back") {
    // after (1,2): interval 2 sits at 5 with right end 13; interval 3 = [2,4]
    // starts left of that position, so it slides in front
    Instance inst = make({{0, 5}, {1, 8}, {2, 4}});
    CandidateList l = initial_list(inst);
    l = step_list(inst, l, 2).first;
    CHECK(l.pos_last == Scalar(5));
    auto [updated, spawned] = step_list(inst, l, 3);
    CHECK_FALSE(spawned.has_value());
    CHECK(updated.order == std::vector<int>{1, 3, 2});
    CHECK(updated.pos_last == Scalar(7)); // interval 2 shifted right by |I_3|
    CHECK(updated.x_end == Scalar(14));
    CHECK(updated.delta == Scalar(6));
    CHECK(brute_force(inst).delta == Scalar(6));
    Configuration cfg = updated.configuration(inst);
    CHECK(cfg.at(3) == Scalar(5));
    CHECK(cfg.at(2) == Scalar(7));
}

TEST_CASE("solve on frozen instances") {
    CHECK(solve_preliminary(make({{5, 7}})).delta == Scalar(0));
    CHECK(solve_preliminary(make({{5, 7}})).order == std::vector<int>{1});

    Solution s = solve_preliminary(make({{0, 2}, {1, 3}}));
    CHECK(s.delta == Scalar(1));
    CHECK(s.order == std::vector<int>{1, 2});

    Instance chain = make({{0, 8}, {2, 4}, {3, 5}});
    Solution t = solve_preliminary(chain);
    CHECK(t.delta == Scalar(6));
    CHECK(t.order == std::vector<int>{2, 3, 1});
    CHECK(max_displacement(left_possible_placement(chain, t.order), chain) == Scalar(6));
}

TEST_CASE("preliminary solve matches brute force on random small instances") {
    SplitMix64 rng(33);
    PrelimOptions opts;
    opts.check_lists = true;
    for (int t = 0; t < 300; ++t) {
        GenSpec spec;
        spec.n = 1 + static_cast<int>(rng.below(8));
        spec.seed = rng.next();
        Instance inst = gen_random(spec);
        PrelimStats stats;
        Solution got = solve_preliminary(inst, opts, &stats);
        Solution want = brute_force(inst);
        REQUIRE(got.delta == want.delta);
        CHECK(is_feasible(got.config, inst));
        CHECK(max_displacement(got.config, inst) == got.delta);
        CHECK(stats.max_lists <= static_cast<size_t>(inst.n()));
    }
}

TEST_CASE("solver state stays within the prefix-size bound") {
    SplitMix64 rng(34);
    for (int t = 0; t < 40; ++t) {
        GenSpec spec;
        spec.n = 10 + static_cast<int>(rng.below(40));
        spec.seed = rng.next();
        PrelimStats stats;
        Instance inst = gen_random(spec);
        Solution s = solve_preliminary(inst, {}, &stats);
        CHECK(stats.max_lists <= static_cast<size_t>(inst.n()));
        CHECK(is_feasible(s.config, inst));
    }
}
