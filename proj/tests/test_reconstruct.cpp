#include "doctest.h"

#include "intsep/fast.hpp"
#include "intsep/lineage.hpp"
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

TEST_CASE("record_spawn turns a leaf into a branch with two children") {
    Lineage lin;
    auto root = lin.root_leaf();
    CHECK_FALSE(lin.is_internal(root));
    auto [app, swp] = lin.record_spawn(root, 2);
    CHECK(lin.is_internal(root));
    CHECK(lin.branch_index(root) == 2);
    CHECK(lin.node_count() == 3);
    CHECK_THROWS(lin.record_spawn(root, 3)); // already internal

    auto app_events = lin.path_events(app);
    REQUIRE(app_events.size() == 1);
    CHECK(app_events[0] == std::pair<int, bool>{2, false});
    auto swp_events = lin.path_events(swp);
    CHECK(swp_events[0] == std::pair<int, bool>{2, true});

    auto [app2, swp2] = lin.record_spawn(swp, 5);
    auto chain = lin.path_events(swp2);
    REQUIRE(chain.size() == 2);
    CHECK(chain[0].first < chain[1].first); // branch indices increase along a path
    CHECK(chain[1] == std::pair<int, bool>{5, true});
    (void)app2;
}

TEST_CASE("a run without branches keeps the lineage a single leaf") {
    Instance inst = make({{0, 1}, {2, 3}});
    FastSolver s(inst);
    s.process_interval(2);
    CHECK(s.lineage().node_count() == 1);
    CHECK(replay(inst, s.lineage(), s.opt_leaf(), s.min_delta()) == std::vector<int>{1, 2});
}

TEST_CASE("the first branch records the swap pair") {
    Instance inst = make({{0, 10}, {1, 3}});
    FastSolver s(inst);
    s.process_interval(2);
    CHECK(s.lineage().node_count() == 3);
    CHECK(s.lineage().branch_index(s.lineage().root_leaf()) == 2);
    auto order = replay(inst, s.lineage(), s.opt_leaf(), s.min_delta());
    CHECK(order == std::vector<int>{2, 1});
}

TEST_CASE("replay reproduces the optimal delta on frozen instances") {
    Instance inst = make({{0, 8}, {2, 4}, {3, 5}});
    FastResult r = solve_fast(inst);
    CHECK(r.delta == Scalar(6));
    Configuration cfg = left_possible_placement(inst, r.order);
    CHECK(max_displacement(cfg, inst) == Scalar(6));
}

TEST_CASE("replay rejects a wrong expected delta") {
    Instance inst = make({{0, 10}, {1, 3}});
    FastSolver s(inst);
    s.process_interval(2);
    CHECK_THROWS(replay(inst, s.lineage(), s.opt_leaf(), Scalar(4)));
}

TEST_CASE("lineage stays linear in n") {
    SplitMix64 rng(71);
    for (int t = 0; t < 20; ++t) {
        GenSpec spec;
        spec.n = 50 + static_cast<int>(rng.below(150));
        spec.seed = rng.next();
        Instance inst = gen_random(spec);
        FastSolver s(inst);
        for (int i = 2; i <= inst.n(); ++i) s.process_interval(i);
        CHECK(s.lineage().node_count() <= 2 * static_cast<size_t>(inst.n()) - 1);
        auto order = replay(inst, s.lineage(), s.opt_leaf(), s.min_delta());
        CHECK(order.size() == static_cast<size_t>(inst.n()));
    }
}

TEST_CASE("replayed orders stay optimal across a random suite") {
    SplitMix64 rng(72);
    for (int t = 0; t < 150; ++t) {
        GenSpec spec;
        spec.n = 2 + static_cast<int>(rng.below(60));
        spec.seed = rng.next();
        Instance inst = gen_random(spec);
        FastResult r = solve_fast(inst); // replay runs inside and throws on mismatch
        Configuration cfg = left_possible_placement(inst, r.order);
        CHECK(is_feasible(cfg, inst));
        CHECK(max_displacement(cfg, inst) == r.delta);
        CHECK(r.delta == solve_preliminary(inst).delta);
    }
}
