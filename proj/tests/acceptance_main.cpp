// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria 1-7 and 9 are exact (zero tolerance); criterion 8 pins
// the growth-rate envelopes.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "intsep/fast.hpp"
#include "intsep/oracles.hpp"
#include "intsep/prelim.hpp"

using namespace intsep;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("[%d] %-34s %s%s%s\n", criterion, name.c_str(), ok ? "PASS" : "FAIL",
                detail.empty() ? "" : "  ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

double median_of(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v[v.size() / 2];
}

double time_ms(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

long read_vm_hwm_kb() {
    std::ifstream in("/proc/self/status");
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("VmHWM:", 0) == 0) {
            std::istringstream ss(line.substr(6));
            long kb = 0;
            ss >> kb;
            return kb;
        }
    }
    return -1;
}

struct SuiteResult {
    bool deltas_equal = true;
    bool witnesses_ok = true;
    bool halving_ok = true;
    bool invariants_ok = true;
    std::string first_issue;
    CoverageCounters coverage;
};

// Shared driver for criteria 1-5 and 7: runs all three (or two) solvers on
// each instance, checks the deltas, the reconstructed witness, the
// two-direction halving, and the per-step invariants, and accumulates
// subcase coverage.
void run_instance(const Instance& inst, bool with_brute, SuiteResult& res) {
    FastOptions opts;
    opts.check_invariants_each_step = true;
    opts.track_orders = true; // deep per-leaf check of x/delta/last-index structure
    FastResult fast;
    try {
        fast = solve_fast(inst, opts);
    } catch (const Error& e) {
        res.invariants_ok = false;
        if (res.first_issue.empty()) res.first_issue = e.what();
        return;
    }
    res.coverage += fast.coverage;

    Solution prelim = solve_preliminary(inst);
    if (prelim.delta != fast.delta) {
        res.deltas_equal = false;
        if (res.first_issue.empty()) res.first_issue = "prelim " + prelim.delta.str() + " vs fast " + fast.delta.str();
    }
    if (with_brute) {
        Solution brute = brute_force(inst);
        if (brute.delta != fast.delta) {
            res.deltas_equal = false;
            if (res.first_issue.empty()) res.first_issue = "brute " + brute.delta.str() + " vs fast " + fast.delta.str();
        }
    }

    Configuration cfg = left_possible_placement(inst, fast.order);
    if (!is_feasible(cfg, inst) || max_displacement(cfg, inst) != fast.delta) {
        res.witnesses_ok = false;
        if (res.first_issue.empty()) res.first_issue = "witness mismatch";
    }
    Configuration pcfg = left_possible_placement(inst, prelim.order);
    if (!is_feasible(pcfg, inst) || max_displacement(pcfg, inst) != prelim.delta) {
        res.witnesses_ok = false;
        if (res.first_issue.empty()) res.first_issue = "prelim witness mismatch";
    }

    Solution one;
    one.delta = fast.delta;
    one.order = fast.order;
    one.config = cfg;
    Solution two = to_two_direction(one);
    if (!(two.delta + two.delta == fast.delta) ||
        !is_feasible(two.config, inst, Direction::TwoDirection) ||
        max_displacement(two.config, inst, Direction::TwoDirection) != two.delta) {
        res.halving_ok = false;
        if (res.first_issue.empty()) res.first_issue = "two-direction reduction broke";
    }
}

void criterion_1_to_5_and_7() {
    SuiteResult res;

    // suite 1: small instances against brute force, cycling through the
    // default family, a short-length family that keeps the candidate set
    // branching, and a dense nested family that provokes exact delta ties
    {
        SplitMix64 rng(101);
        auto t0 = std::chrono::steady_clock::now();
        for (int t = 0; t < 1000; ++t) {
            GenSpec spec;
            spec.n = 1 + static_cast<int>(rng.below(8));
            spec.seed = rng.next();
            if (t % 3 == 1) spec.len_max = 4;
            if (t % 3 == 2) {
                spec.coord_max = 12;
                spec.len_max = 6;
                spec.containment_bias = 0.6;
            }
            run_instance(gen_random(spec), true, res);
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        report(1, "oracle triangle (1000 x n<=8)", res.deltas_equal && secs < 30.0,
               res.deltas_equal ? "" : res.first_issue);
    }

    // suite 2: mid-scale fast vs preliminary
    bool mid_ok = true;
    {
        SplitMix64 rng(102);
        auto t0 = std::chrono::steady_clock::now();
        SuiteResult mid;
        for (int t = 0; t < 200; ++t) {
            GenSpec spec;
            spec.n = 2 + static_cast<int>(rng.below(199));
            spec.seed = rng.next();
            if (t % 3 == 1) spec.len_max = 4;
            if (t % 3 == 2) {
                spec.coord_max = 3 * spec.n / 2;
                spec.len_max = 6;
                spec.containment_bias = 0.6;
            }
            run_instance(gen_random(spec), false, mid);
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        mid_ok = mid.deltas_equal && secs < 60.0;
        report(2, "mid-scale equivalence (n<=200)", mid_ok, mid.deltas_equal ? "" : mid.first_issue);
        res.witnesses_ok = res.witnesses_ok && mid.witnesses_ok;
        res.halving_ok = res.halving_ok && mid.halving_ok;
        res.invariants_ok = res.invariants_ok && mid.invariants_ok;
        res.coverage += mid.coverage;
        if (res.first_issue.empty()) res.first_issue = mid.first_issue;
    }

    report(3, "feasible witnesses", res.witnesses_ok, res.witnesses_ok ? "" : res.first_issue);
    report(4, "two-direction halving", res.halving_ok, res.halving_ok ? "" : res.first_issue);
    report(5, "per-step invariants", res.invariants_ok, res.invariants_ok ? "" : res.first_issue);

    // criterion 7: subcase and boundary-branch coverage, topped up with
    // targeted instances
    {
        auto run_targeted = [&res](std::initializer_list<std::pair<const char*, const char*>> pairs) {
            std::vector<std::pair<Scalar, Scalar>> raw;
            for (auto [l, r] : pairs) raw.emplace_back(*Scalar::parse(l), *Scalar::parse(r));
            run_instance(normalize_instance(raw), false, res);
        };
        // x-equality removal, both resolution directions
        run_targeted({{"0", "10"}, {"1", "3"}, {"5", "20"}, {"13", "19"}});
        run_targeted({{"0", "10"}, {"1", "3"}, {"5", "20"}, {"13", "27/2"}});
        // branch pruned at birth (c spans the whole set, then exhausted)
        run_targeted({{"0", "4"}, {"1", "3"}});
        // no branching list in a mixed step
        run_targeted({{"0", "5"}, {"1", "8"}, {"2", "4"}});
        // insert-everywhere step whose boundary walk clears the long side
        run_targeted({{"17", "25"}, {"18", "19"}, {"20", "23"}, {"21", "22"},
                      {"21", "23"}, {"22", "29"}, {"24", "26"}, {"24", "32"}});

        const auto& c = res.coverage;
        std::ostringstream missing;
        auto need = [&missing](long long count, const char* name) {
            if (count < 1) missing << name << " ";
        };
        need(c.case_counts[0], "single-append");
        need(c.case_counts[1], "single-mixed");
        need(c.case_counts[2], "dual-append");
        need(c.case_counts[3], "dual-mixed");
        need(c.case_counts[4], "dual-insert");
        need(c.c_zero, "c=0");
        need(c.c_full, "c=full");
        need(c.cprime_exhausted, "c'-exhausted");
        need(c.bprime_exhausted_mixed, "b'-exhausted-mixed");
        need(c.bprime_exhausted_insert, "b'-exhausted-insert");
        need(c.xeq_removed, "x-equality");
        bool ok = missing.str().empty();
        report(7, "special-case coverage", ok, ok ? "" : "missing: " + missing.str());
    }
}

void criterion_6_distinctness() {
    SplitMix64 rng(103);
    bool ok = true;
    std::string issue;
    for (int t = 0; t < 500 && ok; ++t) {
        size_t size = 1 + rng.below(50);
        std::vector<long long> values;
        bool dup = false;
        for (size_t k = 0; k < size; ++k) values.push_back(static_cast<long long>(rng.below(101)));
        std::vector<long long> sorted = values;
        std::sort(sorted.begin(), sorted.end());
        for (size_t k = 0; k + 1 < sorted.size(); ++k) dup = dup || sorted[k] == sorted[k + 1];

        FastResult r = solve_fast(gen_distinctness(values));
        bool zero = r.delta == Scalar(0);
        if (zero == dup) {
            ok = false;
            issue = "multiset of size " + std::to_string(size) + " misclassified";
        }
    }
    report(6, "element-distinctness reduction", ok, issue);
}

void criterion_8_scaling() {
    // Short lengths keep the candidate set busy; the default dense family
    // saturates and degenerates to a single list for both solvers.
    const long long bench_len_max = 4;

    bool ok = true;

    // Linear memory growth first, while the process high-water mark is
    // still below these runs' footprints: over an increasing ladder each
    // reading then bounds that run.
    {
        std::vector<long long> mem_sizes{250000, 500000, 1000000};
        std::vector<long> hwm;
        for (long long n : mem_sizes) {
            GenSpec spec;
            spec.n = static_cast<int>(n);
            spec.seed = 43;
            spec.len_max = bench_len_max;
            Instance inst = gen_random(spec);
            FastResult r = solve_fast(inst);
            if (r.leaves_created > 2 * static_cast<size_t>(n)) {
                report(8, "leaf accounting <= 2n", false, "");
                ok = false;
            }
            hwm.push_back(read_vm_hwm_kb());
        }
        bool mem_ok = hwm[0] > 0;
        std::ostringstream mr;
        for (size_t k = 0; k + 1 < hwm.size(); ++k) {
            double ratio = static_cast<double>(hwm[k + 1]) / static_cast<double>(hwm[k]);
            mr << (k ? ", " : "") << ratio;
            if (ratio > 2.5) mem_ok = false;
        }
        report(8, "memory growth <= 2.5x per doubling", mem_ok, "hwm ratios " + mr.str());
        if (!mem_ok) ok = false;
    }

    // fast solver ladder
    std::vector<long long> sizes{100000, 200000, 400000, 800000};
    std::vector<double> fast_ms;
    for (long long n : sizes) {
        GenSpec spec;
        spec.n = static_cast<int>(n);
        spec.seed = 42;
        spec.len_max = bench_len_max;
        Instance inst = gen_random(spec);
        std::vector<double> runs;
        for (int r = 0; r < 3; ++r) {
            runs.push_back(time_ms([&]() {
                FastResult res = solve_fast(inst);
                if (res.order.size() != static_cast<size_t>(n)) std::abort();
            }));
        }
        fast_ms.push_back(median_of(runs));
    }
    {
        bool fast_ok = true;
        std::ostringstream ratios;
        for (size_t k = 0; k + 1 < fast_ms.size(); ++k) {
            double ratio = fast_ms[k + 1] / fast_ms[k];
            ratios << (k ? ", " : "") << ratio;
            if (ratio > 2.6) fast_ok = false;
        }
        report(8, "fast doubling ratios <= 2.6", fast_ok, "ratios " + ratios.str());
        if (!fast_ok) ok = false;
    }

    // absolute wall time at n = 1e6
    {
        GenSpec spec;
        spec.n = 1000000;
        spec.seed = 42;
        spec.len_max = bench_len_max;
        Instance inst = gen_random(spec);
        double ms = time_ms([&]() { (void)solve_fast(inst); });
        bool under = ms < 30000.0;
        report(8, "n=1e6 under 30 s", under, std::to_string(ms / 1000.0) + " s");
        if (!under) ok = false;
    }

    // preliminary solver quadratic ratios
    {
        std::vector<long long> psizes{2500, 5000, 10000};
        std::vector<double> pms;
        for (long long n : psizes) {
            GenSpec spec;
            spec.n = static_cast<int>(n);
            spec.seed = 44;
            spec.len_max = bench_len_max;
            Instance inst = gen_random(spec);
            std::vector<double> runs;
            for (int r = 0; r < 3; ++r) {
                runs.push_back(time_ms([&]() { (void)solve_preliminary(inst); }));
            }
            pms.push_back(median_of(runs));
        }
        bool sep_ok = true;
        std::ostringstream pr;
        for (size_t k = 0; k + 1 < pms.size(); ++k) {
            double ratio = pms[k + 1] / pms[k];
            pr << (k ? ", " : "") << ratio;
            if (ratio < 2.8 || ratio > 6.0) sep_ok = false;
        }
        report(8, "prelim ~4x per doubling", sep_ok, "ratios " + pr.str());
        if (!sep_ok) ok = false;
    }
    (void)ok;
}

void criterion_9_equal_length() {
    SplitMix64 rng(104);
    bool ok = true;
    std::string issue;
    for (int t = 0; t < 200 && ok; ++t) {
        int n = 1 + static_cast<int>(rng.below(100));
        long long len = 1 + static_cast<long long>(rng.below(6));
        std::vector<std::pair<Scalar, Scalar>> raw;
        for (int k = 0; k < n; ++k) {
            long long left = static_cast<long long>(rng.below(static_cast<uint64_t>(3 * n + 1)));
            raw.emplace_back(Scalar(left), Scalar(left + len));
        }
        Instance inst = normalize_instance(raw);
        Scalar greedy = greedy_equal_length(inst).delta;
        Scalar fast = solve_fast(inst).delta;
        if (greedy != fast) {
            ok = false;
            issue = "greedy " + greedy.str() + " vs fast " + fast.str();
        }
    }
    report(9, "equal-length shortcut agreement", ok, issue);
}

} // namespace

int main() {
    criterion_1_to_5_and_7();
    criterion_6_distinctness();
    criterion_8_scaling();
    criterion_9_equal_length();
    if (failures) {
        std::printf("%d criterion check(s) FAILED\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
