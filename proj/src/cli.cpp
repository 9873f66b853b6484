#include "intsep/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "intsep/fast.hpp"
#include "intsep/io.hpp"
#include "intsep/oracles.hpp"
#include "intsep/prelim.hpp"

namespace intsep {

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitParseError = 2;
constexpr int kExitBruteGuard = 3;

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return parse_instance(in);
}

long long parse_size_token(const std::string& tok) {
    try {
        size_t used = 0;
        double v = std::stod(tok, &used);
        if (used != tok.size() || v < 1 || v > 5e8) throw std::invalid_argument("");
        return static_cast<long long>(v + 0.5);
    } catch (const std::exception&) {
        throw Error("bad size \"" + tok + "\"");
    }
}

std::vector<long long> parse_csv_sizes(const std::string& csv) {
    std::vector<long long> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(parse_size_token(tok));
    }
    if (out.empty()) throw Error("no sizes given");
    return out;
}

std::vector<long long> parse_csv_values(const std::string& csv) {
    std::vector<long long> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            size_t used = 0;
            long long v = std::stoll(tok, &used);
            if (used != tok.size()) throw std::invalid_argument("");
            out.push_back(v);
        } catch (const std::exception&) {
            throw Error("bad integer \"" + tok + "\"");
        }
    }
    if (out.empty()) throw Error("no values given");
    return out;
}

double time_once_ms(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

double median_ms(int repeat, const std::function<void()>& fn) {
    std::vector<double> samples;
    samples.reserve(static_cast<size_t>(repeat));
    for (int r = 0; r < repeat; ++r) samples.push_back(time_once_ms(fn));
    std::sort(samples.begin(), samples.end());
    return samples[samples.size() / 2];
}

std::string format_flags(const StepFlags& f) {
    std::string s;
    auto add = [&s](const char* name) {
        if (!s.empty()) s += ',';
        s += name;
    };
    if (f.c_zero) add("c0");
    if (f.c_full) add("cfull");
    if (f.cprime_exhausted) add("cprime-end");
    if (f.bprime_exhausted) add("bprime-end");
    if (f.xeq_removed) add("xeq");
    return s.empty() ? "-" : s;
}

int cmd_solve(const std::string& input, const std::string& mode, const std::string& algo,
              const std::string& output, const std::string& trace, std::ostream& out, std::ostream& err) {
    Instance inst;
    try {
        inst = load_instance(input);
    } catch (const ParseError& e) {
        err << input << ": " << e.what() << "\n";
        return kExitParseError;
    }

    Algo a = algo == "prelim" ? Algo::Prelim : (algo == "brute" ? Algo::Brute : Algo::Fast);
    if (a == Algo::Brute && inst.n() > 10) {
        err << "brute-force guard: n = " << inst.n() << " exceeds 10\n";
        return kExitBruteGuard;
    }

    Solution sol;
    if (a == Algo::Fast && !trace.empty()) {
        std::ofstream tf(trace);
        if (!tf) throw Error("cannot open " + trace);
        FastOptions opts;
        opts.on_step = [&tf](int, const StepOutcome& o) {
            tf << to_string(o.case_tag) << '\t' << o.removed_count << '\t' << (o.spawned ? 1 : 0) << '\t'
               << o.leaf_count << '\t' << format_flags(o.flags) << '\n';
        };
        FastResult r = solve_fast(inst, opts);
        sol.delta = r.delta;
        sol.order = std::move(r.order);
        sol.config = left_possible_placement(inst, sol.order);
    } else {
        sol = solve_one_direction(inst, a);
    }
    if (mode == "two") sol = to_two_direction(sol);

    std::string text = render_solution(inst, sol);
    if (output.empty() || output == "-") {
        out << text;
    } else {
        std::ofstream of(output);
        if (!of) throw Error("cannot open " + output);
        of << text;
    }
    return 0;
}

int cmd_verify(const std::string& input, const std::string& solution, const std::string& mode,
               std::ostream& out, std::ostream& err) {
    Instance inst;
    SolutionFile sol;
    try {
        inst = load_instance(input);
    } catch (const ParseError& e) {
        err << input << ": " << e.what() << "\n";
        return kExitParseError;
    }
    try {
        std::ifstream in(solution);
        if (!in) throw Error("cannot open " + solution);
        sol = parse_solution(in);
    } catch (const ParseError& e) {
        err << solution << ": " << e.what() << "\n";
        return kExitParseError;
    }
    VerifyResult res = verify_solution(inst, sol, mode == "two" ? Direction::TwoDirection : Direction::OneDirection);
    if (!res.ok) {
        err << "infeasible: " << res.message << "\n";
        return kExitVerifyFailed;
    }
    out << "ok delta " << sol.delta.str() << "\n";
    return 0;
}

int cmd_bench(const std::string& sizes_csv, uint64_t seed, int repeat, std::ostream& out) {
    std::vector<long long> sizes = parse_csv_sizes(sizes_csv);
    out << "n\tfast_ms\tprelim_ms\n";
    for (long long n : sizes) {
        GenSpec spec;
        spec.n = static_cast<int>(n);
        spec.seed = seed;
        spec.len_max = 4; // short lengths keep the candidate set branching
        Instance inst = gen_random(spec);

        double fast_ms = median_ms(repeat, [&]() { (void)solve_fast(inst); });
        out << n << '\t' << fast_ms;
        if (n <= 20000) {
            double prelim_ms = median_ms(repeat, [&]() { (void)solve_preliminary(inst); });
            out << '\t' << prelim_ms << '\n';
        } else {
            out << "\t-\n";
        }
        out.flush();
    }
    return 0;
}

} // namespace

Solution solve_one_direction(const Instance& inst, Algo algo) {
    switch (algo) {
        case Algo::Brute:
            return brute_force(inst);
        case Algo::Prelim:
            return solve_preliminary(inst);
        case Algo::Fast: {
            FastResult r = solve_fast(inst);
            Solution s;
            s.direction = Direction::OneDirection;
            s.delta = std::move(r.delta);
            s.order = std::move(r.order);
            s.config = left_possible_placement(inst, s.order);
            return s;
        }
    }
    throw Error("unreachable");
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"interval separation solver"};
    app.require_subcommand(1);

    std::string input, output, solution, mode = "one", algo = "fast", trace;

    CLI::App* solve = app.add_subcommand("solve", "solve an instance file");
    solve->add_option("--input", input, "instance file")->required();
    solve->add_option("--mode", mode, "one | two")->check(CLI::IsMember({"one", "two"}));
    solve->add_option("--algo", algo, "fast | prelim | brute")->check(CLI::IsMember({"fast", "prelim", "brute"}));
    solve->add_option("--output", output, "solution file (default stdout)");
    solve->add_option("--trace", trace, "per-step debug trace file (fast only)");

    CLI::App* verify = app.add_subcommand("verify", "check a solution file");
    verify->add_option("--input", input, "instance file")->required();
    verify->add_option("--solution", solution, "solution file")->required();
    verify->add_option("--mode", mode, "one | two")->check(CLI::IsMember({"one", "two"}));

    CLI::App* gen = app.add_subcommand("gen", "emit an instance file on stdout");
    gen->require_subcommand(1);
    std::string values_csv;
    CLI::App* gen_distinct = gen->add_subcommand("distinct", "one interval per integer value");
    gen_distinct->add_option("--values", values_csv, "comma-separated integers")->required();
    GenSpec gspec;
    long long gen_coord_max = -1, gen_len_min = 1, gen_len_max = -1;
    CLI::App* gen_rand = gen->add_subcommand("random", "seeded random instance");
    gen_rand->add_option("--n", gspec.n, "interval count")->required()->check(CLI::PositiveNumber);
    gen_rand->add_option("--seed", gspec.seed, "PRNG seed");
    gen_rand->add_option("--coord-max", gen_coord_max, "coordinate upper bound (default 4n)");
    gen_rand->add_option("--len-min", gen_len_min, "minimum length");
    gen_rand->add_option("--len-max", gen_len_max, "maximum length (default n)");
    gen_rand->add_option("--bias", gspec.containment_bias, "containment probability");

    CLI::App* bench = app.add_subcommand("bench", "time the solvers over a size ladder");
    std::string sizes_csv = "1e4,1e5,1e6";
    uint64_t bench_seed = 1;
    int repeat = 3;
    bench->add_option("--sizes", sizes_csv, "comma-separated sizes (1e5 style accepted)");
    bench->add_option("--seed", bench_seed, "PRNG seed");
    bench->add_option("--repeat", repeat, "runs per size (median reported)")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (solve->parsed()) return cmd_solve(input, mode, algo, output, trace, out, err);
        if (verify->parsed()) return cmd_verify(input, solution, mode, out, err);
        if (gen->parsed()) {
            if (gen_distinct->parsed()) {
                out << render_instance(gen_distinctness(parse_csv_values(values_csv)));
                return 0;
            }
            gspec.coord_max = gen_coord_max;
            gspec.len_min = gen_len_min;
            gspec.len_max = gen_len_max;
            out << render_instance(gen_random(gspec));
            return 0;
        }
        if (bench->parsed()) return cmd_bench(sizes_csv, bench_seed, repeat, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}

} // namespace intsep
