#include "intsep/oracles.hpp"

#include <algorithm>
#include <numeric>

namespace intsep {

Solution brute_force(const Instance& inst) {
    if (inst.n() > 10) throw Error("brute force limited to n <= 10");
    Solution best;
    best.direction = Direction::OneDirection;
    if (inst.n() == 0) return best;

    std::vector<int> perm(static_cast<size_t>(inst.n()));
    std::iota(perm.begin(), perm.end(), 1);
    bool first = true;
    do {
        Configuration cfg = left_possible_placement(inst, perm);
        Scalar d = max_displacement(cfg, inst);
        if (first || d < best.delta) {
            best.delta = std::move(d);
            best.order = perm;
            best.config = std::move(cfg);
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

Solution greedy_equal_length(const Instance& inst) {
    for (int i = 2; i <= inst.n(); ++i) {
        if (inst.length(i) != inst.length(1)) throw Error("intervals do not have equal length");
    }
    Solution s;
    s.direction = Direction::OneDirection;
    s.order.resize(static_cast<size_t>(inst.n()));
    std::iota(s.order.begin(), s.order.end(), 1);
    s.config = left_possible_placement(inst, s.order);
    s.delta = max_displacement(s.config, inst);
    return s;
}

Instance gen_distinctness(const std::vector<long long>& values) {
    std::vector<std::pair<Scalar, Scalar>> raw;
    raw.reserve(values.size());
    const Scalar half = Scalar::fraction(1, 2);
    for (long long a : values) {
        Scalar center = Scalar(a) * Scalar(10);
        raw.emplace_back(center - half, center + half);
    }
    return normalize_instance(raw);
}

Instance gen_random(const GenSpec& spec) {
    if (spec.n < 1) throw Error("generator needs n >= 1");
    long long coord_max = spec.coord_max >= 0 ? spec.coord_max : 4LL * spec.n;
    long long len_max = spec.len_max >= 1 ? spec.len_max : spec.n;
    long long len_min = std::max(1LL, spec.len_min);
    len_max = std::max(len_max, len_min);
    if (coord_max < len_min) coord_max = len_min;

    uint64_t bias_threshold = 0;
    if (spec.containment_bias > 0) {
        double b = std::min(spec.containment_bias, 1.0);
        bias_threshold = static_cast<uint64_t>(b * 18446744073709551615.0);
    }

    SplitMix64 rng(spec.seed);
    struct Raw {
        long long left, len;
    };
    std::vector<Raw> out;
    out.reserve(static_cast<size_t>(spec.n));
    bool has_nested = false;

    auto gen_free = [&]() {
        long long len = len_min + static_cast<long long>(rng.below(static_cast<uint64_t>(len_max - len_min + 1)));
        len = std::min(len, coord_max);
        long long left = static_cast<long long>(rng.below(static_cast<uint64_t>(coord_max - len + 1)));
        return Raw{left, len};
    };

    for (int i = 0; i < spec.n; ++i) {
        bool nest = i > 0 && bias_threshold && rng.next() < bias_threshold;
        if (nest) {
            const Raw& host = out[rng.below(static_cast<uint64_t>(out.size()))];
            if (host.len >= 2) {
                long long len = 1 + static_cast<long long>(rng.below(static_cast<uint64_t>(host.len - 1)));
                long long left = host.left + static_cast<long long>(rng.below(static_cast<uint64_t>(host.len - len + 1)));
                out.push_back(Raw{left, len});
                has_nested = true;
                continue;
            }
        }
        out.push_back(gen_free());
    }

    // the bias promises at least one nested pair when attainable
    if (bias_threshold && spec.n >= 2 && !has_nested) {
        size_t host = 0;
        for (size_t k = 0; k + 1 < out.size(); ++k) {
            if (out[k].len > out[host].len) host = k;
        }
        if (out[host].len >= 2) {
            long long len = out[host].len - 1;
            out.back() = Raw{out[host].left, len};
        }
    }

    std::vector<std::pair<Scalar, Scalar>> raw;
    raw.reserve(out.size());
    for (const Raw& r : out) raw.emplace_back(Scalar(r.left), Scalar(r.left + r.len));
    return normalize_instance(raw);
}

} // namespace intsep
