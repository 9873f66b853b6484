#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "intsep/scalar.hpp"

namespace intsep {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateInterval : Error {
    using Error::Error;
};

enum class Direction { OneDirection, TwoDirection };

struct Interval {
    int id = 0; // original input ordinal, 1-based
    Scalar left;
    Scalar right;

    Scalar length() const { return right - left; }
};

// Intervals sorted by (left, right, id); all solver indices are 1..n
// positions in this order.
class Instance {
public:
    Instance() = default;
    explicit Instance(std::vector<Interval> sorted) : intervals_(std::move(sorted)) {}

    int n() const { return static_cast<int>(intervals_.size()); }
    const Interval& at(int index) const { return intervals_[static_cast<size_t>(index - 1)]; }
    const Scalar& left(int index) const { return at(index).left; }
    const Scalar& right(int index) const { return at(index).right; }
    Scalar length(int index) const { return at(index).length(); }
    const std::vector<Interval>& intervals() const { return intervals_; }

    bool operator==(const Instance& o) const;

private:
    std::vector<Interval> intervals_;
};

// New left-endpoint coordinates for a subset of 1..n.
class Configuration {
public:
    Configuration() = default;
    explicit Configuration(int n) : pos_(static_cast<size_t>(n) + 1), present_(static_cast<size_t>(n) + 1, 0) {}

    void set(int index, Scalar position);
    bool has(int index) const { return index >= 1 && index < static_cast<int>(present_.size()) && present_[static_cast<size_t>(index)]; }
    const Scalar& at(int index) const;
    const std::vector<int>& covered() const { return covered_; } // insertion order
    Scalar displacement(int index, const Instance& inst) const { return at(index) - inst.left(index); }

private:
    std::vector<Scalar> pos_;
    std::vector<char> present_;
    std::vector<int> covered_;
};

struct Solution {
    Scalar delta;
    std::vector<int> order; // permutation of 1..n, left-to-right
    Configuration config;
    Direction direction = Direction::OneDirection;
};

// Sorts by (left, right, input ordinal) and validates left < right.
// Throws DegenerateInterval otherwise.
Instance normalize_instance(const std::vector<std::pair<Scalar, Scalar>>& raw);

// Greedy placement of `order`: first interval at its input left, each next
// one at max(own input left, right end of its predecessor). Linear time.
Configuration left_possible_placement(const Instance& inst, const std::vector<int>& order);

Scalar max_displacement(const Configuration& config, const Instance& inst,
                        Direction dir = Direction::OneDirection);

bool is_feasible(const Configuration& config, const Instance& inst,
                 Direction dir = Direction::OneDirection);

// Shift every position left by delta/2, halving the max displacement; the
// order is unchanged. Optimal for the two-direction problem whenever the
// input is a one-direction optimum.
Solution to_two_direction(const Solution& one_dir);

} // namespace intsep
