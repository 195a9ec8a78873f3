#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "effortdist/instance.hpp"

namespace effortdist {

// Partition of an m=2 instance: with a_j = R_j(1) and b_j = R_j(2) - R_j(1),
// group A holds projects with a_j > b_j, group B the rest. Both groups keep
// the global order sorted by R_j(2) descending (ties by index).
struct GroupSplit {
    std::vector<int> order;    // all projects, sorted
    std::vector<int> group_a;  // original indices
    std::vector<int> group_b;
};

GroupSplit split_groups(const Instance& inst);  // throws WrongM unless m == 2

// f(k) = sum of the k largest values in the pooled multiset {a_i, b_i : i in A};
// the best revenue from giving k efforts to group A. Length 2|A| + 1.
RevenueCurve compute_f(const Instance& inst, const std::vector<int>& group_a);

// g(k) = best revenue from giving k efforts to group B. Even k take the top
// k/2 projects in full; odd k place one single effort, via one suffix-max
// pass over a and one prefix-min pass over b. Length 2|B| + 1.
RevenueCurve compute_g(const Instance& inst, const std::vector<int>& group_b);

// Result of checking the five oscillating-concavity conditions.
// Indices in violation_index refer to the k of the failed inequality.
struct OscillationReport {
    bool pass = true;
    std::array<bool, 5> condition_ok{true, true, true, true, true};
    std::array<int, 5> violation_index{-1, -1, -1, -1, -1};
    std::string detail;  // first violation, human readable
};

OscillationReport check_oscillating_concave(const RevenueCurve& g);

bool has_nonincreasing_increments(const RevenueCurve& f);

struct MaxPlusResult {
    RevenueCurve h;           // length |f| + |g| - 1
    std::vector<int> argmax;  // chosen i per k (smallest maximizing candidate)
};

// (max,+) convolution h(k) = max f(i) + g(k-i) over the feasible window,
// in O(1) per k: the candidate set is {i_prev-1, i_prev, i_prev+1} clamped
// to the window, plus both window endpoints. Requires f with
// non-increasing increments and g oscillating concave; throws
// PreconditionViolated otherwise.
MaxPlusResult maxplus_concave_osc(const RevenueCurve& f, const RevenueCurve& g);

// Quadratic reference convolution; the oracle and runtime fallback.
RevenueCurve maxplus_naive(const RevenueCurve& f, const RevenueCurve& g);

// Full m=2 pipeline: split, build f and g, convolve. O(n) after the sort.
RevenueCurve solve_all_k_m2(const Instance& inst);  // throws WrongM

}  // namespace effortdist
