#pragma once

#include <cstdint>
#include <vector>

#include "effortdist/instance.hpp"

namespace effortdist {

// dp[j][k] = max revenue over the first j projects using exactly k efforts,
// or infeasible (k > j*m). Infeasibility is explicit; no negative surrogate
// values enter the maxima.
struct DpTable {
    int n = 0;
    int m = 0;
    std::vector<std::vector<Revenue>> value;   // (n+1) x (n*m+1)
    std::vector<std::vector<char>> feasible;   // same shape
    std::vector<std::vector<char>> choice;     // chosen x_j per state (empty without reconstruction)

    bool is_feasible(int j, int k) const { return feasible[j][k] != 0; }
};

DpTable compute_dp_table(const Instance& inst, bool with_choices = true);

struct DpResult {
    RevenueCurve curve;             // length n*m + 1
    std::vector<Profile> profiles;  // per-k optimal profile; empty when not requested
};

// Exact optimum for every k in [0, n*m], O(n^2 m^2).
DpResult dp_all_k(const Instance& inst, bool with_profiles = true);

// Exhaustive maximum over all (m+1)^n profiles, grouped by effort sum.
// Throws BudgetExceeded when (m+1)^n > budget.
RevenueCurve brute_force_all_k(const Instance& inst, std::uint64_t budget = 2'000'000);

}  // namespace effortdist
