#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "effortdist/instance.hpp"

namespace effortdist {

// Index of the first k where the curves disagree (or differ in length).
std::optional<std::size_t> first_mismatch(const RevenueCurve& a, const RevenueCurve& b);

// Checks that every consecutive profile pair of a greedy trajectory has an
// irreducible diff and total movement below 2*m^2.
struct TrajectoryCheck {
    bool ok = true;
    std::string message;
};

TrajectoryCheck check_trajectory_invariants(const Instance& inst,
                                            const std::vector<Profile>& trajectory);

struct VerifyOptions {
    std::uint64_t brute_force_budget = 100'000;  // skip brute force above this
    bool audit_greedy = true;
};

struct VerifyReport {
    bool pass = true;
    std::vector<std::string> lines;
};

// Runs every algorithm applicable to inst (DP always, greedy always, the
// convex path when is_convex, the m=2 path when m == 2, brute force within
// budget), compares full curves against the DP baseline and audits the
// greedy trajectory invariants.
VerifyReport cross_verify(const Instance& inst, const VerifyOptions& opts = {});

}  // namespace effortdist
