#pragma once

#include <cstdint>
#include <vector>

#include "effortdist/errors.hpp"

namespace effortdist {

// Revenues are exact signed integers throughout; cross-algorithm equality
// checks rely on bit-exact arithmetic.
using Revenue = std::int64_t;

// n projects, per-project effort cap m, revenue table R of shape n x (m+1)
// with R[j][0] == 0. Immutable after validation; safe to share across
// concurrent solver runs.
struct Instance {
    int n = 0;
    int m = 0;
    std::vector<std::vector<Revenue>> R;

    Revenue revenue(int project, int efforts) const { return R[project][efforts]; }
};

// Allocation vector, x[j] in {0..m}.
using Profile = std::vector<int>;

int effort(const Profile& p);

// Integer sequence indexed by effort count: values[k] = best revenue using
// exactly k efforts within the curve's scope. Indices outside [0, size)
// are infeasible by convention.
struct RevenueCurve {
    std::vector<Revenue> values;

    RevenueCurve() = default;
    explicit RevenueCurve(std::vector<Revenue> v) : values(std::move(v)) {}

    std::size_t size() const { return values.size(); }
    Revenue operator[](std::size_t k) const { return values[k]; }
    Revenue& operator[](std::size_t k) { return values[k]; }
    bool operator==(const RevenueCurve&) const = default;

    auto begin() const { return values.begin(); }
    auto end() const { return values.end(); }
};

// Checks every invariant and reports all violations at once:
// EmptyInstance (n < 1 or m < 1), ShapeMismatch (R not n rows of m+1),
// NonZeroBase (some R[j][0] != 0).
Instance validate_instance(int n, int m, std::vector<std::vector<Revenue>> R);

// Sum of R[j][x_j], exact. Throws OutOfRange if p is not a valid profile
// for inst.
Revenue profile_revenue(const Instance& inst, const Profile& p);

}  // namespace effortdist
