#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "effortdist/errors.hpp"

namespace effortdist {

// Multiset of values drawn from {1..m}, stored as multiplicities.
// counts[d] = multiplicity of value d; counts[0] is unused and stays 0.
struct Multiset {
    std::vector<int> counts;

    Multiset() : counts(1, 0) {}
    explicit Multiset(int m) : counts(static_cast<std::size_t>(m) + 1, 0) {}

    int max_value() const { return static_cast<int>(counts.size()) - 1; }

    int sum() const;          // sum of elements with multiplicity
    int cardinality() const;  // number of elements with multiplicity
    bool empty() const { return cardinality() == 0; }

    // Expanded element list, ascending. {2,2} -> [2, 2].
    std::vector<int> values() const;

    static Multiset from_values(int m, const std::vector<int>& values);

    bool operator==(const Multiset&) const = default;
};

// Exact set of sums attainable by nonempty sub-multisets of M.
std::set<int> nonempty_subset_sums(const Multiset& m);

// (A,B) is reducible iff some nonempty sub-multiset of A and some nonempty
// sub-multiset of B have equal sums.
bool is_reducible(const Multiset& a, const Multiset& b);

// Irreducible pair with sum(A) - sum(B) = 1. Element counts a, b mirror
// A.cardinality() / B.cardinality().
struct UnitGapPair {
    Multiset A;
    Multiset B;
    int a = 0;
    int b = 0;

    int a_mult(int d) const { return A.counts[d]; }
    int b_mult(int d) const { return B.counts[d]; }
};

inline constexpr std::uint64_t kDefaultEnumerationBudget = 200'000'000;

// All irreducible pairs (A,B) over {1..m} with sum(A) = sum(B) + 1, in
// canonical order: ascending sum(B), then lexicographic on B's counts,
// then on A's counts. Completeness rests on both sums below m^2 forcing
// reducibility, so only sum(B) < m^2 is scanned.
//
// Throws MTooLarge when the candidate-pair budget would be exceeded.
std::vector<UnitGapPair> enumerate_unit_gap_irreducible(
    int m, std::uint64_t budget = kDefaultEnumerationBudget);

// "A={...} B={...}" with elements ascending, e.g. "A={2,2} B={3}".
std::string format_pair(const UnitGapPair& pair);

}  // namespace effortdist
