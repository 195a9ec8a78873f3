#pragma once

#include <span>
#include <vector>

#include "effortdist/instance.hpp"

namespace effortdist {

// True iff every row has non-decreasing increments:
// R[j][x+1] - R[j][x] >= R[j][x] - R[j][x-1] for 1 <= x <= m-1.
bool is_convex(const Instance& inst);

struct ConvexAllKResult {
    RevenueCurve curve;  // length n*m + 1

    // Projects sorted by R_j(m) descending, ties by original index.
    std::vector<int> order;

    // For k with k % m != 0: position in `order` of the project that holds
    // k % m efforts in the arg-max candidate profile; -1 when k % m == 0.
    std::vector<int> partial_pos;
};

// All-k optimum for convex instances in O(nm) after the sort.
// Throws NotConvex otherwise.
ConvexAllKResult convex_all_k(const Instance& inst);

// Single-k optimum in O(nm) via selection instead of sorting.
// Throws NotConvex / KOutOfRange.
Revenue convex_single_k(const Instance& inst, int k);

struct SelectionResult {
    Revenue threshold;             // value of the K-th largest element
    std::vector<int> top_indices;  // exactly K indices, unordered partition
};

// Expected-linear-time top-K selection with deterministic pivoting.
// The induced total order is (value desc, index asc). Throws KOutOfRange.
SelectionResult select_kth_largest(std::span<const Revenue> values, int K);

}  // namespace effortdist
