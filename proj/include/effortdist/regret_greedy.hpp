#pragma once

#include <optional>
#include <string>
#include <vector>

#include "effortdist/addressable_heap.hpp"
#include "effortdist/instance.hpp"
#include "effortdist/multiset_pairs.hpp"

namespace effortdist {

// One greedy step: apply diff pattern (A_c, B_c) by increasing x_i by d for
// i in inc[d-1] and decreasing x_j by d for j in dec[d-1]. All chosen index
// sets are pairwise disjoint.
struct Move {
    int pair_index = -1;
    std::vector<std::vector<int>> inc;  // inc[d-1] = I'_d, ascending ids
    std::vector<std::vector<int>> dec;  // dec[d-1] = J'_d, ascending ids
    Revenue gain = 0;

    std::vector<int> touched() const;
};

// Running state of the regret greedy: the current profile x plus 2m heaps.
// DO_d (max) holds <i, R_i(x_i+d)-R_i(x_i)> for every i with x_i+d <= m;
// UNDO_d (min) holds <i, R_i(x_i)-R_i(x_i-d)> for every i with x_i-d >= 0.
struct GreedyState {
    const Instance* inst = nullptr;
    Profile x;
    Revenue revenue = 0;
    int effort = 0;
    std::vector<AddressableHeap> do_heaps;    // index d-1
    std::vector<AddressableHeap> undo_heaps;  // index d-1
    std::vector<UnitGapPair> pairs;
    // Extra candidates admitted into each pool beyond a+b; tests raise this
    // to confirm the prescribed pool size already captures the optimum.
    int pool_slack = 0;
};

GreedyState init_state(const Instance& inst);

// Best move realizing diff pattern (A_c, B_c) against the current state,
// or nullopt when no feasible disjoint selection exists. The candidate
// pool per heap is its top min(a+b, size) entries. Ties on gain resolve
// to the lexicographically smallest chosen index sets.
std::optional<Move> best_move_for_pair(GreedyState& state, int pair_index);

// Applies the max-gain move over all pairs (ties: earliest pair, then
// smallest index sets) and updates every affected heap entry.
// Throws ExhaustedEfforts at effort == n*m.
Move advance(GreedyState& state);

// Recomputes every heap entry from x and checks membership conditions.
bool audit_heaps(const GreedyState& state, std::string* why = nullptr);

struct GreedyOptions {
    bool record_trajectory = true;
    int pool_slack = 0;
};

struct GreedySolveResult {
    RevenueCurve curve;               // optimal revenue for k = 0..n*m
    std::vector<Profile> trajectory;  // x^(0)..x^(nm) when recorded
    std::vector<Move> moves;          // move applied at each step when recorded
};

GreedySolveResult solve_all_k(const Instance& inst, const GreedyOptions& opts = {});

}  // namespace effortdist
