#include "effortdist/multiset_pairs.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

namespace effortdist {

int Multiset::sum() const {
    int s = 0;
    for (int d = 1; d <= max_value(); ++d) s += d * counts[d];
    return s;
}

int Multiset::cardinality() const {
    int c = 0;
    for (int d = 1; d <= max_value(); ++d) c += counts[d];
    return c;
}

std::vector<int> Multiset::values() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(cardinality()));
    for (int d = 1; d <= max_value(); ++d)
        for (int c = 0; c < counts[d]; ++c) out.push_back(d);
    return out;
}

Multiset Multiset::from_values(int m, const std::vector<int>& values) {
    Multiset ms(m);
    for (int v : values) {
        if (v < 1 || v > m)
            throw SolverError(ErrorKind::OutOfRange,
                              "element " + std::to_string(v) + " outside {1.." +
                                  std::to_string(m) + "}");
        ++ms.counts[v];
    }
    return ms;
}

std::set<int> nonempty_subset_sums(const Multiset& m) {
    const int total = m.sum();
    std::vector<char> reachable(static_cast<std::size_t>(total) + 1, 0);
    reachable[0] = 1;
    for (int d = 1; d <= m.max_value(); ++d) {
        for (int c = 0; c < m.counts[d]; ++c) {
            for (int s = total; s >= d; --s)
                if (reachable[s - d]) reachable[s] = 1;
        }
    }
    std::set<int> out;
    for (int s = 1; s <= total; ++s)
        if (reachable[s]) out.insert(s);
    return out;
}

bool is_reducible(const Multiset& a, const Multiset& b) {
    const std::set<int> sa = nonempty_subset_sums(a);
    const std::set<int> sb = nonempty_subset_sums(b);
    const std::set<int>& small = sa.size() <= sb.size() ? sa : sb;
    const std::set<int>& large = sa.size() <= sb.size() ? sb : sa;
    for (int s : small)
        if (large.count(s)) return true;
    return false;
}

namespace {

// Reachable subset sums as a bitmask; bit 0 (the empty subset) is always
// set. Only valid while sums stay below 64, which holds for m <= 7.
std::uint64_t subset_sum_mask(const std::vector<int>& counts) {
    std::uint64_t mask = 1;
    for (int d = 1; d < static_cast<int>(counts.size()); ++d)
        for (int c = 0; c < counts[d]; ++c) mask |= mask << d;
    return mask;
}

struct MaskedMultiset {
    std::vector<int> counts;
    std::uint64_t mask;
};

// All multisets over {1..m} with the given exact sum, counts vectors in
// ascending lexicographic order.
std::vector<MaskedMultiset> multisets_with_sum(int m, int sum) {
    std::vector<MaskedMultiset> out;
    std::vector<int> counts(static_cast<std::size_t>(m) + 1, 0);
    std::function<void(int, int)> rec = [&](int d, int remaining) {
        if (d == m) {
            if (remaining % m == 0) {
                counts[m] = remaining / m;
                out.push_back({counts, subset_sum_mask(counts)});
                counts[m] = 0;
            }
            return;
        }
        for (int c = 0; c * d <= remaining; ++c) {
            counts[d] = c;
            rec(d + 1, remaining - c * d);
        }
        counts[d] = 0;
    };
    rec(1, sum);
    return out;
}

}  // namespace

std::vector<UnitGapPair> enumerate_unit_gap_irreducible(int m, std::uint64_t budget) {
    if (m < 1) throw SolverError(ErrorKind::BadParams, "m must be at least 1");
    if (m > 7)
        throw SolverError(ErrorKind::MTooLarge,
                          "m = " + std::to_string(m) + " exceeds the 64-bit subset-sum mask");

    const int lambda = m * m;

    // Only sum(B) < m^2 needs scanning: with both sums at m^2 or above the
    // pair is reducible, and sum(A) = sum(B) + 1.
    std::vector<std::vector<MaskedMultiset>> by_sum(static_cast<std::size_t>(lambda) + 1);
    for (int s = 0; s <= lambda; ++s) by_sum[s] = multisets_with_sum(m, s);

    std::uint64_t candidates = 0;
    for (int s = 0; s < lambda; ++s)
        candidates += static_cast<std::uint64_t>(by_sum[s].size()) * by_sum[s + 1].size();
    if (candidates > budget)
        throw SolverError(ErrorKind::MTooLarge,
                          std::to_string(candidates) + " candidate pairs exceed budget " +
                              std::to_string(budget));

    std::vector<UnitGapPair> out;
    for (int s = 0; s < lambda; ++s) {
        for (const MaskedMultiset& b : by_sum[s]) {
            for (const MaskedMultiset& a : by_sum[s + 1]) {
                const std::uint64_t common = a.mask & b.mask & ~1ull;
                if (common != 0) continue;
                UnitGapPair pair;
                pair.A.counts = a.counts;
                pair.B.counts = b.counts;
                pair.a = pair.A.cardinality();
                pair.b = pair.B.cardinality();
                out.push_back(std::move(pair));
            }
        }
    }
    return out;
}

std::string format_pair(const UnitGapPair& pair) {
    auto render = [](const Multiset& ms) {
        std::string s = "{";
        bool first = true;
        for (int v : ms.values()) {
            if (!first) s += ",";
            s += std::to_string(v);
            first = false;
        }
        s += "}";
        return s;
    };
    return "A=" + render(pair.A) + " B=" + render(pair.B);
}

}  // namespace effortdist
