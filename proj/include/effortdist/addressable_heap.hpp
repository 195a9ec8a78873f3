#pragma once

#include <cassert>
#include <cstdint>
#include <utility>
#include <vector>

namespace effortdist {

// Binary heap over project ids with a position map, so update-key and
// delete run in O(log n). At most one entry per id. The direction flag
// selects max- or min-heap; ties on value are broken towards the smaller
// id so that every extraction order is deterministic.
class AddressableHeap {
public:
    using Value = std::int64_t;

    enum class Direction { Max, Min };

    AddressableHeap() = default;
    AddressableHeap(int capacity, Direction dir)
        : dir_(dir), pos_(static_cast<std::size_t>(capacity), kAbsent),
          val_(static_cast<std::size_t>(capacity), 0) {}

    Direction direction() const { return dir_; }
    std::size_t size() const { return heap_.size(); }
    bool empty() const { return heap_.empty(); }

    bool contains(int id) const { return pos_[static_cast<std::size_t>(id)] != kAbsent; }

    Value value_of(int id) const {
        assert(contains(id));
        return val_[static_cast<std::size_t>(id)];
    }

    void insert(int id, Value value) {
        assert(!contains(id));
        val_[static_cast<std::size_t>(id)] = value;
        heap_.push_back(id);
        pos_[static_cast<std::size_t>(id)] = static_cast<int>(heap_.size()) - 1;
        sift_up(heap_.size() - 1);
    }

    void update(int id, Value value) {
        assert(contains(id));
        const std::size_t i = static_cast<std::size_t>(pos_[static_cast<std::size_t>(id)]);
        val_[static_cast<std::size_t>(id)] = value;
        sift_up(i);
        sift_down(pos_cast(id));
    }

    void erase(int id) {
        assert(contains(id));
        remove_at(pos_cast(id));
    }

    std::pair<int, Value> top() const {
        assert(!empty());
        const int id = heap_[0];
        return {id, val_[static_cast<std::size_t>(id)]};
    }

    std::pair<int, Value> pop() {
        auto best = top();
        remove_at(0);
        return best;
    }

    // Top t entries in extraction order (fewer if the heap is smaller),
    // obtained by t pops followed by reinsertion.
    std::vector<std::pair<int, Value>> top_t(std::size_t t) {
        std::vector<std::pair<int, Value>> out;
        out.reserve(t < size() ? t : size());
        while (out.size() < t && !empty()) out.push_back(pop());
        for (const auto& [id, value] : out) insert(id, value);
        return out;
    }

    std::vector<int> ids() const { return heap_; }

private:
    static constexpr int kAbsent = -1;

    std::size_t pos_cast(int id) const {
        return static_cast<std::size_t>(pos_[static_cast<std::size_t>(id)]);
    }

    // True when a outranks b.
    bool before(int a, int b) const {
        const Value va = val_[static_cast<std::size_t>(a)];
        const Value vb = val_[static_cast<std::size_t>(b)];
        if (va != vb) return dir_ == Direction::Max ? va > vb : va < vb;
        return a < b;
    }

    void place(std::size_t i, int id) {
        heap_[i] = id;
        pos_[static_cast<std::size_t>(id)] = static_cast<int>(i);
    }

    void sift_up(std::size_t i) {
        const int id = heap_[i];
        while (i > 0) {
            const std::size_t parent = (i - 1) / 2;
            if (!before(id, heap_[parent])) break;
            place(i, heap_[parent]);
            i = parent;
        }
        place(i, id);
    }

    void sift_down(std::size_t i) {
        const int id = heap_[i];
        const std::size_t n = heap_.size();
        for (;;) {
            std::size_t child = 2 * i + 1;
            if (child >= n) break;
            if (child + 1 < n && before(heap_[child + 1], heap_[child])) ++child;
            if (!before(heap_[child], id)) break;
            place(i, heap_[child]);
            i = child;
        }
        place(i, id);
    }

    void remove_at(std::size_t i) {
        pos_[static_cast<std::size_t>(heap_[i])] = kAbsent;
        const int moved = heap_.back();
        heap_.pop_back();
        if (i < heap_.size()) {
            place(i, moved);
            sift_up(i);
            sift_down(pos_cast(moved));
        }
    }

    Direction dir_ = Direction::Max;
    std::vector<int> heap_;  // ids in heap order
    std::vector<int> pos_;   // pos_[id] = index in heap_ or kAbsent
    std::vector<Value> val_;
};

}  // namespace effortdist
