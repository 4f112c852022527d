#include "fnom/compositions.hpp"

#include <algorithm>
#include <stdexcept>

namespace fnom {

CompositionRange::CompositionRange(int total, int part_count)
    : total_(total), part_count_(part_count) {
    if (total < 0 || part_count < 0)
        throw std::invalid_argument("CompositionRange: total and part_count must be >= 0");
}

CompositionRange::iterator::iterator(int total, int part_count) {
    if (part_count == 0) {
        done_ = total != 0;  // (0, 0) yields a single empty composition
        return;
    }
    if (part_count > total) {
        done_ = true;
        return;
    }
    parts_.assign(static_cast<std::size_t>(part_count), 1);
    parts_.back() = total - part_count + 1;
}

CompositionRange::iterator& CompositionRange::iterator::operator++() {
    if (done_) return *this;
    const int s = static_cast<int>(parts_.size());
    if (s == 0) {
        done_ = true;  // the empty composition has no successor
        return *this;
    }
    // Rightmost position that can absorb one unit from its suffix while the
    // suffix keeps every part >= 1; everything right of it resets to the
    // lexicographically least tail.
    int suffix = parts_[s - 1];
    for (int i = s - 2; i >= 0; --i) {
        if (suffix >= s - i) {
            ++parts_[i];
            for (int j = i + 1; j < s - 1; ++j) parts_[j] = 1;
            parts_[s - 1] = suffix - 1 - (s - 2 - i);
            return *this;
        }
        suffix += parts_[i];
    }
    done_ = true;
    return *this;
}

AllCompositions::AllCompositions(int total) : total_(total) {
    if (total < 1) throw std::invalid_argument("AllCompositions: total must be >= 1");
}

AllCompositions::iterator::iterator(int total)
    : total_(total), part_count_(1), inner_(CompositionRange(total, 1).begin()) {}

AllCompositions::iterator& AllCompositions::iterator::operator++() {
    ++inner_;
    if (inner_ == std::default_sentinel) {
        ++part_count_;
        if (part_count_ <= total_) inner_ = CompositionRange(total_, part_count_).begin();
    }
    return *this;
}

BigInt composition_count(int total, int part_count) {
    if (total < 0 || part_count < 0)
        throw std::invalid_argument("composition_count: total and part_count must be >= 0");
    if (part_count == 0) return total == 0 ? 1 : 0;
    if (part_count > total) return 0;
    // binomial(total - 1, part_count - 1), divisions exact at every step
    const int n = total - 1;
    const int k = std::min(part_count - 1, n - (part_count - 1));
    BigInt result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

BigInt composition_count(int total) {
    if (total < 1) throw std::invalid_argument("composition_count: total must be >= 1");
    return BigInt(1) << (total - 1);
}

}  // namespace fnom
