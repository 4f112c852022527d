#pragma once

#include <iterator>
#include <vector>

#include "fnom/bigint.hpp"

namespace fnom {

/// Streams every composition of `total` into exactly `part_count` positive
/// parts, each exactly once, in lexicographic order of the part tuple.
/// (3, 2) yields (1,2), (2,1). Yields nothing when part_count > total or when
/// total > 0 with part_count = 0; yields one empty composition for (0, 0).
/// Memory stays proportional to one composition, not to the count.
class CompositionRange {
public:
    CompositionRange(int total, int part_count);

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = std::vector<int>;
        using difference_type = std::ptrdiff_t;
        using pointer = const std::vector<int>*;
        using reference = const std::vector<int>&;

        reference operator*() const noexcept { return parts_; }
        pointer operator->() const noexcept { return &parts_; }
        iterator& operator++();
        void operator++(int) { ++*this; }

        friend bool operator==(const iterator& it, std::default_sentinel_t) noexcept {
            return it.done_;
        }

    private:
        friend class CompositionRange;
        iterator(int total, int part_count);

        std::vector<int> parts_;
        bool done_ = false;
    };

    iterator begin() const { return iterator(total_, part_count_); }
    std::default_sentinel_t end() const noexcept { return {}; }

    int total() const noexcept { return total_; }
    int part_count() const noexcept { return part_count_; }

private:
    int total_;
    int part_count_;
};

/// Streams the concatenation of CompositionRange(total, s) for s = 1..total:
/// all 2^(total-1) compositions of `total`. Requires total >= 1.
class AllCompositions {
public:
    explicit AllCompositions(int total);

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = std::vector<int>;
        using difference_type = std::ptrdiff_t;
        using pointer = const std::vector<int>*;
        using reference = const std::vector<int>&;

        reference operator*() const noexcept { return *inner_; }
        pointer operator->() const noexcept { return &*inner_; }
        iterator& operator++();
        void operator++(int) { ++*this; }

        friend bool operator==(const iterator& it, std::default_sentinel_t) noexcept {
            return it.part_count_ > it.total_;
        }

    private:
        friend class AllCompositions;
        explicit iterator(int total);

        int total_;
        int part_count_;
        CompositionRange::iterator inner_;
    };

    iterator begin() const { return iterator(total_); }
    std::default_sentinel_t end() const noexcept { return {}; }

    int total() const noexcept { return total_; }

private:
    int total_;
};

/// Number of compositions of `total` into `part_count` positive parts:
/// binomial(total-1, part_count-1).
BigInt composition_count(int total, int part_count);

/// Number of compositions of `total` into any number of positive parts:
/// 2^(total-1). Requires total >= 1.
BigInt composition_count(int total);

}  // namespace fnom
