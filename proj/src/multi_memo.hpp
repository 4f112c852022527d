#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "fnom/bigint.hpp"

namespace fnom::detail {

/// Concurrent memo table for multi F-nomial coefficients, keyed by
/// (n, sorted nonzero parts). Lookups share the lock; a miss computes outside
/// any lock and the first writer wins, which is harmless because every thread
/// computes the same value for the same key.
class MultiMemo {
public:
    template <typename Compute>
    BigInt get_or_compute(const std::vector<int>& key, Compute&& compute) {
        {
            std::shared_lock lock(mutex_);
            if (auto it = table_.find(key); it != table_.end()) return it->second;
        }
        BigInt value = compute();
        std::unique_lock lock(mutex_);
        return table_.try_emplace(key, std::move(value)).first->second;
    }

private:
    std::map<std::vector<int>, BigInt> table_;
    std::shared_mutex mutex_;
};

}  // namespace fnom::detail
