#pragma once

#include <span>
#include <vector>

#include "fnom/bigint.hpp"
#include "fnom/fseq.hpp"

namespace fnom {

/// Parts k_1..k_s of a multi F-nomial symbol together with the intended
/// total n. The coefficient is nonzero only when the parts sum to the total.
struct MultiIndex {
    int total = 0;
    std::vector<int> parts;

    bool sums_to_total() const noexcept;
};

/// n_F! (1 for n = 0). n must be >= 0.
BigInt f_factorial(const FSequence& F, int n);

/// Falling product n_F * (n-1)_F * ... * (n-k+1)_F; 1 for k = 0.
/// Requires 0 <= k <= n.
BigInt falling_factorial(const FSequence& F, int n, int k);

/// F-nomial coefficient n_F! / (k_F! * (n-k)_F!), computed by exact division.
/// Returns 0 for k < 0 or k > n and 1 for k = 0 or k = n. Throws
/// InexactDivisionError when the division leaves a remainder, which signals a
/// non-admissible sequence. n must be >= 0.
BigInt fnomial(const FSequence& F, int n, int k);

/// Multi F-nomial coefficient n_F! / ((k_1)_F! * ... * (k_s)_F!) when the
/// parts sum to n, and 0 otherwise. Zero parts contribute 0_F! = 1. Results
/// are memoized per sequence under the key (n, sorted nonzero parts), which
/// the permutation invariance of the symbol makes sound.
BigInt multi_fnomial(const FSequence& F, int n, std::span<const int> parts);
BigInt multi_fnomial(const FSequence& F, const MultiIndex& index);

/// Same value as multi_fnomial but bypassing the memo table; reference path
/// for the memoization-transparency property.
BigInt multi_fnomial_uncached(const FSequence& F, int n, std::span<const int> parts);

}  // namespace fnom
