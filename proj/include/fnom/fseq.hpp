#pragma once

#include <cstddef>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fnom/bigint.hpp"

namespace fnom {

enum class SequenceKind { Natural, Fibonacci, Gaussian, Explicit };

namespace detail {
class MultiMemo;  // per-sequence memo table for multi F-nomial coefficients
}

/// A named non-negative-integer sequence n -> n_F.
///
/// Built-ins:
///   natural     n_F = n
///   fibonacci   n_F = (n-1)_F + (n-2)_F with 1_F = 2_F = 1 (and 0_F = 0)
///   gaussian(q) n_F = 1 + q + ... + q^(n-1), integer q >= 2 (and 0_F = 0)
/// plus user-supplied explicit value lists.
///
/// Instances are immutable values sharing an internal prefix cache of values
/// and factorials; copying is cheap and shares the cache. Cached prefixes
/// grow on demand (explicit sequences are finite and throw std::out_of_range
/// past their last value). Concurrent queries return the same values as
/// sequential ones; reads do not take an exclusive lock once cached.
class FSequence {
public:
    static FSequence natural();
    static FSequence fibonacci();
    static FSequence gaussian(int q);
    static FSequence explicit_values(std::vector<BigInt> values,
                                     std::string name = "explicit");
    /// One non-negative decimal integer per line; line i holds i_F, starting
    /// at i = 0. Throws std::invalid_argument on malformed or negative input.
    static FSequence from_file(const std::filesystem::path& path);

    const std::string& name() const noexcept;
    SequenceKind kind() const noexcept;
    /// q of a Gaussian sequence; throws std::logic_error for other kinds.
    int gaussian_base() const;
    /// Largest valid index for finite (explicit) sequences, nullopt otherwise.
    std::optional<std::size_t> max_index() const noexcept;

    /// n_F
    BigInt value(std::size_t n) const;
    /// n_F! = n_F * (n-1)_F * ... * 1_F, prefix-cached; 1 for n = 0.
    BigInt factorial(std::size_t n) const;

    detail::MultiMemo& multi_memo() const noexcept;

private:
    struct Impl;
    explicit FSequence(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<Impl> impl_;
};

struct AdmissibilityReport {
    std::string sequence;
    int order = 0;     // the N that was checked
    bool admissible = false;
    std::optional<std::pair<int, int>> first_failure;  // (n, k)
    std::string detail;  // reason for the first failure, empty when admissible
};

/// Evaluates every C(n,k)_F for 0 <= k <= n <= N by exact rational reduction
/// and reports whether all of them are non-negative integers. A failing
/// sequence yields a negative report, not an error.
AdmissibilityReport check_admissible(const FSequence& F, int N);

}  // namespace fnom
