#pragma once

#include <span>
#include <vector>

#include "fnom/bigint.hpp"
#include "fnom/fseq.hpp"

namespace fnom {

/// Weights decomposing a sum of sequence values over a composition:
/// (k_1 + ... + k_s)_F = sum_j lambdas[j] * (k_j)_F.
struct LambdaVector {
    std::vector<int> parts;
    std::vector<BigInt> lambdas;
};

/// Two-part weights for (a + b)_F = lambda_a * a_F + lambda_b * b_F.
/// Natural numbers: lambda_a = lambda_b = 1.
/// Fibonacci: lambda_a = (b-1)_F, lambda_b = (a+1)_F.
/// Requires a >= 1, b >= 1. Throws UnsupportedSequenceError for other
/// sequence kinds.
LambdaVector lambda_two_part(const FSequence& F, int a, int b);

/// Extends the two-part split to any composition by peeling parts off the
/// front: split k_1 against k_2 + ... + k_s, then recurse on the tail with
/// the tail's weight multiplied through. Parts must be >= 1.
LambdaVector lambda_decompose(const FSequence& F, std::span<const int> parts);

/// Evaluates the defining identity of a LambdaVector exactly.
bool satisfies_lambda_identity(const FSequence& F, const LambdaVector& lv);

struct RecurrenceReport {
    bool passed = false;
    BigInt lhs;
    BigInt rhs;
};

/// Checks the first-order multinomial recurrence at (n; parts):
///   C(n; k_1..k_s)_F = sum_j lambda_{k_j} * C(n-1; k_1..k_j-1..k_s)_F
/// where the weights come from lambda_decompose and parts reduced to zero
/// stay in place. Requires sum(parts) == n, n >= 1.
RecurrenceReport verify_weight_recurrence(const FSequence& F, int n,
                                            std::span<const int> parts);

}  // namespace fnom
