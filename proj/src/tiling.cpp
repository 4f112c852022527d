#include "fnom/tiling.hpp"

#include <numeric>
#include <stdexcept>

#include "fnom/coeffs.hpp"

namespace fnom {

LambdaVector lambda_two_part(const FSequence& F, int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("lambda_two_part: parts must be >= 1");
    LambdaVector lv;
    lv.parts = {a, b};
    switch (F.kind()) {
    case SequenceKind::Natural:
        lv.lambdas = {1, 1};
        break;
    case SequenceKind::Fibonacci:
        // (a+b)_F = (b-1)_F * a_F + (a+1)_F * b_F
        lv.lambdas = {F.value(static_cast<std::size_t>(b) - 1),
                      F.value(static_cast<std::size_t>(a) + 1)};
        break;
    default:
        throw UnsupportedSequenceError(F.name());
    }
    return lv;
}

LambdaVector lambda_decompose(const FSequence& F, std::span<const int> parts) {
    if (parts.empty()) throw std::invalid_argument("lambda_decompose: needs at least one part");
    for (int p : parts)
        if (p < 1) throw std::invalid_argument("lambda_decompose: parts must be >= 1");
    const std::size_t s = parts.size();
    LambdaVector lv;
    lv.parts.assign(parts.begin(), parts.end());
    lv.lambdas.assign(s, BigInt(1));
    long long tail = std::accumulate(parts.begin(), parts.end(), 0LL);
    BigInt carry = 1;
    for (std::size_t i = 0; i + 1 < s; ++i) {
        tail -= parts[i];
        const LambdaVector split = lambda_two_part(F, parts[i], static_cast<int>(tail));
        lv.lambdas[i] = carry * split.lambdas[0];
        carry *= split.lambdas[1];
    }
    lv.lambdas[s - 1] = carry;
    return lv;
}

bool satisfies_lambda_identity(const FSequence& F, const LambdaVector& lv) {
    if (lv.parts.size() != lv.lambdas.size() || lv.parts.empty()) return false;
    long long total = 0;
    BigInt rhs = 0;
    for (std::size_t i = 0; i < lv.parts.size(); ++i) {
        if (lv.parts[i] < 0) return false;
        total += lv.parts[i];
        rhs += lv.lambdas[i] * F.value(static_cast<std::size_t>(lv.parts[i]));
    }
    return F.value(static_cast<std::size_t>(total)) == rhs;
}

RecurrenceReport verify_weight_recurrence(const FSequence& F, int n,
                                            std::span<const int> parts) {
    if (n < 1) throw std::invalid_argument("verify_weight_recurrence: n must be >= 1");
    const long long sum = std::accumulate(parts.begin(), parts.end(), 0LL);
    if (sum != n)
        throw std::invalid_argument("verify_weight_recurrence: parts must sum to n");
    const LambdaVector lv = lambda_decompose(F, parts);
    RecurrenceReport report;
    report.lhs = multi_fnomial(F, n, parts);
    std::vector<int> reduced(parts.begin(), parts.end());
    for (std::size_t j = 0; j < reduced.size(); ++j) {
        --reduced[j];
        report.rhs += lv.lambdas[j] * multi_fnomial(F, n - 1, reduced);
        ++reduced[j];
    }
    report.passed = report.lhs == report.rhs;
    return report;
}

}  // namespace fnom
