#include "fnom/inversion.hpp"

#include <stdexcept>
#include <vector>

#include "fnom/coeffs.hpp"
#include "fnom/compositions.hpp"

namespace fnom {

BigInt fnomial_inverse_direct(const FSequence& F, int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("fnomial_inverse_direct: need 0 <= k <= n");
    if (n == k) return 1;
    BigInt total = 0;
    std::vector<int> symbol;
    for (const auto& comp : AllCompositions(n - k)) {
        symbol.clear();
        symbol.reserve(comp.size() + 1);
        symbol.push_back(k);
        symbol.insert(symbol.end(), comp.begin(), comp.end());
        const BigInt term = multi_fnomial(F, n, symbol);
        if (comp.size() % 2 == 1) total -= term;
        else total += term;
    }
    return total;
}

TriMatrix fnomial_matrix(const FSequence& F, int N) {
    if (N < 0) throw std::invalid_argument("fnomial_matrix: N must be >= 0");
    TriMatrix M(N + 1);
    for (int n = 0; n <= N; ++n)
        for (int k = 0; k <= n; ++k) M.at(n, k) = fnomial(F, n, k);
    return M;
}

TriMatrix invert_unitriangular(const TriMatrix& M) {
    if (!M.has_unit_diagonal())
        throw std::invalid_argument("invert_unitriangular: matrix must have a unit diagonal");
    const int order = M.order();
    TriMatrix X = TriMatrix::identity(order);
    for (int n = 0; n < order; ++n) {
        for (int k = n - 1; k >= 0; --k) {
            BigInt sum = 0;
            for (int j = k; j < n; ++j) sum += M.at(n, j) * X.at(j, k);
            X.at(n, k) = -sum;
        }
    }
    return X;
}

TriMatrix fnomial_inverse_matrix(const FSequence& F, int N, InverseMethod method) {
    if (N < 0) throw std::invalid_argument("fnomial_inverse_matrix: N must be >= 0");
    if (method == InverseMethod::Oracle) return invert_unitriangular(fnomial_matrix(F, N));
    TriMatrix X(N + 1);
    for (int n = 0; n <= N; ++n)
        for (int k = 0; k <= n; ++k) X.at(n, k) = fnomial_inverse_direct(F, n, k);
    return X;
}

DeltaConvolutionReport verify_delta_convolution(const FSequence& F, int N) {
    if (N < 0) throw std::invalid_argument("verify_delta_convolution: N must be >= 0");
    DeltaConvolutionReport report;
    report.sequence = F.name();
    report.order = N;
    const TriMatrix inverse = fnomial_inverse_matrix(F, N, InverseMethod::Direct);
    for (int n = 0; n <= N; ++n) {
        for (int k = 0; k <= n; ++k) {
            BigInt sum = 0;
            for (int s = k; s <= n; ++s) sum += fnomial(F, n, s) * inverse.at(s, k);
            const int expected = n == k ? 1 : 0;
            if (sum != expected) {
                report.first_failure = DeltaConvolutionReport::Failure{n, k, sum};
                return report;
            }
        }
    }
    report.passed = true;
    return report;
}

}  // namespace fnom
