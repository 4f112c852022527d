#include "fnom/polybasis.hpp"

#include <stdexcept>

#include "fnom/coeffs.hpp"

namespace fnom {

Polynomial phi_polynomial(const FSequence& F, int n, InverseMethod method) {
    if (n < 0) throw std::invalid_argument("phi_polynomial: n must be >= 0");
    std::vector<BigInt> coeffs(static_cast<std::size_t>(n) + 1);
    if (method == InverseMethod::Direct) {
        for (int k = 0; k <= n; ++k)
            coeffs[static_cast<std::size_t>(k)] = fnomial_inverse_direct(F, n, k);
    } else {
        const TriMatrix inverse = fnomial_inverse_matrix(F, n, InverseMethod::Oracle);
        for (int k = 0; k <= n; ++k) coeffs[static_cast<std::size_t>(k)] = inverse.at(n, k);
    }
    return Polynomial(std::move(coeffs));
}

std::vector<Polynomial> phi_family(const FSequence& F, int N, InverseMethod method) {
    if (N < 0) throw std::invalid_argument("phi_family: N must be >= 0");
    std::vector<Polynomial> family;
    family.reserve(static_cast<std::size_t>(N) + 1);
    if (method == InverseMethod::Oracle) {
        const TriMatrix inverse = fnomial_inverse_matrix(F, N, InverseMethod::Oracle);
        for (int n = 0; n <= N; ++n) {
            std::vector<BigInt> coeffs(static_cast<std::size_t>(n) + 1);
            for (int k = 0; k <= n; ++k) coeffs[static_cast<std::size_t>(k)] = inverse.at(n, k);
            family.emplace_back(std::move(coeffs));
        }
    } else {
        for (int n = 0; n <= N; ++n) family.push_back(phi_polynomial(F, n, method));
    }
    return family;
}

std::vector<std::pair<int, BigInt>> expand_monomial(const FSequence& F, int n) {
    if (n < 0) throw std::invalid_argument("expand_monomial: n must be >= 0");
    std::vector<std::pair<int, BigInt>> terms;
    terms.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) terms.emplace_back(k, fnomial(F, n, k));
    return terms;
}

RoundTripReport roundtrip_check(const FSequence& F, int N) {
    if (N < 0) throw std::invalid_argument("roundtrip_check: N must be >= 0");
    RoundTripReport report;
    report.sequence = F.name();
    report.order = N;
    const auto family = phi_family(F, N, InverseMethod::Oracle);
    for (int n = 0; n <= N; ++n) {
        Polynomial sum;
        for (const auto& [k, c] : expand_monomial(F, n))
            sum += c * family[static_cast<std::size_t>(k)];
        if (sum != Polynomial::monomial(n)) {
            report.first_failure = n;
            return report;
        }
    }
    report.passed = true;
    return report;
}

}  // namespace fnom
