#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fnom/fseq.hpp"
#include "fnom/inversion.hpp"
#include "fnom/polynomial.hpp"

namespace fnom {

/// Phi_n(x) = sum_k C(n,k)_F^{-1} x^k: the polynomial whose coefficients are
/// row n of the inverse F-nomial matrix. Monic of degree n, Phi_0 = 1.
/// The Oracle method (default) reads the row off one triangular inversion;
/// Direct evaluates each coefficient by the closed-form composition fold.
Polynomial phi_polynomial(const FSequence& F, int n,
                          InverseMethod method = InverseMethod::Oracle);

/// Phi_0 .. Phi_N in one pass (one inversion for the Oracle method).
std::vector<Polynomial> phi_family(const FSequence& F, int N,
                                   InverseMethod method = InverseMethod::Oracle);

/// The coefficients {C(n,k)_F} expressing x^n in the Phi basis:
/// x^n = sum_k C(n,k)_F Phi_k(x). Returned as (k, coefficient) pairs,
/// k = 0..n.
std::vector<std::pair<int, BigInt>> expand_monomial(const FSequence& F, int n);

struct RoundTripReport {
    std::string sequence;
    int order = 0;
    bool passed = false;
    std::optional<int> first_failure;  // smallest n whose expansion missed x^n
};

/// For each n <= N expands sum_k C(n,k)_F * Phi_k(x) with exact polynomial
/// arithmetic and checks it reproduces the monomial x^n.
RoundTripReport roundtrip_check(const FSequence& F, int N);

}  // namespace fnom
