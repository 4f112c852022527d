#pragma once

#include <optional>

#include "fnom/bigint.hpp"
#include "fnom/fseq.hpp"
#include "fnom/trimatrix.hpp"

namespace fnom {

enum class InverseMethod { Direct, Oracle };

/// Entry (n, k) of the inverse of the F-nomial coefficient matrix, computed
/// straight from its closed form: 1 for n = k, otherwise
///
///   sum_{s=1}^{n-k} (-1)^s  sum_{k_1+...+k_s = n-k, k_i >= 1}
///                           multi_fnomial(F, n, (k, k_1, ..., k_s))
///
/// folded in one pass over the composition stream with sign (-1)^length.
/// Requires 0 <= k <= n. Every entry is an integer even though the fold never
/// divides by anything the F-nomials have not already absorbed.
BigInt fnomial_inverse_direct(const FSequence& F, int n, int k);

/// The forward matrix: entry (n, k) = fnomial(F, n, k) for 0 <= k <= n <= N.
/// Unit diagonal by construction.
TriMatrix fnomial_matrix(const FSequence& F, int N);

/// Exact inverse of a lower-triangular matrix with unit diagonal, by forward
/// substitution entirely in big integers (the unit diagonal guarantees the
/// inverse is again an integer unit-triangular matrix). Throws
/// std::invalid_argument if the diagonal is not all ones.
TriMatrix invert_unitriangular(const TriMatrix& M);

/// Inverse of the order-(N+1) F-nomial matrix via either path: entry-by-entry
/// closed form (Direct) or forward substitution (Oracle).
TriMatrix fnomial_inverse_matrix(const FSequence& F, int N, InverseMethod method);

struct DeltaConvolutionReport {
    std::string sequence;
    int order = 0;
    bool passed = false;
    struct Failure {
        int n = 0;
        int k = 0;
        BigInt sum;  // should have been delta(n, k)
    };
    std::optional<Failure> first_failure;
};

/// Checks sum_{s=k}^{n} C(n,s)_F * C(s,k)_F^{-1} = delta(n,k) for all
/// 0 <= k <= n <= N, with the inverse entries coming from the direct closed
/// form. Failures land in the report, not in exceptions.
DeltaConvolutionReport verify_delta_convolution(const FSequence& F, int N);

}  // namespace fnom
