#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fnom/bigint.hpp"
#include "fnom/fseq.hpp"

// Reference implementations kept deliberately different from the library:
// rational arithmetic with GCD reduction instead of checked integer division,
// pure-addition triangles instead of factorial quotients, and recursive
// generation instead of iterative succession.
namespace oracle {

using Rational = boost::multiprecision::cpp_rational;

// C(n,k)_F as the reduced rational prod_{i=1..k} (n-k+i)_F / i_F.
inline Rational fnomial_rational(const fnom::FSequence& F, int n, int k) {
    if (k < 0 || k > n) return 0;
    Rational r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= Rational(F.value(static_cast<std::size_t>(n - k + i)));
        r /= Rational(F.value(static_cast<std::size_t>(i)));
    }
    return r;
}

// C(n; k_1..k_s)_F by the chain C(n, k_1)_F * C(n - k_1; k_2..k_s)_F.
inline Rational multi_rational(const fnom::FSequence& F, int n, const std::vector<int>& parts) {
    Rational r = 1;
    int rest = n;
    for (int p : parts) {
        r *= fnomial_rational(F, rest, p);
        rest -= p;
    }
    return rest == 0 ? r : Rational(0);
}

// Rows 0..N of Pascal's triangle by addition only.
inline std::vector<std::vector<fnom::BigInt>> pascal_triangle(int N) {
    std::vector<std::vector<fnom::BigInt>> rows(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        auto& row = rows[static_cast<std::size_t>(n)];
        row.assign(static_cast<std::size_t>(n) + 1, 1);
        for (int k = 1; k < n; ++k)
            row[static_cast<std::size_t>(k)] =
                rows[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(k) - 1] +
                rows[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(k)];
    }
    return rows;
}

// Base-q triangle by the addition rule C(n,k)_q = C(n-1,k-1)_q + q^k C(n-1,k)_q.
inline std::vector<std::vector<fnom::BigInt>> q_pascal_triangle(int N, int q) {
    std::vector<std::vector<fnom::BigInt>> rows(static_cast<std::size_t>(N) + 1);
    rows[0] = {1};
    for (int n = 1; n <= N; ++n) {
        auto& row = rows[static_cast<std::size_t>(n)];
        row.assign(static_cast<std::size_t>(n) + 1, 1);
        fnom::BigInt qk = q;
        for (int k = 1; k < n; ++k) {
            row[static_cast<std::size_t>(k)] =
                rows[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(k) - 1] +
                qk * rows[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(k)];
            qk *= q;
        }
    }
    return rows;
}

namespace detail {
inline void compositions_into(int m, std::vector<int>& prefix,
                              std::vector<std::vector<int>>& out) {
    if (m == 0) {
        out.push_back(prefix);
        return;
    }
    for (int first = 1; first <= m; ++first) {
        prefix.push_back(first);
        compositions_into(m - first, prefix, out);
        prefix.pop_back();
    }
}
}  // namespace detail

// Every composition of m, by recursive descent on the first part.
inline std::vector<std::vector<int>> brute_compositions(int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    detail::compositions_into(m, prefix, out);
    return out;
}

// The compositions of m into exactly `parts` parts, in the same order the
// streaming enumerator promises (lexicographic once the length is fixed).
inline std::vector<std::vector<int>> brute_compositions(int m, int parts) {
    std::vector<std::vector<int>> out;
    for (auto& c : brute_compositions(m))
        if (static_cast<int>(c.size()) == parts) out.push_back(std::move(c));
    return out;
}

// A randomized sequence whose coefficients are integers by construction:
// pointwise products of families that keep every C(n,k) an integer still do
// (the coefficient of a pointwise product is the product of the factors'
// coefficients), and the scalar family c^n contributes a factor c^(k(n-k)).
inline fnom::FSequence random_admissible(std::uint64_t seed, std::size_t length,
                                         const std::string& name) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> base_kind(0, 2);
    std::uniform_int_distribution<int> q_pick(2, 5);
    std::uniform_int_distribution<int> exponent(1, 2);
    std::uniform_int_distribution<int> scalar(1, 3);
    std::uniform_int_distribution<int> factor_count(1, 2);

    std::vector<fnom::FSequence> bases;
    std::vector<int> exponents;
    const int factors = factor_count(rng);
    for (int i = 0; i < factors; ++i) {
        switch (base_kind(rng)) {
        case 0: bases.push_back(fnom::FSequence::natural()); break;
        case 1: bases.push_back(fnom::FSequence::fibonacci()); break;
        default: bases.push_back(fnom::FSequence::gaussian(q_pick(rng))); break;
        }
        exponents.push_back(exponent(rng));
    }
    const int c = scalar(rng);

    std::vector<fnom::BigInt> values;
    values.reserve(length);
    fnom::BigInt cn = 1;
    for (std::size_t n = 0; n < length; ++n) {
        fnom::BigInt v = cn;
        for (std::size_t i = 0; i < bases.size(); ++i) {
            const fnom::BigInt b = bases[i].value(n);
            for (int e = 0; e < exponents[i]; ++e) v *= b;
        }
        values.push_back(std::move(v));
        cn *= c;
    }
    return fnom::FSequence::explicit_values(std::move(values), name);
}

}  // namespace oracle
