#pragma once

#include <span>
#include <string>
#include <vector>

#include "fnom/bigint.hpp"

namespace fnom {

/// Dense univariate polynomial with big-integer coefficients, stored
/// low-to-high. Always normalized: the leading coefficient of a nonzero
/// polynomial is nonzero; the zero polynomial has an empty coefficient vector
/// and degree -1. Zero coefficients below the degree are stored explicitly,
/// so x^3 - 2x^2 + 1 is the vector (1, 0, -2, 1).
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<BigInt> coeffs);

    static Polynomial constant(BigInt c);
    static Polynomial monomial(int degree, BigInt coeff = 1);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Coefficient of x^i; 0 beyond the degree.
    BigInt coeff(int i) const;
    std::span<const BigInt> coeffs() const noexcept { return coeffs_; }

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const BigInt& scalar);
    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs);
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs);
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    friend Polynomial operator*(Polynomial p, const BigInt& scalar);
    friend Polynomial operator*(const BigInt& scalar, Polynomial p);

    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

    /// Human-readable descending-power form, e.g. "x^3 - 2x^2 + 1"; "0" for
    /// the zero polynomial.
    std::string to_string() const;
    /// JSON array of decimal strings, low-to-high: ["1","0","-2","1"].
    std::string to_json() const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

}  // namespace fnom
