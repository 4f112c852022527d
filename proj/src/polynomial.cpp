#include "fnom/polynomial.hpp"

#include <stdexcept>

namespace fnom {

Polynomial::Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(BigInt c) {
    std::vector<BigInt> coeffs;
    coeffs.push_back(std::move(c));
    return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::monomial(int degree, BigInt coeff) {
    if (degree < 0) throw std::invalid_argument("Polynomial::monomial: degree must be >= 0");
    std::vector<BigInt> coeffs(static_cast<std::size_t>(degree) + 1);
    coeffs.back() = std::move(coeff);
    return Polynomial(std::move(coeffs));
}

BigInt Polynomial::coeff(int i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= coeffs_.size()) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const BigInt& scalar) {
    if (scalar == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }

Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<BigInt> product(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            product[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    return Polynomial(std::move(product));
}

Polynomial operator*(Polynomial p, const BigInt& scalar) { return p *= scalar; }

Polynomial operator*(const BigInt& scalar, Polynomial p) { return p *= scalar; }

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        const BigInt magnitude = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (i == 0 || magnitude != 1) out += magnitude.str();
        if (i > 0) {
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

std::string Polynomial::to_json() const {
    std::string out = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i > 0) out += ",";
        out += "\"" + coeffs_[i].str() + "\"";
    }
    return out + "]";
}

}  // namespace fnom
