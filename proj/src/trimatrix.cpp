#include "fnom/trimatrix.hpp"

#include <stdexcept>

namespace fnom {

TriMatrix::TriMatrix(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("TriMatrix: order must be >= 0");
    rows_.resize(static_cast<std::size_t>(order));
    for (int n = 0; n < order; ++n) rows_[n].assign(static_cast<std::size_t>(n) + 1, BigInt(0));
}

TriMatrix TriMatrix::identity(int order) {
    TriMatrix m(order);
    for (int n = 0; n < order; ++n) m.rows_[n][static_cast<std::size_t>(n)] = 1;
    return m;
}

BigInt& TriMatrix::at(int n, int k) {
    if (n < 0 || n >= order_ || k < 0 || k > n)
        throw std::out_of_range("TriMatrix::at(" + std::to_string(n) + "," + std::to_string(k) +
                                ") outside the lower triangle of order " + std::to_string(order_));
    return rows_[n][static_cast<std::size_t>(k)];
}

const BigInt& TriMatrix::at(int n, int k) const {
    if (n < 0 || n >= order_ || k < 0 || k > n)
        throw std::out_of_range("TriMatrix::at(" + std::to_string(n) + "," + std::to_string(k) +
                                ") outside the lower triangle of order " + std::to_string(order_));
    return rows_[n][static_cast<std::size_t>(k)];
}

bool TriMatrix::has_unit_diagonal() const {
    for (int n = 0; n < order_; ++n)
        if (rows_[n][static_cast<std::size_t>(n)] != 1) return false;
    return true;
}

std::string TriMatrix::to_json() const {
    std::string out = "[";
    for (int n = 0; n < order_; ++n) {
        if (n > 0) out += ",";
        out += "[";
        for (int k = 0; k <= n; ++k) {
            if (k > 0) out += ",";
            out += "\"" + rows_[n][static_cast<std::size_t>(k)].str() + "\"";
        }
        out += "]";
    }
    return out + "]";
}

std::string TriMatrix::to_csv() const {
    std::string out;
    for (int n = 0; n < order_; ++n) {
        for (int k = 0; k < order_; ++k) {
            if (k > 0) out += ",";
            if (k <= n) out += rows_[n][static_cast<std::size_t>(k)].str();
        }
        out += "\n";
    }
    return out;
}

std::string TriMatrix::to_text() const {
    std::string out;
    for (int n = 0; n < order_; ++n) {
        for (int k = 0; k <= n; ++k) {
            if (k > 0) out += " ";
            out += rows_[n][static_cast<std::size_t>(k)].str();
        }
        out += "\n";
    }
    return out;
}

}  // namespace fnom
