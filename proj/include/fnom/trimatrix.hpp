#pragma once

#include <string>
#include <vector>

#include "fnom/bigint.hpp"

namespace fnom {

/// Square lower-triangular big-integer matrix. Entries are indexed (n, k)
/// with 0 <= k <= n < order; everything above the diagonal is implicitly 0.
class TriMatrix {
public:
    explicit TriMatrix(int order);
    static TriMatrix identity(int order);

    int order() const noexcept { return order_; }

    BigInt& at(int n, int k);
    const BigInt& at(int n, int k) const;

    bool has_unit_diagonal() const;

    friend bool operator==(const TriMatrix& a, const TriMatrix& b) = default;

    /// Compact JSON array of rows; entries are decimal strings so that values
    /// of any size survive any JSON parser. Byte-deterministic.
    std::string to_json() const;
    /// One row per line, `order` comma-separated cells, cells above the
    /// diagonal empty. Byte-deterministic.
    std::string to_csv() const;
    /// One row per line, entries separated by single spaces.
    std::string to_text() const;

private:
    int order_;
    std::vector<std::vector<BigInt>> rows_;
};

}  // namespace fnom
