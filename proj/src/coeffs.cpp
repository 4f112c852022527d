#include "fnom/coeffs.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "multi_memo.hpp"

namespace fnom {

namespace {

// A symbol with a negative part or parts not summing to n is 0 by convention.
bool is_zero_symbol(int n, std::span<const int> parts) {
    long long sum = 0;
    for (int p : parts) {
        if (p < 0) return true;
        sum += p;
    }
    return sum != n;
}

std::string multi_context(int n, std::span<const int> parts) {
    std::string context = "C(" + std::to_string(n) + ";";
    for (std::size_t i = 0; i < parts.size(); ++i)
        context += (i == 0 ? " " : ",") + std::to_string(parts[i]);
    return context + ")";
}

BigInt compute_multi(const FSequence& F, int n, std::span<const int> parts) {
    BigInt den = 1;
    for (int p : parts) den *= F.factorial(static_cast<std::size_t>(p));
    return checked_div(F.factorial(static_cast<std::size_t>(n)), den, multi_context(n, parts));
}

}  // namespace

bool MultiIndex::sums_to_total() const noexcept {
    long long sum = 0;
    for (int p : parts) sum += p;
    return sum == total;
}

BigInt f_factorial(const FSequence& F, int n) {
    if (n < 0) throw std::invalid_argument("f_factorial: n must be >= 0");
    return F.factorial(static_cast<std::size_t>(n));
}

BigInt falling_factorial(const FSequence& F, int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("falling_factorial: need 0 <= k <= n");
    BigInt product = 1;
    for (int i = 0; i < k; ++i) product *= F.value(static_cast<std::size_t>(n - i));
    return product;
}

BigInt fnomial(const FSequence& F, int n, int k) {
    if (n < 0) throw std::invalid_argument("fnomial: n must be >= 0");
    if (k < 0 || k > n) return 0;
    if (k == 0 || k == n) return 1;
    const BigInt num = F.factorial(static_cast<std::size_t>(n));
    const BigInt den = F.factorial(static_cast<std::size_t>(k)) *
                       F.factorial(static_cast<std::size_t>(n - k));
    return checked_div(num, den, "C(" + std::to_string(n) + "," + std::to_string(k) + ")");
}

BigInt multi_fnomial(const FSequence& F, int n, std::span<const int> parts) {
    if (n < 0) throw std::invalid_argument("multi_fnomial: n must be >= 0");
    if (is_zero_symbol(n, parts)) return 0;
    std::vector<int> key;
    key.reserve(parts.size() + 1);
    key.push_back(n);
    for (int p : parts)
        if (p != 0) key.push_back(p);
    std::sort(key.begin() + 1, key.end());
    return F.multi_memo().get_or_compute(key, [&] { return compute_multi(F, n, parts); });
}

BigInt multi_fnomial(const FSequence& F, const MultiIndex& index) {
    return multi_fnomial(F, index.total, index.parts);
}

BigInt multi_fnomial_uncached(const FSequence& F, int n, std::span<const int> parts) {
    if (n < 0) throw std::invalid_argument("multi_fnomial: n must be >= 0");
    if (is_zero_symbol(n, parts)) return 0;
    return compute_multi(F, n, parts);
}

}  // namespace fnom
