#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace fnom {

/// Arbitrary-precision signed integer. All coefficient values live here;
/// arithmetic is exact, there is no overflow and no rounding.
using BigInt = boost::multiprecision::cpp_int;

/// Division left a remainder (or hit a zero denominator) where the algebra
/// promises an integer. For F-nomial coefficients this is the admissibility
/// tripwire: a cobweb-admissible sequence can never trigger it.
class InexactDivisionError : public std::runtime_error {
public:
    InexactDivisionError(const std::string& context, BigInt numerator, BigInt denominator)
        : std::runtime_error(context + ": " + numerator.str() + " / " + denominator.str() +
                             (denominator == 0 ? " has a zero denominator"
                                               : " is not an integer")),
          numerator_(std::move(numerator)),
          denominator_(std::move(denominator)) {}

    const BigInt& numerator() const noexcept { return numerator_; }
    const BigInt& denominator() const noexcept { return denominator_; }

private:
    BigInt numerator_;
    BigInt denominator_;
};

/// Requested a lambda decomposition for a sequence without a registered rule.
class UnsupportedSequenceError : public std::runtime_error {
public:
    explicit UnsupportedSequenceError(const std::string& sequence_name)
        : std::runtime_error("sequence '" + sequence_name +
                             "' has no registered lambda decomposition rule") {}
};

/// num / den, throwing InexactDivisionError unless the division is exact.
inline BigInt checked_div(const BigInt& num, const BigInt& den, const std::string& context) {
    if (den == 0) throw InexactDivisionError(context, num, den);
    BigInt quotient, remainder;
    boost::multiprecision::divide_qr(num, den, quotient, remainder);
    if (remainder != 0) throw InexactDivisionError(context, num, den);
    return quotient;
}

}  // namespace fnom
