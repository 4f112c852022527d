#include "fnom/fseq.hpp"

#include <fstream>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "multi_memo.hpp"

namespace fnom {

struct FSequence::Impl {
    std::string name;
    SequenceKind kind = SequenceKind::Explicit;
    int q = 0;                               // gaussian base
    std::optional<std::size_t> last_index;   // set for explicit sequences

    std::shared_mutex mutex;
    std::vector<BigInt> values;       // values[i] = i_F
    std::vector<BigInt> factorials;   // factorials[i] = i_F!
    detail::MultiMemo memo;

    // Both extenders require the exclusive lock.
    void extend_values(std::size_t n) {
        while (values.size() <= n) {
            const std::size_t i = values.size();
            switch (kind) {
            case SequenceKind::Natural:
                values.emplace_back(i);
                break;
            case SequenceKind::Fibonacci:
                if (i <= 2) values.emplace_back(i == 0 ? 0 : 1);
                else values.push_back(values[i - 1] + values[i - 2]);
                break;
            case SequenceKind::Gaussian:
                if (i == 0) values.emplace_back(0);
                else values.push_back(q * values[i - 1] + 1);
                break;
            case SequenceKind::Explicit:
                throw std::out_of_range("sequence '" + name + "' has no value at index " +
                                        std::to_string(i) + " (last index " +
                                        std::to_string(*last_index) + ")");
            }
        }
    }

    void extend_factorials(std::size_t n) {
        extend_values(n);
        while (factorials.size() <= n) {
            const std::size_t i = factorials.size();
            if (i == 0) factorials.emplace_back(1);
            else factorials.push_back(factorials[i - 1] * values[i]);
        }
    }
};

FSequence FSequence::natural() {
    auto impl = std::make_shared<Impl>();
    impl->name = "natural";
    impl->kind = SequenceKind::Natural;
    return FSequence(std::move(impl));
}

FSequence FSequence::fibonacci() {
    auto impl = std::make_shared<Impl>();
    impl->name = "fibonacci";
    impl->kind = SequenceKind::Fibonacci;
    return FSequence(std::move(impl));
}

FSequence FSequence::gaussian(int q) {
    if (q < 2) throw std::invalid_argument("gaussian sequences need an integer base q >= 2");
    auto impl = std::make_shared<Impl>();
    impl->name = "gaussian:" + std::to_string(q);
    impl->kind = SequenceKind::Gaussian;
    impl->q = q;
    return FSequence(std::move(impl));
}

FSequence FSequence::explicit_values(std::vector<BigInt> values, std::string name) {
    if (values.empty())
        throw std::invalid_argument("explicit sequences need at least the value at index 0");
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] < 0)
            throw std::invalid_argument("explicit sequence value at index " + std::to_string(i) +
                                        " is negative: " + values[i].str());
    auto impl = std::make_shared<Impl>();
    impl->name = std::move(name);
    impl->kind = SequenceKind::Explicit;
    impl->last_index = values.size() - 1;
    impl->values = std::move(values);
    return FSequence(std::move(impl));
}

FSequence FSequence::from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open sequence file '" + path.string() + "'");
    std::vector<BigInt> values;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;  // blank lines are ignored
        const auto last = line.find_last_not_of(" \t\r");
        const std::string token = line.substr(first, last - first + 1);
        if (token.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("sequence file '" + path.string() + "', line " +
                                        std::to_string(line_no) + ": '" + token +
                                        "' is not a non-negative integer");
        values.emplace_back(token);
    }
    if (values.empty())
        throw std::invalid_argument("sequence file '" + path.string() + "' holds no values");
    return explicit_values(std::move(values), path.filename().string());
}

const std::string& FSequence::name() const noexcept { return impl_->name; }

SequenceKind FSequence::kind() const noexcept { return impl_->kind; }

int FSequence::gaussian_base() const {
    if (impl_->kind != SequenceKind::Gaussian)
        throw std::logic_error("sequence '" + impl_->name + "' has no gaussian base");
    return impl_->q;
}

std::optional<std::size_t> FSequence::max_index() const noexcept { return impl_->last_index; }

BigInt FSequence::value(std::size_t n) const {
    {
        std::shared_lock lock(impl_->mutex);
        if (n < impl_->values.size()) return impl_->values[n];
    }
    std::unique_lock lock(impl_->mutex);
    impl_->extend_values(n);
    return impl_->values[n];
}

BigInt FSequence::factorial(std::size_t n) const {
    {
        std::shared_lock lock(impl_->mutex);
        if (n < impl_->factorials.size()) return impl_->factorials[n];
    }
    std::unique_lock lock(impl_->mutex);
    impl_->extend_factorials(n);
    return impl_->factorials[n];
}

detail::MultiMemo& FSequence::multi_memo() const noexcept { return impl_->memo; }

AdmissibilityReport check_admissible(const FSequence& F, int N) {
    if (N < 0) throw std::invalid_argument("check_admissible: N must be >= 0");
    AdmissibilityReport report;
    report.sequence = F.name();
    report.order = N;
    for (int n = 0; n <= N; ++n) {
        for (int k = 0; k <= n; ++k) {
            const BigInt num = F.factorial(static_cast<std::size_t>(n));
            const BigInt den = F.factorial(static_cast<std::size_t>(k)) *
                               F.factorial(static_cast<std::size_t>(n - k));
            std::string failure;
            if (den == 0) {
                failure = "has a zero denominator";
            } else {
                BigInt quotient, remainder;
                boost::multiprecision::divide_qr(num, den, quotient, remainder);
                if (remainder != 0)
                    failure = "= " + num.str() + "/" + den.str() + " is not an integer";
                else if (quotient < 0)
                    failure = "= " + quotient.str() + " is negative";
            }
            if (!failure.empty()) {
                report.first_failure = std::make_pair(n, k);
                report.detail =
                    "C(" + std::to_string(n) + "," + std::to_string(k) + ") " + failure;
                return report;
            }
        }
    }
    report.admissible = true;
    return report;
}

}  // namespace fnom
