#ifndef SMC_DIAGNOSTICS_HPP
#define SMC_DIAGNOSTICS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace smc {

/// Accumulates axiom violations found by a validator. An empty report means
/// the input is valid; every entry names one violated axiom instance.
struct ValidationReport {
    std::vector<std::string> issues;

    bool ok() const { return issues.empty(); }
    void add(std::string issue) { issues.push_back(std::move(issue)); }
    void merge(const ValidationReport& other) {
        issues.insert(issues.end(), other.issues.begin(), other.issues.end());
    }
    std::string to_string() const;
};

/// Misuse of an operation's contract (non-parallel functors, endpoint
/// mismatches, non-composable chains).
struct ContractError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An exhaustive search exceeded its node budget. Never a truncated answer.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A cross-check the theory guarantees can not fail did fail; indicates a
/// bug in this library, never a property of the input.
struct InternalCheckError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Node budget shared across an enumeration. charge() throws BudgetError
/// once the limit is crossed.
class SearchBudget {
public:
    explicit SearchBudget(std::uint64_t limit = kDefaultLimit) : limit_(limit) {}

    static constexpr std::uint64_t kDefaultLimit = 10'000'000;

    void charge(std::uint64_t n = 1) {
        used_ += n;
        if (used_ > limit_)
            throw BudgetError("search budget exceeded (" + std::to_string(limit_) +
                              " candidate extensions)");
    }
    std::uint64_t used() const { return used_; }
    std::uint64_t limit() const { return limit_; }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

}  // namespace smc

#endif
