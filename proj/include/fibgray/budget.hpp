#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fibgray {

// Cap on the number of strings an eager constructor will materialize (or a
// generate command will emit). Exceeding it raises BudgetError instead of
// silently truncating.
inline constexpr std::uint64_t default_generation_budget = 10'000'000;

class BudgetError : public std::runtime_error {
public:
    BudgetError(std::string what, std::uint64_t budget)
        : std::runtime_error(std::move(what)), budget_(budget) {}

    std::uint64_t budget() const { return budget_; }

private:
    std::uint64_t budget_;
};

namespace detail {

// base^exp clamped to UINT64_MAX.
inline std::uint64_t saturating_pow_u64(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t result = 1;
    if (base == 0) return exp == 0 ? 1 : 0;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (result > UINT64_MAX / base) return UINT64_MAX;
        result *= base;
    }
    return result;
}

inline bool pow_exceeds(std::uint64_t base, std::uint64_t exp, std::uint64_t limit) {
    return saturating_pow_u64(base, exp) > limit;
}

} // namespace detail
} // namespace fibgray
