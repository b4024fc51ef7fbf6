#pragma once

#include <cstdint>
#include <stdexcept>

namespace minorpack {

// Thrown when an exhaustive search runs out of its node allowance.
// Callers must never confuse this with a mathematical "no": the two are
// different results everywhere in the oracle layer.
struct BudgetExceeded : std::runtime_error {
    BudgetExceeded() : std::runtime_error("search budget exceeded") {}
};

class Budget {
public:
    explicit Budget(std::uint64_t nodes = kDefaultNodes) : remaining_(nodes) {}

    void tick(std::uint64_t cost = 1) {
        if (remaining_ < cost) throw BudgetExceeded();
        remaining_ -= cost;
    }

    std::uint64_t remaining() const { return remaining_; }

    static constexpr std::uint64_t kDefaultNodes = 200'000'000ULL;

private:
    std::uint64_t remaining_;
};

}  // namespace minorpack
