#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace flowcent {

enum class ErrorKind {
    DuplicateArc,
    SelfLoop,
    UnknownVertex,
    TooFewVertices,
    DuplicateVertex,
    InvalidToken,
    NegativeCapacity,
    CapacityTooLarge,
    Parse,
    MalformedPath,
    MixedEndpoints,
    NotArcDisjoint,
    InvalidFlow,
    SameEndpoints,
    NotAugmenting,
    ShortcutInvalid,
    BudgetExceeded,
    InvalidSpec,
    InvariantViolation,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for the library; `kind` drives CLI exit codes.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Raised when an exhaustive search hits its node/assignment cap.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, std::uint64_t budget, std::uint64_t reached,
                   std::uint64_t partial = 0)
        : Error(ErrorKind::BudgetExceeded,
                what + " exceeded budget of " + std::to_string(budget) + " (reached " +
                    std::to_string(reached) + ", " + std::to_string(partial) + " results so far)"),
          budget_(budget), reached_(reached), partial_(partial) {}

    std::uint64_t budget() const noexcept { return budget_; }
    std::uint64_t reached() const noexcept { return reached_; }
    // Results produced before the budget ran out.
    std::uint64_t partial() const noexcept { return partial_; }

private:
    std::uint64_t budget_;
    std::uint64_t reached_;
    std::uint64_t partial_;
};

}  // namespace flowcent
