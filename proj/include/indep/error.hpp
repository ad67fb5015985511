#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace indep {

enum class ErrorKind {
    MalformedTable,
    NoIdentity,
    NoInverse,
    NotAssociative,
    UnknownRecipe,
    OrderTooLarge,
    NotNormal,
    BudgetExceeded,
    PreconditionViolated,
    ClassDegreeMismatch,
    Io,
};

const char* to_string(ErrorKind kind);

/// Single exception type for the library. `witness()` carries the element
/// indices (or line numbers, for parse errors) that demonstrate the failure.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::vector<std::int64_t> witness = {});

    ErrorKind kind() const noexcept { return kind_; }
    const std::vector<std::int64_t>& witness() const noexcept { return witness_; }

private:
    ErrorKind kind_;
    std::vector<std::int64_t> witness_;
};

}  // namespace indep
