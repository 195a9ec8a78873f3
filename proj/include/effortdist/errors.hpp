#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace effortdist {

enum class ErrorKind {
    NonZeroBase,
    ShapeMismatch,
    EmptyInstance,
    OutOfRange,
    KOutOfRange,
    BudgetExceeded,
    MTooLarge,
    NotConvex,
    WrongM,
    ExhaustedEfforts,
    PreconditionViolated,
    BadParams,
    ParseError,
    IoError,
};

const char* error_kind_name(ErrorKind kind);

class SolverError : public std::runtime_error {
public:
    SolverError(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Carries every violated invariant, not just the first one found.
class ValidationError : public SolverError {
public:
    using Violation = std::pair<ErrorKind, std::string>;

    explicit ValidationError(std::vector<Violation> violations)
        : SolverError(violations.empty() ? ErrorKind::EmptyInstance : violations.front().first,
                      render(violations)),
          violations_(std::move(violations)) {}

    const std::vector<Violation>& violations() const noexcept { return violations_; }

    bool has(ErrorKind kind) const noexcept {
        for (const auto& v : violations_)
            if (v.first == kind) return true;
        return false;
    }

private:
    static std::string render(const std::vector<Violation>& violations);
    std::vector<Violation> violations_;
};

}  // namespace effortdist
