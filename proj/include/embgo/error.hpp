#pragma once

#include <stdexcept>
#include <string>

namespace embgo {

enum class ErrorKind {
    InvalidConfiguration,
    InvalidBounds,
    Dimension,
    Domain,
    EvaluationOrder,
    Registry,
    Parse,
    IncompleteTable,
    SingularPoint,
    Data,
};

const char* to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; callers branch on kind().
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace embgo
