#include "embgo/error.hpp"

namespace embgo {

const char* to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::InvalidConfiguration: return "invalid configuration";
    case ErrorKind::InvalidBounds: return "invalid bounds";
    case ErrorKind::Dimension: return "dimension mismatch";
    case ErrorKind::Domain: return "domain error";
    case ErrorKind::EvaluationOrder: return "evaluation order";
    case ErrorKind::Registry: return "unknown name";
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::IncompleteTable: return "incomplete table";
    case ErrorKind::SingularPoint: return "singular point";
    case ErrorKind::Data: return "data error";
    }
    return "error";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
{
}

} // namespace embgo
