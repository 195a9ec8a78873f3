#include "effortdist/errors.hpp"

namespace effortdist {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NonZeroBase: return "NonZeroBase";
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::EmptyInstance: return "EmptyInstance";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::KOutOfRange: return "KOutOfRange";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::MTooLarge: return "MTooLarge";
        case ErrorKind::NotConvex: return "NotConvex";
        case ErrorKind::WrongM: return "WrongM";
        case ErrorKind::ExhaustedEfforts: return "ExhaustedEfforts";
        case ErrorKind::PreconditionViolated: return "PreconditionViolated";
        case ErrorKind::BadParams: return "BadParams";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::IoError: return "IoError";
    }
    return "UnknownError";
}

std::string ValidationError::render(const std::vector<Violation>& violations) {
    if (violations.empty()) return "no violations listed";
    std::string out;
    for (std::size_t i = 0; i < violations.size(); ++i) {
        if (i > 0) out += "; ";
        out += violations[i].second;
    }
    return out;
}

}  // namespace effortdist
