#include "nesthilb/error.hpp"

namespace nesthilb {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::DependentChartWeights: return "DependentChartWeights";
    case ErrorKind::ZeroWeightInTangent: return "ZeroWeightInTangent";
    case ErrorKind::SpecializationPole: return "SpecializationPole";
    case ErrorKind::SpecializationExhausted: return "SpecializationExhausted";
    case ErrorKind::NonConstantSum: return "NonConstantSum";
    case ErrorKind::InvalidNesting: return "InvalidNesting";
    case ErrorKind::WrongCoefficientCount: return "WrongCoefficientCount";
    case ErrorKind::InvalidSurface: return "InvalidSurface";
    case ErrorKind::InvalidIntegrand: return "InvalidIntegrand";
    }
    return "Unknown";
}

bool is_structural(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::DependentChartWeights:
    case ErrorKind::ZeroWeightInTangent:
    case ErrorKind::SpecializationExhausted:
    case ErrorKind::NonConstantSum:
        return true;
    default:
        return false;
    }
}

Error::Error(ErrorKind kind, const std::string &what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

} // namespace nesthilb
