#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nesthilb {

enum class ErrorKind {
    DependentChartWeights,
    ZeroWeightInTangent,
    SpecializationPole,
    SpecializationExhausted,
    NonConstantSum,
    InvalidNesting,
    WrongCoefficientCount,
    InvalidSurface,
    InvalidIntegrand,
};

std::string_view to_string(ErrorKind kind);

/// Structural errors signal a bug or inconsistent equivariant data rather
/// than bad user input.
bool is_structural(ErrorKind kind);

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &what);

    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

} // namespace nesthilb
