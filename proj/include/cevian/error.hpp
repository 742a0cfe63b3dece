#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cevian {

enum class ErrorKind {
    DivisionByZero,
    TowerMismatch,
    TowerDepthExceeded,
    NegativeRadicand,
    ParseError,
    IdenticalArguments,
    InfiniteLineArgument,
    InfinitePointArgument,
    NotCollinear,
    CoincidentBase,
    WeightsSumNotOne,
    OnSideline,
    OnAnticomplementarySideline,
    OnMedian,
    VertexArgument,
    DegenerateTriangle,
    NotHomothetyOrTranslation,
    DegenerateAxisOrDirection,
    DegenerateConfiguration,
    DegenerateConic,
    PointNotOnConic,
    NotSharedInfinity,
    IdenticalConics,
    NotAHyperbola,
    MapUndefined,
    OffCurve,
    BadParameter,
    ExcludedParameter,
    NotTranslation,
    DegeneratePlacement,
    IOError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every precondition failure in the library is reported through this type;
/// `kind()` names the violated condition so front ends can report it.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

} // namespace cevian
