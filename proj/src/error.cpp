#include "cevian/error.hpp"

namespace cevian {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::TowerMismatch: return "TowerMismatch";
    case ErrorKind::TowerDepthExceeded: return "TowerDepthExceeded";
    case ErrorKind::NegativeRadicand: return "NegativeRadicand";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IdenticalArguments: return "IdenticalArguments";
    case ErrorKind::InfiniteLineArgument: return "InfiniteLineArgument";
    case ErrorKind::InfinitePointArgument: return "InfinitePointArgument";
    case ErrorKind::NotCollinear: return "NotCollinear";
    case ErrorKind::CoincidentBase: return "CoincidentBase";
    case ErrorKind::WeightsSumNotOne: return "WeightsSumNotOne";
    case ErrorKind::OnSideline: return "OnSideline";
    case ErrorKind::OnAnticomplementarySideline: return "OnAnticomplementarySideline";
    case ErrorKind::OnMedian: return "OnMedian";
    case ErrorKind::VertexArgument: return "VertexArgument";
    case ErrorKind::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorKind::NotHomothetyOrTranslation: return "NotHomothetyOrTranslation";
    case ErrorKind::DegenerateAxisOrDirection: return "DegenerateAxisOrDirection";
    case ErrorKind::DegenerateConfiguration: return "DegenerateConfiguration";
    case ErrorKind::DegenerateConic: return "DegenerateConic";
    case ErrorKind::PointNotOnConic: return "PointNotOnConic";
    case ErrorKind::NotSharedInfinity: return "NotSharedInfinity";
    case ErrorKind::IdenticalConics: return "IdenticalConics";
    case ErrorKind::NotAHyperbola: return "NotAHyperbola";
    case ErrorKind::MapUndefined: return "MapUndefined";
    case ErrorKind::OffCurve: return "OffCurve";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::ExcludedParameter: return "ExcludedParameter";
    case ErrorKind::NotTranslation: return "NotTranslation";
    case ErrorKind::DegeneratePlacement: return "DegeneratePlacement";
    case ErrorKind::IOError: return "IOError";
    }
    return "Unknown";
}

} // namespace cevian
