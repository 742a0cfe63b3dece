#pragma once

// The derived-point dictionary of a point P and the map M = T_P K^-1 T_P'.

#include "cevian/conic.hpp"

#include <optional>

namespace cevian {

struct Configuration {
    BaryPoint P, P_prime, Q, Q_prime;
    BaryPoint H, O, O_prime;
    Traces traces;       ///< D, E, F of P
    Traces traces_prime; ///< D3, E3, F3 of P'
    AffineMap T_P, T_P_prime, M;
    Conic circumconic_O, inconic;

    // Defined only off the medians.
    std::optional<BaryPoint> V, Z, U;
    std::optional<Conic> cevian_conic;

    /// Center of M; finite for a homothety, on l_inf for a translation.
    BaryPoint S;
};

/// Throws the validity errors of require_valid. Members depending on the
/// medians are left empty when P lies on one.
Configuration derive_configuration(const BaryPoint &p);

/// Like derive_configuration but throws OnMedian instead of leaving V, Z, U empty.
Configuration derive_configuration_off_medians(const BaryPoint &p);

AffineMap map_M(const BaryPoint &p);

struct MClassification {
    enum class Kind { translation, homothety };
    Kind kind;
    std::optional<FieldElement> k; ///< homothety ratio
    BaryPoint S;                   ///< fixed point, or the translation direction on l_inf
};

std::string_view to_string(MClassification::Kind kind) noexcept;

/// Reads M = k I + v 1^T; throws NotHomothetyOrTranslation otherwise.
MClassification classify_matrix(const AffineMap &m);
MClassification classify_M(const BaryPoint &p);

/// (x(y+z)^2 : y(x+z)^2 : z(x+y)^2).
BaryPoint s_formula(const BaryPoint &p);

/// The affine reflection fixing GV pointwise and reversing the direction PP'.
/// Throws OnMedian or DegenerateAxisOrDirection.
AffineMap eta_reflection(const BaryPoint &p);

} // namespace cevian
