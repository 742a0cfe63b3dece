#pragma once

// The cubic E_S : x(y+z)^2 + y(x+z)^2 + z(x+y)^2 = 0 in its four models.
//
//   barycentric cubic  (x:y:z)
//   normal form        (3x+1)y^2 + (3x+1)(x-1)y + x^2 - x = 0, z = 1-x-y
//   quartic            Y^2 = (X-1)(3X+1)(3X^2-6X-1), X = x, Y = (3x+1)(2y+x-1)
//   Weierstrass        v^2 = u^3 + 6u^2 - 3u, u = (3X+1)/(1-X), v = Y(u+3)^2/8
//
// The composite barycentric <-> Weierstrass map is also kept in homogeneous
// form, which is defined everywhere except at A and (0:1:-1):
//   u = (4x+y+z)/(y+z),  v = 2(4x+y+z)(y-z)/(y+z)^2,
//   (u, v) -> (u(u-1) : 2u+v : 2u-v).

#include "cevian/plane.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cevian {

FieldElement es_cubic(const Triple &p);
bool es_contains(const BaryPoint &p);
/// Tangent line of the cubic at a smooth point; throws OffCurve.
BaryLine es_tangent_at(const BaryPoint &p);

struct NFPoint {
    FieldElement x, y;
    friend bool operator==(const NFPoint &, const NFPoint &) = default;
};

struct QuarticPoint {
    FieldElement X, Y;
    friend bool operator==(const QuarticPoint &, const QuarticPoint &) = default;
};

class WPoint {
  public:
    static WPoint infinity() { return WPoint(); }
    WPoint(FieldElement u, FieldElement v) : finite_(true), u_(std::move(u)), v_(std::move(v)) {}

    bool is_infinity() const noexcept { return !finite_; }
    /// Throws MapUndefined at infinity.
    const FieldElement &u() const;
    const FieldElement &v() const;

    std::string to_string() const;
    friend bool operator==(const WPoint &, const WPoint &) = default;

  private:
    WPoint() = default;
    bool finite_ = false;
    FieldElement u_, v_;
};

bool nf_contains(const NFPoint &p);
bool quartic_contains(const QuarticPoint &p);
bool w_contains(const WPoint &p);

/// Normal form of an ordinary point of E_S; throws OffCurve or InfinitePointArgument.
NFPoint bary_to_nf(const BaryPoint &p);
BaryPoint nf_to_bary(const NFPoint &p);

QuarticPoint nf_to_quartic(const NFPoint &p);
/// Throws MapUndefined when 3X+1 = 0.
NFPoint quartic_to_nf(const QuarticPoint &p);
/// Throws MapUndefined when X = 1.
WPoint quartic_to_w(const QuarticPoint &p);
/// Throws MapUndefined at infinity and when u = -3.
QuarticPoint w_to_quartic(const WPoint &p);

/// Chain compositions; throw MapUndefined at the exceptional loci.
WPoint nf_to_w(const NFPoint &p);
NFPoint w_to_nf(const WPoint &p);

/// Homogeneous maps, with A <-> infinity and (0:1:-1) <-> (0,0) tabulated.
WPoint bary_to_w(const BaryPoint &p);
BaryPoint w_to_bary(const WPoint &p);

/// Throw OffCurve for arguments off v^2 = u^3 + 6u^2 - 3u.
WPoint w_neg(const WPoint &p);
WPoint w_add(const WPoint &p, const WPoint &q);
WPoint w_double(const WPoint &p);
WPoint w_multiple(std::int64_t n, const WPoint &p);

/// Least n in 1..max_order with [n]p = infinity.
std::optional<int> w_order(const WPoint &p, int max_order = 12);

struct CurveInvariants {
    Rational b2, b4, b6, b8, c4, c6, discriminant, j;
};
CurveInvariants es_invariants();
Rational j_invariant();

/// P~ = (3, 6 sqrt 2), the point of infinite order over Q(sqrt 2).
WPoint p_tilde();
/// T: infinity, (0,0), (1,+-2), (-3,+-6).
std::vector<WPoint> rational_torsion();
/// T12 = T together with the six points over Q(sqrt 3).
std::vector<WPoint> torsion12();

/// Points of E_S over Q(sqrt 2) of the form [k]P~ + t, valid off the medians.
std::vector<BaryPoint> es_sample(std::size_t n, std::uint32_t seed);

/// Discriminant in y of the normal form, computed from its coefficients.
FieldElement nf_y_discriminant(const FieldElement &x);
/// The closed form (x-1)(3x+1)(3x^2-6x-1).
FieldElement nf_discriminant_closed(const FieldElement &x);

/// Geometric normal form (ax+1)y^2 + (ax+1)(x-1)y + x^2 - x = 0.
class CurveEa {
  public:
    /// Throws BadParameter for a in {3, 0, -1, 9}.
    explicit CurveEa(FieldElement a);
    const FieldElement &a() const noexcept { return a_; }
    /// 4/(a+1).
    FieldElement homothety_ratio() const;

  private:
    FieldElement a_;
};

bool ea_contains(const CurveEa &c, const FieldElement &x, const FieldElement &y);
/// Points with rational x whose barycentric images (x, y, 1-x-y) are valid off
/// the medians; each adjoins at most one square root.
std::vector<NFPoint> ea_sample(const CurveEa &c, std::size_t n, std::uint32_t seed);

} // namespace cevian
