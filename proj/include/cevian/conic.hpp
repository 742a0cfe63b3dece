#pragma once

// Projective conics x^T m x = 0 over the field, with the constructions the
// generalized-orthocenter geometry needs.

#include "cevian/maps.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace cevian {

/// Symmetric coefficient matrix up to scale, stored scaled so the first
/// nonzero entry of (m00, m01, m02, m11, m12, m22) is 1. Equality of conics
/// is therefore equality of stored matrices.
class Conic {
  public:
    explicit Conic(const Mat3 &m);
    /// From the upper triangle (m00, m01, m02, m11, m12, m22).
    static Conic from_upper(const std::array<FieldElement, 6> &upper);

    const Mat3 &matrix() const noexcept { return m_; }
    std::array<FieldElement, 6> upper() const;

    FieldElement form(const Triple &x) const { return dot(x, m_ * x); }
    bool contains(const BaryPoint &p) const { return form(p.coords()).is_zero(); }
    bool is_degenerate() const { return m_.determinant().is_zero(); }

    /// The conic { f(x) : x on this conic }.
    Conic image(const AffineMap &f) const;

    friend bool operator==(const Conic &, const Conic &) = default;

  private:
    Mat3 m_;
};

/// Unique conic through five points; throws DegenerateConfiguration when the
/// incidence system does not have rank 5.
Conic conic_through_5(std::span<const BaryPoint, 5> points);
Conic conic_through_5(const BaryPoint &p1, const BaryPoint &p2, const BaryPoint &p3, const BaryPoint &p4,
                      const BaryPoint &p5);

BaryLine polar(const Conic &c, const BaryPoint &p);
BaryPoint pole(const Conic &c, const BaryLine &l);
/// Pole of the line at infinity.
BaryPoint conic_center(const Conic &c);
/// Throws PointNotOnConic.
BaryLine tangent_at(const Conic &c, const BaryPoint &p);

enum class Adjoin { automatic, never };

struct LineConicIntersection {
    std::vector<BaryPoint> points; ///< 0, 1 (tangency) or 2 distinct points
    int discriminant_sign = 0;
    /// Radicand that must be adjoined before the points exist; set only with
    /// Adjoin::never when the root is missing (points is then empty).
    std::optional<std::int64_t> extension;
};

/// Throws TowerDepthExceeded when Adjoin::automatic cannot stay within depth 2,
/// and DegenerateConic when the line lies on the conic.
LineConicIntersection line_conic_intersect(const Conic &c, const BaryLine &l, Adjoin adjoin = Adjoin::automatic);

/// For two conics through the same two points at infinity, the line carrying
/// their remaining common points (c1 - s c2 = l_inf * line). Empty when that
/// residual is l_inf itself. Throws NotSharedInfinity or IdenticalConics.
std::optional<BaryLine> radical_line(const Conic &c1, const Conic &c2);

/// Ordinary common points of two conics sharing their points at infinity.
std::vector<BaryPoint> conic_conic_intersect_shared_infinity(const Conic &c1, const Conic &c2,
                                                             Adjoin adjoin = Adjoin::automatic);

enum class AffineType { ellipse, parabola, hyperbola };
std::string_view to_string(AffineType t) noexcept;

AffineType classify_affine_type(const Conic &c);
/// Real points of the conic on l_inf (adjoining a root when needed).
std::vector<BaryPoint> infinite_points(const Conic &c);
/// Tangents at the two infinite points; throws NotAHyperbola.
std::array<BaryLine, 2> asymptotes(const Conic &c);

/// Sign of the form at the normalized point, scaled to be negative at the center.
int side(const Conic &c, const BaryPoint &p);
/// Strict interior of a nondegenerate central conic (the convex side).
bool is_interior(const Conic &c, const BaryPoint &p);

/// iota(l) for l = (p:q:r): p yz + q xz + r xy = 0.
Conic circumconic_of_line(const BaryLine &l);
/// xy + yz + zx = 0, the Steiner circumellipse iota(l_inf).
Conic steiner_circumellipse();

/// C_P = ABCPQ.
Conic cevian_conic(const BaryPoint &p);
/// Conic with center Q tangent to the sides at the traces D, E, F of P.
Conic inconic(const BaryPoint &p);
/// Conic through the midpoints of the six segments joining A, B, C, P'.
Conic nine_point_conic(const BaryPoint &p_prime);
/// Generalized circumconic T_{P'}^{-1}(N_{P'}).
Conic circumconic_O(const BaryPoint &p);

} // namespace cevian
