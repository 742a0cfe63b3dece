#pragma once

// Homogeneous barycentric points and lines relative to the fixed reference
// triangle A=(1:0:0), B=(0:1:0), C=(0:0:1). The line at infinity is x+y+z=0.

#include "cevian/linalg.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cevian {

/// Projective point (x:y:z), stored scaled so the first nonzero coordinate is 1.
class BaryPoint {
  public:
    BaryPoint(FieldElement x, FieldElement y, FieldElement z);
    explicit BaryPoint(const Triple &coords);

    const Triple &coords() const noexcept { return coords_; }
    const FieldElement &operator[](std::size_t i) const { return coords_[i]; }

    FieldElement coordinate_sum() const { return coords_[0] + coords_[1] + coords_[2]; }
    bool is_ordinary() const { return !coordinate_sum().is_zero(); }
    bool is_infinite() const { return !is_ordinary(); }
    /// Absolute barycentrics (summing to 1); throws InfinitePointArgument.
    Triple normalized() const;

    std::string to_string() const;

    friend bool operator==(const BaryPoint &, const BaryPoint &) = default;

  private:
    Triple coords_;
};

/// Projective line p x + q y + r z = 0, canonicalized like BaryPoint.
class BaryLine {
  public:
    BaryLine(FieldElement p, FieldElement q, FieldElement r);
    explicit BaryLine(const Triple &coeffs);

    static BaryLine infinity() { return BaryLine(1, 1, 1); }

    const Triple &coeffs() const noexcept { return coeffs_; }
    const FieldElement &operator[](std::size_t i) const { return coeffs_[i]; }

    bool contains(const BaryPoint &p) const { return dot(coeffs_, p.coords()).is_zero(); }
    bool is_infinity() const { return *this == infinity(); }
    /// Value of the line form at the normalized point; its sign tells sides apart.
    FieldElement evaluate(const BaryPoint &p) const { return dot(coeffs_, p.normalized()); }

    std::string to_string() const;

    friend bool operator==(const BaryLine &, const BaryLine &) = default;

  private:
    Triple coeffs_;
};

namespace ref {
inline BaryPoint A() { return {1, 0, 0}; }
inline BaryPoint B() { return {0, 1, 0}; }
inline BaryPoint C() { return {0, 0, 1}; }
inline BaryPoint G() { return {1, 1, 1}; }
} // namespace ref

BaryLine join(const BaryPoint &p1, const BaryPoint &p2);
BaryPoint meet(const BaryLine &l1, const BaryLine &l2);

/// Infinite point of an ordinary line.
BaryPoint infinite_point(const BaryLine &l);

bool is_parallel(const BaryLine &l1, const BaryLine &l2);

/// True when all points lie on one line (vacuous for fewer than 3 distinct points).
bool collinear(std::span<const BaryPoint> points);
bool collinear(const BaryPoint &a, const BaryPoint &b, const BaryPoint &c);

/// Direction vector Y - X of normalized coordinates; both points ordinary.
Triple displacement(const BaryPoint &from, const BaryPoint &to);

/// The scalar t with (Y - X) = t (Z - X), in normalized coordinates. So
/// signed_ratio(A, G, D0) = 2/3 and signed_ratio(Y, midpoint(Y, Z), Z) = 1/2.
/// Throws NotCollinear or CoincidentBase (Z == X).
FieldElement signed_ratio(const BaryPoint &x, const BaryPoint &y, const BaryPoint &z);

/// The scalar t with u = t v for parallel vectors; throws NotCollinear.
FieldElement vector_ratio(const Triple &u, const Triple &v);

/// Y strictly between X and Z on their common line.
bool between(const BaryPoint &x, const BaryPoint &y, const BaryPoint &z);

/// Weighted sum of normalized points; weights must sum to 1.
BaryPoint affine_combination(std::span<const std::pair<BaryPoint, FieldElement>> terms);

BaryPoint midpoint(const BaryPoint &a, const BaryPoint &b);
/// Point reflection of X in M: 2M - X.
BaryPoint reflect_in_point(const BaryPoint &x, const BaryPoint &m);
BaryPoint centroid(const BaryPoint &a, const BaryPoint &b, const BaryPoint &c);
/// X + v for an ordinary X and a direction vector v (coordinates summing to 0).
BaryPoint translate(const BaryPoint &x, const Triple &v);

} // namespace cevian
