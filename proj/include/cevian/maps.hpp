#pragma once

// Affine maps of the plane and the point maps of cevian geometry: the
// complement K, the isotomic map, cevian traces and the cevian maps T_P.

#include "cevian/plane.hpp"

namespace cevian {

/// Affine map acting on homogeneous barycentrics by a 3x3 matrix whose
/// columns each sum to 1, so x+y+z is preserved and l_inf is fixed.
/// For an ordinary source triangle ABC the columns are the images of A, B, C.
class AffineMap {
  public:
    explicit AffineMap(Mat3 matrix);

    static AffineMap identity() { return AffineMap(Mat3::identity()); }
    /// K: homothety about G with ratio -1/2.
    static AffineMap complement();
    /// K^{-1}: homothety about G with ratio -2.
    static AffineMap anticomplement();
    /// x -> 2M - x for an ordinary center M.
    static AffineMap point_reflection(const BaryPoint &center);
    /// x -> C + k (x - C).
    static AffineMap homothety(const BaryPoint &center, const FieldElement &ratio);

    const Mat3 &matrix() const noexcept { return matrix_; }
    bool is_invertible() const { return !matrix_.determinant().is_zero(); }

    BaryPoint operator()(const BaryPoint &p) const { return BaryPoint(matrix_ * p.coords()); }
    /// Image of a line: coefficients transform by the inverse transpose.
    BaryLine operator()(const BaryLine &l) const;

    AffineMap inverse() const;
    /// Composition: (f * g)(x) = f(g(x)).
    friend AffineMap operator*(const AffineMap &f, const AffineMap &g) { return AffineMap(f.matrix_ * g.matrix_); }
    friend bool operator==(const AffineMap &, const AffineMap &) = default;

  private:
    Mat3 matrix_;
};

BaryPoint complement(const BaryPoint &p);
BaryPoint anticomplement(const BaryPoint &p);

/// iota(x:y:z) = (yz : xz : xy); throws OnSideline.
BaryPoint isotomic(const BaryPoint &p);

/// Q = K(iota(P)) = (x(y+z) : y(x+z) : z(x+y)); throws OnSideline.
BaryPoint isotom_complement(const BaryPoint &p);

struct Traces {
    BaryPoint D; ///< on BC
    BaryPoint E; ///< on CA
    BaryPoint F; ///< on AB
};

/// Traces of the cevians AP, BP, CP; throws VertexArgument.
Traces cevian_traces(const BaryPoint &p);

/// The unique affine map with src[i] -> dst[i]; throws DegenerateTriangle.
AffineMap map_from_triangles(const std::array<BaryPoint, 3> &src, const std::array<BaryPoint, 3> &dst);

/// T_P: the affine map taking ABC to the cevian triangle DEF of P.
AffineMap cevian_map(const BaryPoint &p);

/// Algebraic validity of P: ordinary, off the sidelines of ABC (x, y, z != 0)
/// and of the anticomplementary triangle (y+z, x+z, x+y != 0); with
/// `off_medians` also x, y, z pairwise distinct.
void require_valid(const BaryPoint &p, bool off_medians = false);
bool is_valid(const BaryPoint &p, bool off_medians = false);
bool on_median(const BaryPoint &p);

} // namespace cevian
