#include "cevian/maps.hpp"

#include "cevian/error.hpp"

namespace cevian {

AffineMap::AffineMap(Mat3 matrix) : matrix_(std::move(matrix)) {
    for (std::size_t c = 0; c < 3; ++c) {
        const FieldElement sum = matrix_(0, c) + matrix_(1, c) + matrix_(2, c);
        if (!sum.is_one()) {
            throw Error(ErrorKind::DegenerateConfiguration,
                        "affine map column " + std::to_string(c) + " sums to " + sum.to_string());
        }
    }
}

AffineMap AffineMap::complement() {
    const FieldElement h = FieldElement::fraction(1, 2);
    return AffineMap(Mat3({Triple{0, h, h}, Triple{h, 0, h}, Triple{h, h, 0}}));
}

AffineMap AffineMap::anticomplement() {
    return AffineMap(Mat3({Triple{-1, 1, 1}, Triple{1, -1, 1}, Triple{1, 1, -1}}));
}

AffineMap AffineMap::point_reflection(const BaryPoint &center) { return homothety(center, FieldElement(-1)); }

AffineMap AffineMap::homothety(const BaryPoint &center, const FieldElement &ratio) {
    // k I + (1 - k) c 1^T
    const Triple c = center.normalized();
    const FieldElement rest = FieldElement(1) - ratio;
    Mat3 m;
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t col = 0; col < 3; ++col) {
            m(r, col) = rest * c[r];
            if (r == col) m(r, col) += ratio;
        }
    }
    return AffineMap(std::move(m));
}

BaryLine AffineMap::operator()(const BaryLine &l) const { return BaryLine(matrix_.inverse().transpose() * l.coeffs()); }

AffineMap AffineMap::inverse() const {
    if (!is_invertible()) throw Error(ErrorKind::DegenerateTriangle, "affine map is not invertible");
    return AffineMap(matrix_.inverse());
}

BaryPoint complement(const BaryPoint &p) {
    const auto &[x, y, z] = p.coords();
    return {y + z, x + z, x + y};
}

BaryPoint anticomplement(const BaryPoint &p) {
    const auto &[x, y, z] = p.coords();
    return {y + z - x, x + z - y, x + y - z};
}

BaryPoint isotomic(const BaryPoint &p) {
    const auto &[x, y, z] = p.coords();
    if (x.is_zero() || y.is_zero() || z.is_zero()) {
        throw Error(ErrorKind::OnSideline, "isotomic conjugate of " + p.to_string());
    }
    return {y * z, x * z, x * y};
}

BaryPoint isotom_complement(const BaryPoint &p) {
    const auto &[x, y, z] = p.coords();
    if (x.is_zero() || y.is_zero() || z.is_zero()) {
        throw Error(ErrorKind::OnSideline, "isotomcomplement of " + p.to_string());
    }
    return {x * (y + z), y * (x + z), z * (x + y)};
}

Traces cevian_traces(const BaryPoint &p) {
    const auto &[x, y, z] = p.coords();
    const int zeros = int(x.is_zero()) + int(y.is_zero()) + int(z.is_zero());
    if (zeros >= 2) throw Error(ErrorKind::VertexArgument, "traces of vertex " + p.to_string());
    return {BaryPoint(0, y, z), BaryPoint(x, 0, z), BaryPoint(x, y, 0)};
}

AffineMap map_from_triangles(const std::array<BaryPoint, 3> &src, const std::array<BaryPoint, 3> &dst) {
    const auto columns = [](const std::array<BaryPoint, 3> &t) {
        return Mat3::from_columns(t[0].normalized(), t[1].normalized(), t[2].normalized());
    };
    const Mat3 s = columns(src);
    const Mat3 d = columns(dst);
    if (s.determinant().is_zero() || d.determinant().is_zero()) {
        throw Error(ErrorKind::DegenerateTriangle, "triangle vertices are collinear");
    }
    return AffineMap(d * s.inverse());
}

AffineMap cevian_map(const BaryPoint &p) {
    const Traces t = cevian_traces(p);
    return map_from_triangles({ref::A(), ref::B(), ref::C()}, {t.D, t.E, t.F});
}

bool on_median(const BaryPoint &p) {
    const auto &[x, y, z] = p.coords();
    return y == z || x == z || x == y;
}

void require_valid(const BaryPoint &p, bool off_medians) {
    if (p.is_infinite()) throw Error(ErrorKind::InfinitePointArgument, "P = " + p.to_string() + " is at infinity");
    const auto &[x, y, z] = p.coords();
    if (x.is_zero() || y.is_zero() || z.is_zero()) {
        throw Error(ErrorKind::OnSideline, "P = " + p.to_string() + " lies on a side of ABC");
    }
    if ((y + z).is_zero() || (x + z).is_zero() || (x + y).is_zero()) {
        throw Error(ErrorKind::OnAnticomplementarySideline,
                    "P = " + p.to_string() + " lies on a side of the anticomplementary triangle");
    }
    if (off_medians && on_median(p)) {
        throw Error(ErrorKind::OnMedian, "P = " + p.to_string() + " lies on a median of ABC");
    }
}

bool is_valid(const BaryPoint &p, bool off_medians) {
    try {
        require_valid(p, off_medians);
        return true;
    } catch (const Error &) {
        return false;
    }
}

} // namespace cevian
