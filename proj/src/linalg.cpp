#include "cevian/linalg.hpp"

#include "cevian/error.hpp"

namespace cevian {

Triple operator+(const Triple &a, const Triple &b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Triple operator-(const Triple &a, const Triple &b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Triple operator*(const FieldElement &s, const Triple &a) { return {s * a[0], s * a[1], s * a[2]}; }

FieldElement dot(const Triple &a, const Triple &b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Triple cross(const Triple &a, const Triple &b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool is_zero(const Triple &a) { return a[0].is_zero() && a[1].is_zero() && a[2].is_zero(); }

bool proportional(const Triple &a, const Triple &b) {
    if (is_zero(a) || is_zero(b)) return false;
    return is_zero(cross(a, b));
}

Mat3 Mat3::identity() {
    Mat3 m;
    for (std::size_t i = 0; i < 3; ++i) m(i, i) = 1;
    return m;
}

Mat3 Mat3::from_columns(const Triple &c0, const Triple &c1, const Triple &c2) {
    return Mat3({Triple{c0[0], c1[0], c2[0]}, Triple{c0[1], c1[1], c2[1]}, Triple{c0[2], c1[2], c2[2]}});
}

Mat3 Mat3::transpose() const { return from_columns(rows_[0], rows_[1], rows_[2]); }

FieldElement Mat3::determinant() const { return dot(rows_[0], cross(rows_[1], rows_[2])); }

Mat3 Mat3::inverse() const {
    const FieldElement det = determinant();
    if (det.is_zero()) throw Error(ErrorKind::DivisionByZero, "singular matrix");
    // Columns of the inverse are the cross products of the rows, over det.
    const FieldElement inv_det = det.inverse();
    const Triple c0 = inv_det * cross(rows_[1], rows_[2]);
    const Triple c1 = inv_det * cross(rows_[2], rows_[0]);
    const Triple c2 = inv_det * cross(rows_[0], rows_[1]);
    return from_columns(c0, c1, c2);
}

bool Mat3::is_zero() const {
    return cevian::is_zero(rows_[0]) && cevian::is_zero(rows_[1]) && cevian::is_zero(rows_[2]);
}

Mat3 operator*(const Mat3 &a, const Mat3 &b) {
    Mat3 out;
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            out(r, c) = a(r, 0) * b(0, c) + a(r, 1) * b(1, c) + a(r, 2) * b(2, c);
        }
    }
    return out;
}

Triple operator*(const Mat3 &a, const Triple &x) { return {dot(a.row(0), x), dot(a.row(1), x), dot(a.row(2), x)}; }

Mat3 operator*(const FieldElement &s, const Mat3 &a) { return Mat3({s * a.row(0), s * a.row(1), s * a.row(2)}); }

Mat3 operator+(const Mat3 &a, const Mat3 &b) { return Mat3({a.row(0) + b.row(0), a.row(1) + b.row(1), a.row(2) + b.row(2)}); }

Mat3 operator-(const Mat3 &a, const Mat3 &b) { return Mat3({a.row(0) - b.row(0), a.row(1) - b.row(1), a.row(2) - b.row(2)}); }

bool proportional(const Mat3 &a, const Mat3 &b) {
    if (a.is_zero() || b.is_zero()) return false;
    // Pick a pivot entry of b, scale a onto it, then compare.
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            if (b(r, c).is_zero()) continue;
            if (a(r, c).is_zero()) return false;
            const FieldElement s = a(r, c) / b(r, c);
            return a == s * b;
        }
    }
    return false;
}

} // namespace cevian
