#pragma once

#include "cevian/field.hpp"

#include <array>

namespace cevian {

using Triple = std::array<FieldElement, 3>;

Triple operator+(const Triple &a, const Triple &b);
Triple operator-(const Triple &a, const Triple &b);
Triple operator*(const FieldElement &s, const Triple &a);
FieldElement dot(const Triple &a, const Triple &b);
Triple cross(const Triple &a, const Triple &b);
bool is_zero(const Triple &a);
/// True when a and b are nonzero multiples of each other.
bool proportional(const Triple &a, const Triple &b);

/// Row-major 3x3 matrix over the field.
class Mat3 {
  public:
    Mat3() = default;
    explicit Mat3(std::array<Triple, 3> rows) : rows_(std::move(rows)) {}

    static Mat3 identity();
    static Mat3 from_columns(const Triple &c0, const Triple &c1, const Triple &c2);

    const FieldElement &operator()(std::size_t r, std::size_t c) const { return rows_[r][c]; }
    FieldElement &operator()(std::size_t r, std::size_t c) { return rows_[r][c]; }
    const Triple &row(std::size_t r) const { return rows_[r]; }
    Triple column(std::size_t c) const { return {rows_[0][c], rows_[1][c], rows_[2][c]}; }

    Mat3 transpose() const;
    FieldElement determinant() const;
    /// Throws DivisionByZero for singular matrices.
    Mat3 inverse() const;
    bool is_zero() const;

    friend Mat3 operator*(const Mat3 &a, const Mat3 &b);
    friend Triple operator*(const Mat3 &a, const Triple &x);
    friend Mat3 operator*(const FieldElement &s, const Mat3 &a);
    friend Mat3 operator+(const Mat3 &a, const Mat3 &b);
    friend Mat3 operator-(const Mat3 &a, const Mat3 &b);
    friend bool operator==(const Mat3 &, const Mat3 &) = default;

  private:
    std::array<Triple, 3> rows_{};
};

/// True when a = s * b for some nonzero s.
bool proportional(const Mat3 &a, const Mat3 &b);

} // namespace cevian
