#pragma once

// Exact arithmetic in Q and in towers of at most two real quadratic
// extensions Q(sqrt(d1), sqrt(d2)).

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace cevian {

using Integer = mpz_class;
using Rational = mpq_class;

/// Squarefree decomposition n = square^2 * radicand for n > 0.
struct SquarefreeSplit {
    Integer radicand;
    Integer square;
};
SquarefreeSplit squarefree_split(const Integer &n);

/// Ordered radicands of a tower Q subset Q(sqrt d1) subset Q(sqrt d1, sqrt d2).
///
/// Towers are always stored canonically: radicands are squarefree, > 1 and
/// ascending, and a depth-2 tower keeps the two smallest of
/// {d1, d2, squarefree(d1*d2)}, so equal fields have equal descriptors.
class Tower {
  public:
    Tower() = default;
    explicit Tower(std::vector<std::int64_t> radicands);

    std::size_t depth() const noexcept { return radicands_.size(); }
    std::size_t dimension() const noexcept { return std::size_t{1} << radicands_.size(); }
    const std::vector<std::int64_t> &radicands() const noexcept { return radicands_; }

    /// Product of the radicands selected by the bits of `index`; basis
    /// element `index` is the square root of this number.
    Integer basis_square(std::size_t index) const;

    /// True when sqrt(r) lies in the field, r squarefree.
    bool contains_root(std::int64_t r) const;

    /// The tower with sqrt(r) adjoined; throws TowerDepthExceeded past depth 2.
    Tower with_root(std::int64_t r) const;

    /// Smallest tower containing both; throws TowerMismatch.
    static Tower join(const Tower &a, const Tower &b);

    friend bool operator==(const Tower &, const Tower &) = default;

  private:
    std::vector<std::int64_t> radicands_;
};

/// Element of a quadratic tower, coordinates in the basis
/// {1, sqrt d1, sqrt d2, sqrt(d1 d2)} truncated to the tower depth.
///
/// Elements are kept reduced to the smallest tower that holds them, which
/// makes equality coefficient-wise.
class FieldElement {
  public:
    FieldElement() : coeffs_{Rational(0)} {}
    FieldElement(int value) : coeffs_{Rational(value)} {}
    FieldElement(long value) : coeffs_{Rational(value)} {}
    FieldElement(const Rational &value) : coeffs_{value} { coeffs_[0].canonicalize(); }
    FieldElement(Tower tower, std::vector<Rational> coeffs);

    static FieldElement fraction(long num, long den);
    /// sqrt(n) for an integer n >= 0 (not necessarily squarefree).
    static FieldElement root_of(std::int64_t n);

    const Tower &tower() const noexcept { return tower_; }
    const std::vector<Rational> &coeffs() const noexcept { return coeffs_; }

    bool is_zero() const noexcept { return tower_.depth() == 0 && sgn(coeffs_[0]) == 0; }
    bool is_one() const noexcept { return tower_.depth() == 0 && coeffs_[0] == 1; }
    bool is_rational() const noexcept { return tower_.depth() == 0; }
    std::optional<Rational> as_rational() const;

    /// Coordinates after embedding into `target`, which must contain this field.
    std::vector<Rational> coeffs_in(const Tower &target) const;

    int sign() const;
    FieldElement inverse() const;
    FieldElement abs() const { return sign() < 0 ? -*this : *this; }

    FieldElement operator-() const;
    FieldElement &operator+=(const FieldElement &rhs);
    FieldElement &operator-=(const FieldElement &rhs);
    FieldElement &operator*=(const FieldElement &rhs);
    FieldElement &operator/=(const FieldElement &rhs);

    friend FieldElement operator+(FieldElement lhs, const FieldElement &rhs) { return lhs += rhs; }
    friend FieldElement operator-(FieldElement lhs, const FieldElement &rhs) { return lhs -= rhs; }
    friend FieldElement operator*(FieldElement lhs, const FieldElement &rhs) { return lhs *= rhs; }
    friend FieldElement operator/(FieldElement lhs, const FieldElement &rhs) { return lhs /= rhs; }
    friend bool operator==(const FieldElement &a, const FieldElement &b) {
        return a.tower_ == b.tower_ && a.coeffs_ == b.coeffs_;
    }

    /// Decimal approximation (256-bit intermediate precision).
    double to_double() const;
    /// Canonical text form, e.g. `3/2-1/2*sqrt(6)`; parses back exactly.
    std::string to_string() const;

  private:
    Tower tower_;
    std::vector<Rational> coeffs_;
};

std::ostream &operator<<(std::ostream &os, const FieldElement &value);

/// Sign under the embedding that sends every sqrt(d) to the positive root.
inline int fe_sign(const FieldElement &a) { return a.sign(); }

/// Returned by fe_sqrt when the root is not in the working tower.
/// `radicand` is a squarefree integer whose root, once adjoined, makes the
/// element a square; 0 when no single integer radicand is known to suffice.
struct NotASquare {
    std::int64_t radicand = 0;
};

/// Square root inside the tower join(a.tower(), within). Throws
/// NegativeRadicand for negative input.
std::variant<FieldElement, NotASquare> fe_sqrt(const FieldElement &a, const Tower &within = {});

/// Square root, adjoining the radicand suggested by fe_sqrt when needed.
/// Throws TowerDepthExceeded when that would need a third radicand or the
/// root is not in any depth-2 tower.
FieldElement sqrt_adjoin(const FieldElement &a, const Tower &within = {});

} // namespace cevian
