#pragma once

// Dense univariate polynomials over Q, enough to solve the low-degree
// elimination problems that come up (degree <= 6 with rational roots
// splitting off to leave at most a quadratic).

#include "cevian/field.hpp"

#include <vector>

namespace cevian {

class Polynomial {
  public:
    Polynomial() = default;
    /// Coefficients in increasing degree.
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial constant(const Rational &c) { return Polynomial({c}); }
    static Polynomial x() { return Polynomial({Rational(0), Rational(1)}); }

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<Rational> &coeffs() const noexcept { return coeffs_; }
    Rational coeff(int i) const;

    Rational operator()(const Rational &t) const;
    FieldElement operator()(const FieldElement &t) const;

    Polynomial derivative() const;
    /// Exact division by (x - r); throws DegenerateConfiguration if r is not a root.
    Polynomial deflate(const Rational &r) const;

    friend Polynomial operator+(const Polynomial &a, const Polynomial &b);
    friend Polynomial operator-(const Polynomial &a, const Polynomial &b);
    friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
    friend bool operator==(const Polynomial &, const Polynomial &) = default;

  private:
    void trim();
    std::vector<Rational> coeffs_;
};

struct Root {
    FieldElement value;
    int multiplicity;
};

/// Distinct rational roots with multiplicity, by the rational root theorem.
std::vector<Root> rational_roots(const Polynomial &p);

/// All real roots when, after removing rational roots, the remaining factor
/// has degree <= 2. Throws DegenerateConfiguration otherwise.
std::vector<Root> real_roots(const Polynomial &p);

} // namespace cevian
