#include "cevian/polynomial.hpp"

#include "cevian/error.hpp"

#include <algorithm>

namespace cevian {

namespace {

// Positive divisors of |n| by trial division; n is small in practice.
std::vector<Integer> divisors(Integer n) {
    n = abs(n);
    std::vector<Integer> small, large;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d * d != n) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

} // namespace

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(int i) const {
    if (i < 0 || i > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

Rational Polynomial::operator()(const Rational &t) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

FieldElement Polynomial::operator()(const FieldElement &t) const {
    FieldElement acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + FieldElement(*it);
    return acc;
}

Polynomial Polynomial::derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<long>(i));
    return Polynomial(std::move(d));
}

Polynomial Polynomial::deflate(const Rational &r) const {
    if (is_zero()) return {};
    // Synthetic division.
    std::vector<Rational> q(coeffs_.size() - 1);
    Rational carry = 0;
    for (std::size_t i = coeffs_.size(); i-- > 1;) {
        carry = carry * r + coeffs_[i];
        q[i - 1] = carry;
    }
    if (sgn(carry * r + coeffs_[0]) != 0) {
        throw Error(ErrorKind::DegenerateConfiguration, r.get_str() + " is not a root");
    }
    return Polynomial(std::move(q));
}

Polynomial operator+(const Polynomial &a, const Polynomial &b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(int(i)) + b.coeff(int(i));
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial &a, const Polynomial &b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(int(i)) - b.coeff(int(i));
    return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial &a, const Polynomial &b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(c));
}

std::vector<Root> rational_roots(const Polynomial &p) {
    if (p.is_zero()) throw Error(ErrorKind::DegenerateConfiguration, "roots of the zero polynomial");
    std::vector<Root> roots;
    Polynomial rest = p;
    // Zero roots first, so the constant term below is nonzero.
    int zero_mult = 0;
    while (rest.degree() > 0 && sgn(rest.coeff(0)) == 0) {
        rest = rest.deflate(0);
        ++zero_mult;
    }
    if (zero_mult > 0) roots.push_back({FieldElement(0), zero_mult});
    if (rest.degree() <= 0) return roots;

    Integer lcm = 1;
    for (const auto &c : rest.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    const Integer lead = Rational(rest.coeffs().back() * lcm).get_num();
    const Integer constant = Rational(rest.coeffs().front() * lcm).get_num();
    const auto num_divs = divisors(constant);
    const auto den_divs = divisors(lead);

    std::vector<Rational> candidates;
    for (const auto &n : num_divs) {
        for (const auto &d : den_divs) {
            for (int s : {1, -1}) {
                Rational r(n * s, d);
                r.canonicalize();
                if (std::find(candidates.begin(), candidates.end(), r) == candidates.end()) candidates.push_back(r);
            }
        }
    }
    std::sort(candidates.begin(), candidates.end());
    for (const auto &r : candidates) {
        int mult = 0;
        while (rest.degree() > 0 && sgn(rest(r)) == 0) {
            rest = rest.deflate(r);
            ++mult;
        }
        if (mult > 0) roots.push_back({FieldElement(r), mult});
    }
    return roots;
}

std::vector<Root> real_roots(const Polynomial &p) {
    auto roots = rational_roots(p);
    Polynomial rest = p;
    for (const auto &r : roots) {
        for (int i = 0; i < r.multiplicity; ++i) rest = rest.deflate(*r.value.as_rational());
    }
    if (rest.degree() > 2) {
        throw Error(ErrorKind::DegenerateConfiguration, "irrational factor of degree " + std::to_string(rest.degree()));
    }
    if (rest.degree() == 2) {
        const Rational a = rest.coeff(2), b = rest.coeff(1), c = rest.coeff(0);
        const Rational disc = b * b - 4 * a * c;
        if (sgn(disc) > 0) {
            const FieldElement root = sqrt_adjoin(FieldElement(disc));
            const FieldElement two_a(2 * a);
            roots.push_back({(FieldElement(-b) + root) / two_a, 1});
            roots.push_back({(FieldElement(-b) - root) / two_a, 1});
        }
    }
    return roots;
}

} // namespace cevian
