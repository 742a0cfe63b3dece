#include "cevian/field.hpp"

#include "cevian/error.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>

namespace cevian {

namespace {

using Vec = std::vector<Rational>;
using Radicands = std::span<const std::int64_t>;

// Trial division stops here; a leftover cofactor is treated as squarefree
// unless it is a perfect square.
constexpr unsigned long kTrialDivisionLimit = 1ul << 20;

std::int64_t to_int64(const Integer &n, const char *what) {
    if (!n.fits_slong_p()) {
        throw Error(ErrorKind::TowerDepthExceeded, std::string(what) + " does not fit in 64 bits");
    }
    return n.get_si();
}

Integer squarefree_of(const Integer &n) { return squarefree_split(n).radicand; }

// ---- recursive arithmetic on coefficient vectors of a fixed tower ----
//
// A vector of length 2^k over radicands r[0..k) splits as p + q*sqrt(r[k-1])
// with p = first half and q = second half, both over r[0..k-1).

Vec lower(const Vec &x) { return Vec(x.begin(), x.begin() + static_cast<long>(x.size() / 2)); }
Vec upper(const Vec &x) { return Vec(x.begin() + static_cast<long>(x.size() / 2), x.end()); }

Vec concat(Vec lo, const Vec &hi) {
    lo.insert(lo.end(), hi.begin(), hi.end());
    return lo;
}

bool all_zero(const Vec &x) {
    return std::all_of(x.begin(), x.end(), [](const Rational &c) { return sgn(c) == 0; });
}

Vec add(const Vec &x, const Vec &y) {
    Vec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
    return out;
}

Vec sub(const Vec &x, const Vec &y) {
    Vec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - y[i];
    return out;
}

Vec scale(const Vec &x, const Rational &s) {
    Vec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] * s;
    return out;
}

Vec mul(const Vec &x, const Vec &y, Radicands rad) {
    if (rad.empty()) return {x[0] * y[0]};
    const auto sub_rad = rad.first(rad.size() - 1);
    const Rational d(static_cast<long>(rad.back()));
    const Vec p = lower(x), q = upper(x), r = lower(y), s = upper(y);
    Vec lo = add(mul(p, r, sub_rad), scale(mul(q, s, sub_rad), d));
    Vec hi = add(mul(p, s, sub_rad), mul(q, r, sub_rad));
    return concat(std::move(lo), hi);
}

Vec inv(const Vec &x, Radicands rad) {
    if (rad.empty()) return {1 / x[0]};
    const auto sub_rad = rad.first(rad.size() - 1);
    const Rational d(static_cast<long>(rad.back()));
    const Vec p = lower(x), q = upper(x);
    const Vec norm = sub(mul(p, p, sub_rad), scale(mul(q, q, sub_rad), d));
    const Vec norm_inv = inv(norm, sub_rad);
    return concat(mul(p, norm_inv, sub_rad), scale(mul(q, norm_inv, sub_rad), Rational(-1)));
}

int sign(const Vec &x, Radicands rad) {
    if (rad.empty()) return sgn(x[0]);
    const auto sub_rad = rad.first(rad.size() - 1);
    const Rational d(static_cast<long>(rad.back()));
    const Vec p = lower(x), q = upper(x);
    const int sp = sign(p, sub_rad);
    const int sq = sign(q, sub_rad);
    if (sq == 0) return sp;
    if (sp == 0 || sp == sq) return sp == 0 ? sq : sp;
    // Opposite signs: the larger of |p| and |q| sqrt(d) wins.
    const int cmp = sign(sub(mul(p, p, sub_rad), scale(mul(q, q, sub_rad), d)), sub_rad);
    return cmp > 0 ? sp : sq;
}

std::optional<Vec> sqrt_rec(const Vec &x, Radicands rad, std::int64_t &hint) {
    if (rad.empty()) {
        const Rational &v = x[0];
        if (sgn(v) < 0) return std::nullopt;
        if (sgn(v) == 0) return Vec{Rational(0)};
        if (mpz_perfect_square_p(v.get_num_mpz_t()) && mpz_perfect_square_p(v.get_den_mpz_t())) {
            Rational root(Integer(sqrt(v.get_num())), Integer(sqrt(v.get_den())));
            root.canonicalize();
            return Vec{root};
        }
        if (hint == 0) hint = to_int64(squarefree_of(v.get_num() * v.get_den()), "radicand");
        return std::nullopt;
    }
    const auto sub_rad = rad.first(rad.size() - 1);
    const Rational d(static_cast<long>(rad.back()));
    const Vec p = lower(x), q = upper(x);
    const Vec zero(p.size(), Rational(0));
    if (all_zero(q)) {
        std::int64_t sub_hint = 0;
        if (sign(p, sub_rad) >= 0) {
            if (auto r = sqrt_rec(p, sub_rad, sub_hint)) return concat(*r, zero);
        }
        std::int64_t unused = 0;
        if (sign(p, sub_rad) >= 0) {
            if (auto r = sqrt_rec(scale(p, 1 / d), sub_rad, unused)) return concat(zero, *r);
        }
        if (hint == 0) hint = sub_hint;
        return std::nullopt;
    }
    // (a + b sqrt d)^2 = p + q sqrt d  =>  a^2 = (p +- n)/2 with n^2 = p^2 - d q^2.
    const Vec norm = sub(mul(p, p, sub_rad), scale(mul(q, q, sub_rad), d));
    if (sign(norm, sub_rad) < 0) return std::nullopt;
    std::int64_t norm_hint = 0;
    const auto n = sqrt_rec(norm, sub_rad, norm_hint);
    if (!n) return std::nullopt;
    for (const Rational &s : {Rational(1), Rational(-1)}) {
        const Vec a_sq = scale(add(p, scale(*n, s)), Rational(1, 2));
        if (all_zero(a_sq) || sign(a_sq, sub_rad) < 0) continue;
        std::int64_t a_hint = 0;
        const auto a = sqrt_rec(a_sq, sub_rad, a_hint);
        if (!a) {
            if (hint == 0) hint = a_hint;
            continue;
        }
        const Vec b = mul(scale(q, Rational(1, 2)), inv(*a, sub_rad), sub_rad);
        return concat(*a, b);
    }
    return std::nullopt;
}

// ---- embedding between towers ----

Vec embed(const Vec &coeffs, const Tower &from, const Tower &to) {
    if (from == to) return coeffs;
    Vec out(to.dimension(), Rational(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (sgn(coeffs[i]) == 0) continue;
        const auto src = squarefree_split(from.basis_square(i));
        bool placed = false;
        for (std::size_t j = 0; j < to.dimension() && !placed; ++j) {
            const auto dst = squarefree_split(to.basis_square(j));
            if (dst.radicand != src.radicand) continue;
            // sqrt(m_i) = s sqrt(r) = (s / t) sqrt(m_j)
            Rational factor(src.square, dst.square);
            factor.canonicalize();
            out[j] += coeffs[i] * factor;
            placed = true;
        }
        if (!placed) throw Error(ErrorKind::TowerMismatch, "element does not embed in target tower");
    }
    return out;
}

// Smallest tower holding the element: drops radicands whose coefficients vanish.
void reduce(Tower &tower, Vec &coeffs) {
    for (auto &c : coeffs) c.canonicalize();
    if (tower.depth() == 0) return;
    std::vector<std::size_t> nonzero;
    for (std::size_t i = 1; i < coeffs.size(); ++i) {
        if (sgn(coeffs[i]) != 0) nonzero.push_back(i);
    }
    if (nonzero.empty()) {
        coeffs = {coeffs[0]};
        tower = Tower{};
        return;
    }
    if (nonzero.size() == 1 && tower.depth() == 2) {
        const auto r = to_int64(squarefree_of(tower.basis_square(nonzero[0])), "radicand");
        Tower target(std::vector<std::int64_t>{r});
        coeffs = embed(coeffs, tower, target);
        tower = target;
    }
}

} // namespace

SquarefreeSplit squarefree_split(const Integer &n) {
    if (sgn(n) <= 0) throw Error(ErrorKind::NegativeRadicand, "squarefree split of non-positive integer");
    Integer rest = n;
    Integer radicand = 1;
    Integer square = 1;
    for (unsigned long p = 2; p < kTrialDivisionLimit; p += (p == 2 ? 1 : 2)) {
        if (Integer(p) * p > rest) break;
        unsigned count = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            rest /= p;
            ++count;
        }
        for (unsigned k = 0; k + 1 < count; k += 2) square *= p;
        if (count % 2 == 1) radicand *= p;
    }
    if (rest > 1) {
        if (mpz_perfect_square_p(rest.get_mpz_t())) {
            square *= Integer(sqrt(rest));
        } else {
            radicand *= rest;
        }
    }
    return {radicand, square};
}

// ---------------------------------------------------------------- Tower

Tower::Tower(std::vector<std::int64_t> radicands) {
    if (radicands.size() > 2) throw Error(ErrorKind::TowerDepthExceeded, "tower depth is at most 2");
    for (auto r : radicands) {
        if (r <= 1) throw Error(ErrorKind::NegativeRadicand, "tower radicands must exceed 1");
        if (squarefree_split(Integer(static_cast<long>(r))).square != 1) {
            throw Error(ErrorKind::TowerMismatch, "radicand " + std::to_string(r) + " is not squarefree");
        }
    }
    std::sort(radicands.begin(), radicands.end());
    if (radicands.size() == 2) {
        if (radicands[0] == radicands[1]) throw Error(ErrorKind::TowerMismatch, "duplicate radicand");
        const auto third = to_int64(squarefree_of(Integer(static_cast<long>(radicands[0])) * radicands[1]),
                                    "radicand product");
        std::vector<std::int64_t> all{radicands[0], radicands[1], third};
        std::sort(all.begin(), all.end());
        radicands = {all[0], all[1]};
    }
    radicands_ = std::move(radicands);
}

Integer Tower::basis_square(std::size_t index) const {
    Integer m = 1;
    for (std::size_t k = 0; k < radicands_.size(); ++k) {
        if (index & (std::size_t{1} << k)) m *= static_cast<long>(radicands_[k]);
    }
    return m;
}

bool Tower::contains_root(std::int64_t r) const {
    if (r == 1) return true;
    for (std::size_t i = 1; i < dimension(); ++i) {
        if (squarefree_of(basis_square(i)) == static_cast<long>(r)) return true;
    }
    return false;
}

Tower Tower::with_root(std::int64_t r) const {
    if (contains_root(r)) return *this;
    if (depth() >= 2) {
        throw Error(ErrorKind::TowerDepthExceeded, "adjoining sqrt(" + std::to_string(r) + ") needs depth 3");
    }
    auto rad = radicands_;
    rad.push_back(r);
    return Tower(std::move(rad));
}

Tower Tower::join(const Tower &a, const Tower &b) {
    if (a == b || b.depth() == 0) return a;
    if (a.depth() == 0) return b;
    Tower out = a;
    for (auto r : b.radicands()) {
        if (out.contains_root(r)) continue;
        if (out.depth() >= 2) throw Error(ErrorKind::TowerMismatch, "radicand sets span more than depth 2");
        out = out.with_root(r);
    }
    return out;
}

// --------------------------------------------------------- FieldElement

FieldElement::FieldElement(Tower tower, std::vector<Rational> coeffs) : tower_(std::move(tower)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != tower_.dimension()) {
        throw Error(ErrorKind::TowerMismatch, "coefficient count does not match tower depth");
    }
    reduce(tower_, coeffs_);
}

FieldElement FieldElement::fraction(long num, long den) {
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return FieldElement(q);
}

FieldElement FieldElement::root_of(std::int64_t n) {
    if (n < 0) throw Error(ErrorKind::NegativeRadicand, "sqrt of negative integer");
    if (n == 0) return FieldElement();
    const auto split = squarefree_split(Integer(static_cast<long>(n)));
    if (split.radicand == 1) return FieldElement(Rational(split.square));
    return FieldElement(Tower({split.radicand.get_si()}), {Rational(0), Rational(split.square)});
}

std::optional<Rational> FieldElement::as_rational() const {
    if (!is_rational()) return std::nullopt;
    return coeffs_[0];
}

std::vector<Rational> FieldElement::coeffs_in(const Tower &target) const { return embed(coeffs_, tower_, target); }

int FieldElement::sign() const { return cevian::sign(coeffs_, tower_.radicands()); }

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    return FieldElement(tower_, inv(coeffs_, tower_.radicands()));
}

FieldElement FieldElement::operator-() const {
    FieldElement out = *this;
    for (auto &c : out.coeffs_) c = -c;
    return out;
}

FieldElement &FieldElement::operator+=(const FieldElement &rhs) {
    if (tower_ == rhs.tower_) {
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
        reduce(tower_, coeffs_);
        return *this;
    }
    Tower t = Tower::join(tower_, rhs.tower_);
    *this = FieldElement(t, add(coeffs_in(t), rhs.coeffs_in(t)));
    return *this;
}

FieldElement &FieldElement::operator-=(const FieldElement &rhs) { return *this += -rhs; }

FieldElement &FieldElement::operator*=(const FieldElement &rhs) {
    if (rhs.is_rational()) {
        for (auto &c : coeffs_) c *= rhs.coeffs_[0];
        reduce(tower_, coeffs_);
        return *this;
    }
    Tower t = Tower::join(tower_, rhs.tower_);
    *this = FieldElement(t, mul(coeffs_in(t), rhs.coeffs_in(t), t.radicands()));
    return *this;
}

FieldElement &FieldElement::operator/=(const FieldElement &rhs) { return *this *= rhs.inverse(); }

double FieldElement::to_double() const {
    constexpr unsigned long kBits = 256;
    mpf_class total(0, kBits);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) == 0) continue;
        mpf_class root(tower_.basis_square(i), kBits);
        root = sqrt(root);
        mpf_class c(coeffs_[i], kBits);
        total += c * root;
    }
    return total.get_d();
}

std::string FieldElement::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational &c = coeffs_[i];
        if (sgn(c) == 0) continue;
        const bool negative = sgn(c) < 0;
        if (negative) {
            out << '-';
        } else if (!first) {
            out << '+';
        }
        const Rational mag = ::abs(c);
        if (i == 0) {
            out << mag.get_str();
        } else {
            if (mag != 1) out << mag.get_str() << '*';
            out << "sqrt(" << tower_.basis_square(i).get_str() << ')';
        }
        first = false;
    }
    if (first) out << '0';
    return out.str();
}

std::ostream &operator<<(std::ostream &os, const FieldElement &value) { return os << value.to_string(); }

// ------------------------------------------------------------ sqrt API

std::variant<FieldElement, NotASquare> fe_sqrt(const FieldElement &a, const Tower &within) {
    if (a.sign() < 0) throw Error(ErrorKind::NegativeRadicand, "sqrt of " + a.to_string());
    const Tower t = Tower::join(a.tower(), within);
    std::int64_t hint = 0;
    if (auto root = sqrt_rec(a.coeffs_in(t), t.radicands(), hint)) return FieldElement(t, std::move(*root)).abs();
    if (hint != 0 && t.contains_root(hint)) hint = 0;
    return NotASquare{hint};
}

FieldElement sqrt_adjoin(const FieldElement &a, const Tower &within) {
    auto first = fe_sqrt(a, within);
    if (auto *root = std::get_if<FieldElement>(&first)) return *root;
    const auto radicand = std::get<NotASquare>(first).radicand;
    if (radicand == 0) {
        throw Error(ErrorKind::TowerDepthExceeded, "sqrt(" + a.to_string() + ") is not in a depth-2 tower");
    }
    const Tower extended = Tower::join(a.tower(), within).with_root(radicand);
    auto second = fe_sqrt(a, extended);
    if (auto *root = std::get_if<FieldElement>(&second)) return *root;
    throw Error(ErrorKind::TowerDepthExceeded, "sqrt(" + a.to_string() + ") is not in a depth-2 tower");
}

} // namespace cevian
