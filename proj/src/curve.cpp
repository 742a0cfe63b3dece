#include "cevian/curve.hpp"

#include "cevian/error.hpp"
#include "cevian/maps.hpp"

#include <algorithm>
#include <random>

namespace cevian {

namespace {

const FieldElement kThree(3), kSix(6);

void require_on_curve(const WPoint &p) {
    if (!w_contains(p)) throw Error(ErrorKind::OffCurve, "point " + p.to_string() + " is not on E_S'");
}

} // namespace

FieldElement es_cubic(const Triple &p) {
    const auto &[x, y, z] = p;
    const FieldElement yz = y + z, xz = x + z, xy = x + y;
    return x * yz * yz + y * xz * xz + z * xy * xy;
}

bool es_contains(const BaryPoint &p) { return es_cubic(p.coords()).is_zero(); }

BaryLine es_tangent_at(const BaryPoint &p) {
    if (!es_contains(p)) throw Error(ErrorKind::OffCurve, "point " + p.to_string() + " is not on E_S");
    const auto &[x, y, z] = p.coords();
    const FieldElement two(2);
    // Gradient of the cubic.
    const Triple grad{(y + z) * (y + z) + two * y * (x + z) + two * z * (x + y),
                      (x + z) * (x + z) + two * x * (y + z) + two * z * (x + y),
                      (x + y) * (x + y) + two * x * (y + z) + two * y * (x + z)};
    if (is_zero(grad)) throw Error(ErrorKind::DegenerateConfiguration, "singular point " + p.to_string());
    return BaryLine(grad);
}

const FieldElement &WPoint::u() const {
    if (!finite_) throw Error(ErrorKind::MapUndefined, "the point at infinity has no u coordinate");
    return u_;
}

const FieldElement &WPoint::v() const {
    if (!finite_) throw Error(ErrorKind::MapUndefined, "the point at infinity has no v coordinate");
    return v_;
}

std::string WPoint::to_string() const {
    if (!finite_) return "O";
    return "(" + u_.to_string() + ", " + v_.to_string() + ")";
}

bool nf_contains(const NFPoint &p) {
    const FieldElement &x = p.x, &y = p.y;
    const FieldElement a = kThree * x + 1;
    return (a * y * y + a * (x - 1) * y + x * x - x).is_zero();
}

bool quartic_contains(const QuarticPoint &p) {
    const FieldElement &X = p.X;
    return (p.Y * p.Y - (X - 1) * (kThree * X + 1) * (kThree * X * X - kSix * X - 1)).is_zero();
}

bool w_contains(const WPoint &p) {
    if (p.is_infinity()) return true;
    const FieldElement &u = p.u();
    return (p.v() * p.v() - u * (u * u + kSix * u - 3)).is_zero();
}

NFPoint bary_to_nf(const BaryPoint &p) {
    if (!es_contains(p)) throw Error(ErrorKind::OffCurve, "point " + p.to_string() + " is not on E_S");
    const Triple n = p.normalized();
    return {n[0], n[1]};
}

BaryPoint nf_to_bary(const NFPoint &p) { return {p.x, p.y, FieldElement(1) - p.x - p.y}; }

QuarticPoint nf_to_quartic(const NFPoint &p) {
    return {p.x, (kThree * p.x + 1) * (FieldElement(2) * p.y + p.x - 1)};
}

NFPoint quartic_to_nf(const QuarticPoint &p) {
    const FieldElement a = kThree * p.X + 1;
    if (a.is_zero()) throw Error(ErrorKind::MapUndefined, "3X+1 = 0");
    return {p.X, FieldElement::fraction(1, 2) * (p.Y / a - p.X + 1)};
}

WPoint quartic_to_w(const QuarticPoint &p) {
    const FieldElement d = FieldElement(1) - p.X;
    if (d.is_zero()) throw Error(ErrorKind::MapUndefined, "X = 1");
    const FieldElement u = (kThree * p.X + 1) / d;
    const FieldElement s = u + 3;
    return {u, p.Y * s * s / FieldElement(8)};
}

QuarticPoint w_to_quartic(const WPoint &p) {
    if (p.is_infinity()) throw Error(ErrorKind::MapUndefined, "point at infinity");
    const FieldElement s = p.u() + 3;
    if (s.is_zero()) throw Error(ErrorKind::MapUndefined, "u = -3");
    return {(p.u() - 1) / s, FieldElement(8) * p.v() / (s * s)};
}

WPoint nf_to_w(const NFPoint &p) { return quartic_to_w(nf_to_quartic(p)); }

NFPoint w_to_nf(const WPoint &p) { return quartic_to_nf(w_to_quartic(p)); }

WPoint bary_to_w(const BaryPoint &p) {
    if (!es_contains(p)) throw Error(ErrorKind::OffCurve, "point " + p.to_string() + " is not on E_S");
    if (p == ref::A()) return WPoint::infinity();
    if (p == BaryPoint(0, 1, -1)) return {0, 0};
    const auto &[x, y, z] = p.coords();
    const FieldElement s = y + z;
    const FieldElement w = FieldElement(4) * x + y + z;
    return {w / s, FieldElement(2) * w * (y - z) / (s * s)};
}

BaryPoint w_to_bary(const WPoint &p) {
    require_on_curve(p);
    if (p.is_infinity()) return ref::A();
    const FieldElement &u = p.u(), &v = p.v();
    if (u.is_zero() && v.is_zero()) return {0, 1, -1};
    const FieldElement two_u = FieldElement(2) * u;
    return {u * (u - 1), two_u + v, two_u - v};
}

WPoint w_neg(const WPoint &p) {
    require_on_curve(p);
    if (p.is_infinity()) return p;
    return {p.u(), -p.v()};
}

WPoint w_double(const WPoint &p) {
    require_on_curve(p);
    if (p.is_infinity() || p.v().is_zero()) return WPoint::infinity();
    const FieldElement &u = p.u(), &v = p.v();
    const FieldElement slope = (kThree * u * u + FieldElement(12) * u - 3) / (FieldElement(2) * v);
    const FieldElement u3 = slope * slope - kSix - FieldElement(2) * u;
    return {u3, slope * (u - u3) - v};
}

WPoint w_add(const WPoint &p, const WPoint &q) {
    require_on_curve(p);
    require_on_curve(q);
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;
    if (p.u() == q.u()) {
        if ((p.v() + q.v()).is_zero()) return WPoint::infinity();
        return w_double(p);
    }
    const FieldElement slope = (q.v() - p.v()) / (q.u() - p.u());
    const FieldElement u3 = slope * slope - kSix - p.u() - q.u();
    return {u3, slope * (p.u() - u3) - p.v()};
}

WPoint w_multiple(std::int64_t n, const WPoint &p) {
    WPoint base = n < 0 ? w_neg(p) : p;
    std::uint64_t m = n < 0 ? std::uint64_t(-(n + 1)) + 1 : std::uint64_t(n);
    WPoint acc = WPoint::infinity();
    while (m > 0) {
        if (m & 1U) acc = w_add(acc, base);
        m >>= 1U;
        if (m > 0) base = w_double(base);
    }
    return acc;
}

std::optional<int> w_order(const WPoint &p, int max_order) {
    WPoint acc = p;
    for (int n = 1; n <= max_order; ++n) {
        if (acc.is_infinity()) return n;
        acc = w_add(acc, p);
    }
    return std::nullopt;
}

CurveInvariants es_invariants() {
    // v^2 = u^3 + a2 u^2 + a4 u + a6 with a1 = a3 = 0.
    const Rational a2 = 6, a4 = -3, a6 = 0;
    CurveInvariants inv;
    inv.b2 = 4 * a2;
    inv.b4 = 2 * a4;
    inv.b6 = 4 * a6;
    inv.b8 = 4 * a2 * a6 - a4 * a4;
    inv.c4 = inv.b2 * inv.b2 - 24 * inv.b4;
    inv.c6 = -inv.b2 * inv.b2 * inv.b2 + 36 * inv.b2 * inv.b4 - 216 * inv.b6;
    inv.discriminant = -inv.b2 * inv.b2 * inv.b8 - 8 * inv.b4 * inv.b4 * inv.b4 - 27 * inv.b6 * inv.b6 +
                       9 * inv.b2 * inv.b4 * inv.b6;
    inv.j = inv.c4 * inv.c4 * inv.c4 / inv.discriminant;
    return inv;
}

Rational j_invariant() { return es_invariants().j; }

WPoint p_tilde() { return {3, kSix * FieldElement::root_of(2)}; }

std::vector<WPoint> rational_torsion() {
    return {WPoint::infinity(), {0, 0}, {1, 2}, {1, -2}, {-3, 6}, {-3, -6}};
}

std::vector<WPoint> torsion12() {
    auto out = rational_torsion();
    const FieldElement r3 = FieldElement::root_of(3);
    const FieldElement two_r3 = FieldElement(2) * r3;
    out.emplace_back(FieldElement(-3) + two_r3, 0);
    out.emplace_back(FieldElement(-3) - two_r3, 0);
    const FieldElement v_plus = FieldElement(12) + kSix * r3;
    const FieldElement v_minus = FieldElement(12) - kSix * r3;
    out.emplace_back(kThree + two_r3, v_plus);
    out.emplace_back(kThree + two_r3, -v_plus);
    out.emplace_back(kThree - two_r3, v_minus);
    out.emplace_back(kThree - two_r3, -v_minus);
    return out;
}

std::vector<BaryPoint> es_sample(std::size_t n, std::uint32_t seed) {
    const auto torsion = rational_torsion();
    const std::int64_t k_max = std::max<std::int64_t>(4, std::int64_t(n / (2 * torsion.size())) + 2);
    std::vector<std::pair<std::int64_t, std::size_t>> candidates;
    for (std::int64_t k = 1; k <= k_max; ++k) {
        for (std::size_t t = 0; t < torsion.size(); ++t) {
            candidates.emplace_back(k, t);
            candidates.emplace_back(-k, t);
        }
    }
    // Always lead with P~ itself, then a seeded order of the rest.
    std::mt19937 rng(seed);
    std::shuffle(candidates.begin() + 1, candidates.end(), rng);

    std::vector<WPoint> multiples(std::size_t(2 * k_max + 1), WPoint::infinity());
    const WPoint base = p_tilde();
    for (std::int64_t k = 1; k <= k_max; ++k) {
        multiples[std::size_t(k_max + k)] = w_multiple(k, base);
        multiples[std::size_t(k_max - k)] = w_neg(multiples[std::size_t(k_max + k)]);
    }

    std::vector<BaryPoint> out;
    for (const auto &[k, t] : candidates) {
        if (out.size() == n) break;
        const BaryPoint p = w_to_bary(w_add(multiples[std::size_t(k_max + k)], torsion[t]));
        if (!is_valid(p, true)) continue;
        if (std::find(out.begin(), out.end(), p) != out.end()) continue;
        out.push_back(p);
    }
    return out;
}

FieldElement nf_y_discriminant(const FieldElement &x) {
    const FieldElement a = kThree * x + 1;
    const FieldElement b = a * (x - 1);
    const FieldElement c = x * x - x;
    return b * b - FieldElement(4) * a * c;
}

FieldElement nf_discriminant_closed(const FieldElement &x) {
    return (x - 1) * (kThree * x + 1) * (kThree * x * x - kSix * x - 1);
}

CurveEa::CurveEa(FieldElement a) : a_(std::move(a)) {
    for (int bad : {3, 0, -1, 9}) {
        if (a_ == FieldElement(bad)) {
            throw Error(ErrorKind::BadParameter, "a = " + std::to_string(bad) + " is excluded");
        }
    }
}

FieldElement CurveEa::homothety_ratio() const { return FieldElement(4) / (a_ + 1); }

bool ea_contains(const CurveEa &c, const FieldElement &x, const FieldElement &y) {
    const FieldElement lead = c.a() * x + 1;
    return (lead * y * y + lead * (x - 1) * y + x * x - x).is_zero();
}

std::vector<NFPoint> ea_sample(const CurveEa &c, std::size_t n, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> num_dist(-24, 24);
    std::uniform_int_distribution<long> den_dist(1, 9);
    std::bernoulli_distribution branch(0.5);
    std::vector<NFPoint> out;
    for (std::size_t attempt = 0; out.size() < n; ++attempt) {
        if (attempt > 2000 * (n + 1)) {
            throw Error(ErrorKind::DegenerateConfiguration, "E_a sampler found too few valid points");
        }
        const FieldElement x = FieldElement::fraction(num_dist(rng), den_dist(rng));
        const FieldElement lead = c.a() * x + 1;
        if (lead.is_zero()) continue;
        const FieldElement b = lead * (x - 1);
        const FieldElement disc = b * b - FieldElement(4) * lead * (x * x - x);
        if (disc.sign() < 0) continue;
        FieldElement root;
        try {
            root = sqrt_adjoin(disc);
        } catch (const Error &) {
            continue;
        }
        if (branch(rng)) root = -root;
        const NFPoint p{x, (root - b) / (FieldElement(2) * lead)};
        if (!is_valid(nf_to_bary(p), true)) continue;
        if (std::find(out.begin(), out.end(), p) != out.end()) continue;
        out.push_back(p);
    }
    return out;
}

} // namespace cevian
