#include "cevian/plane.hpp"

#include "cevian/error.hpp"

namespace cevian {

namespace {

Triple canonical(const Triple &t, const char *what) {
    for (std::size_t i = 0; i < 3; ++i) {
        if (t[i].is_zero()) continue;
        if (t[i].is_one()) return t;
        const FieldElement inv = t[i].inverse();
        return inv * t;
    }
    throw Error(ErrorKind::DegenerateConfiguration, std::string(what) + " with all coordinates zero");
}

std::string triple_string(const Triple &t) {
    return "[" + t[0].to_string() + "," + t[1].to_string() + "," + t[2].to_string() + "]";
}

} // namespace

BaryPoint::BaryPoint(FieldElement x, FieldElement y, FieldElement z)
    : BaryPoint(Triple{std::move(x), std::move(y), std::move(z)}) {}

BaryPoint::BaryPoint(const Triple &coords) : coords_(canonical(coords, "point")) {}

Triple BaryPoint::normalized() const {
    const FieldElement s = coordinate_sum();
    if (s.is_zero()) throw Error(ErrorKind::InfinitePointArgument, "point " + to_string() + " is at infinity");
    return s.inverse() * coords_;
}

std::string BaryPoint::to_string() const { return triple_string(coords_); }

BaryLine::BaryLine(FieldElement p, FieldElement q, FieldElement r)
    : BaryLine(Triple{std::move(p), std::move(q), std::move(r)}) {}

BaryLine::BaryLine(const Triple &coeffs) : coeffs_(canonical(coeffs, "line")) {}

std::string BaryLine::to_string() const { return triple_string(coeffs_); }

BaryLine join(const BaryPoint &p1, const BaryPoint &p2) {
    const Triple c = cross(p1.coords(), p2.coords());
    if (is_zero(c)) throw Error(ErrorKind::IdenticalArguments, "join of coincident points " + p1.to_string());
    return BaryLine(c);
}

BaryPoint meet(const BaryLine &l1, const BaryLine &l2) {
    const Triple c = cross(l1.coeffs(), l2.coeffs());
    if (is_zero(c)) throw Error(ErrorKind::IdenticalArguments, "meet of coincident lines " + l1.to_string());
    return BaryPoint(c);
}

BaryPoint infinite_point(const BaryLine &l) {
    if (l.is_infinity()) throw Error(ErrorKind::InfiniteLineArgument, "the line at infinity has no single infinite point");
    return meet(l, BaryLine::infinity());
}

bool is_parallel(const BaryLine &l1, const BaryLine &l2) {
    if (l1.is_infinity() || l2.is_infinity()) {
        throw Error(ErrorKind::InfiniteLineArgument, "parallelism is defined for ordinary lines");
    }
    if (l1 == l2) return true;
    return meet(l1, l2).is_infinite();
}

bool collinear(std::span<const BaryPoint> points) {
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (points[i] == points[j]) continue;
            const BaryLine l = join(points[i], points[j]);
            for (const auto &p : points) {
                if (!l.contains(p)) return false;
            }
            return true;
        }
    }
    return true;
}

bool collinear(const BaryPoint &a, const BaryPoint &b, const BaryPoint &c) {
    return dot(a.coords(), cross(b.coords(), c.coords())).is_zero();
}

Triple displacement(const BaryPoint &from, const BaryPoint &to) { return to.normalized() - from.normalized(); }

FieldElement vector_ratio(const Triple &u, const Triple &v) {
    for (std::size_t i = 0; i < 3; ++i) {
        if (v[i].is_zero()) continue;
        const FieldElement t = u[i] / v[i];
        if (!(u == t * v)) throw Error(ErrorKind::NotCollinear, "vectors are not parallel");
        return t;
    }
    throw Error(ErrorKind::CoincidentBase, "zero reference vector");
}

FieldElement signed_ratio(const BaryPoint &x, const BaryPoint &y, const BaryPoint &z) {
    if (x == z) throw Error(ErrorKind::CoincidentBase, "ratio base points coincide at " + x.to_string());
    return vector_ratio(displacement(x, y), displacement(x, z));
}

bool between(const BaryPoint &x, const BaryPoint &y, const BaryPoint &z) {
    const FieldElement t = signed_ratio(x, y, z);
    return t.sign() > 0 && (FieldElement(1) - t).sign() > 0;
}

BaryPoint affine_combination(std::span<const std::pair<BaryPoint, FieldElement>> terms) {
    Triple sum{};
    FieldElement weight_total;
    for (const auto &[point, weight] : terms) {
        sum = sum + weight * point.normalized();
        weight_total += weight;
    }
    if (!weight_total.is_one()) throw Error(ErrorKind::WeightsSumNotOne, "weights sum to " + weight_total.to_string());
    return BaryPoint(sum);
}

BaryPoint midpoint(const BaryPoint &a, const BaryPoint &b) {
    const FieldElement half = FieldElement::fraction(1, 2);
    const std::pair<BaryPoint, FieldElement> terms[] = {{a, half}, {b, half}};
    return affine_combination(terms);
}

BaryPoint reflect_in_point(const BaryPoint &x, const BaryPoint &m) {
    const std::pair<BaryPoint, FieldElement> terms[] = {{m, FieldElement(2)}, {x, FieldElement(-1)}};
    return affine_combination(terms);
}

BaryPoint centroid(const BaryPoint &a, const BaryPoint &b, const BaryPoint &c) {
    const FieldElement third = FieldElement::fraction(1, 3);
    const std::pair<BaryPoint, FieldElement> terms[] = {{a, third}, {b, third}, {c, third}};
    return affine_combination(terms);
}

BaryPoint translate(const BaryPoint &x, const Triple &v) { return BaryPoint(x.normalized() + v); }

} // namespace cevian
