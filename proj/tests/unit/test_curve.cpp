#include "cevian/configuration.hpp"
#include "cevian/curve.hpp"
#include "cevian/error.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>

using namespace cevian;

namespace {

const FieldElement kR2 = FieldElement::root_of(2), kR3 = FieldElement::root_of(3);

bool in(const std::vector<WPoint> &set, const WPoint &p) { return std::find(set.begin(), set.end(), p) != set.end(); }

// Pool of points over Q(sqrt 2) or Q(sqrt 3): multiples of P~ and the torsion.
std::vector<WPoint> pool() {
    std::vector<WPoint> out = torsion12();
    for (int k = -3; k <= 3; ++k) {
        if (k != 0) out.push_back(w_multiple(k, p_tilde()));
    }
    return out;
}

FieldElement curve_rhs(const FieldElement &u) { return u * u * u + FieldElement(6) * u * u - FieldElement(3) * u; }

} // namespace

namespace cevian {
void PrintTo(const WPoint &p, std::ostream *os) { *os << p.to_string(); }
void PrintTo(const NFPoint &p, std::ostream *os) { *os << "(" << p.x << ", " << p.y << ")"; }
} // namespace cevian

TEST(Cubic, MembershipExamples) {
    const FieldElement one(1);
    EXPECT_TRUE(es_contains(BaryPoint(one, one + kR2, one - kR2)));
    EXPECT_TRUE(es_contains(BaryPoint(one, kR3 - FieldElement(2), kR3 - FieldElement(2))));
    EXPECT_FALSE(es_contains(BaryPoint(6, 3, 2)));
    EXPECT_EQ(es_cubic(Triple{FieldElement(6), FieldElement(3), FieldElement(2)}), FieldElement(504));
    for (const auto &v : {ref::A(), ref::B(), ref::C(), BaryPoint(0, 1, -1)}) EXPECT_TRUE(es_contains(v));
}

TEST(Cubic, ChainExamples) {
    const NFPoint nf{FieldElement::fraction(1, 3), (FieldElement(1) + kR2) / FieldElement(3)};
    EXPECT_TRUE(nf_contains(nf));
    EXPECT_EQ(nf_to_w(nf), p_tilde());
    EXPECT_EQ(bary_to_nf(BaryPoint(FieldElement(1), FieldElement(1) + kR2, FieldElement(1) - kR2)), nf);
    // u = (3x+1)/(1-x) sends x = 1 + 2 sqrt3/3 to -3 - 2 sqrt3.
    for (const int s : {1, -1}) {
        const NFPoint m{FieldElement(1) + FieldElement(2 * s) * kR3 / FieldElement(3),
                        FieldElement(-s) * kR3 / FieldElement(3)};
        EXPECT_TRUE(nf_contains(m));
        EXPECT_EQ(nf_to_w(m), WPoint(FieldElement(-3) - FieldElement(2 * s) * kR3, FieldElement(0)));
    }
    EXPECT_THROW((void)nf_to_w(NFPoint{FieldElement(1), FieldElement(0)}), Error);
    EXPECT_THROW((void)w_to_quartic(WPoint::infinity()), Error);
}

TEST(Cubic, QuarticModelIdentity) {
    // Multiplying the normal form by 4(3x+1) and completing the square.
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> n(-30, 30), d(1, 9);
    for (int i = 0; i < 50; ++i) {
        const FieldElement x(Rational(n(rng), d(rng))), y(Rational(n(rng), d(rng)));
        const FieldElement a = FieldElement(3) * x + FieldElement(1);
        const FieldElement nf = a * y * y + a * (x - FieldElement(1)) * y + x * x - x;
        const QuarticPoint q = nf_to_quartic(NFPoint{x, y});
        const FieldElement residual =
            q.Y * q.Y - (x - FieldElement(1)) * a * (FieldElement(3) * x * x - FieldElement(6) * x - FieldElement(1));
        EXPECT_EQ(residual, FieldElement(4) * a * nf);
    }
}

TEST(Cubic, DiscriminantIdentity) {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> n(-50, 50), d(1, 20);
    for (int i = 0; i < 20; ++i) {
        const FieldElement x(Rational(n(rng), d(rng)));
        const FieldElement a = FieldElement(3) * x + FieldElement(1), b = a * (x - FieldElement(1)), c = x * x - x;
        EXPECT_EQ(nf_y_discriminant(x), b * b - FieldElement(4) * a * c);
        EXPECT_EQ(nf_y_discriminant(x), nf_discriminant_closed(x));
    }
}

TEST(Cubic, SampleRoundTrips) {
    const auto pts = es_sample(50, 11);
    ASSERT_EQ(pts.size(), 50u);
    for (const auto &p : pts) {
        EXPECT_TRUE(es_contains(p));
        EXPECT_TRUE(is_valid(p, true));
        const NFPoint nf = bary_to_nf(p);
        EXPECT_TRUE(nf_contains(nf));
        EXPECT_TRUE(quartic_contains(nf_to_quartic(nf)));
        const WPoint w = nf_to_w(nf);
        EXPECT_TRUE(w_contains(w));
        EXPECT_EQ(w_to_nf(w), nf);
        EXPECT_EQ(nf_to_bary(nf), p);
        EXPECT_EQ(bary_to_w(p), w);
        EXPECT_EQ(w_to_bary(w), p);
        EXPECT_EQ(classify_M(p).kind, MClassification::Kind::translation);
    }
    EXPECT_EQ(es_sample(50, 11), pts);
}

TEST(Cubic, SampleStartsFromCanonicalPoints) {
    const FieldElement one(1);
    EXPECT_EQ(w_to_bary(p_tilde()), BaryPoint(one, one + kR2, one - kR2));
    const WPoint two = w_double(p_tilde());
    const NFPoint nf = w_to_nf(two);
    EXPECT_EQ(nf.x, FieldElement::fraction(-1, 7));
    EXPECT_TRUE(nf_contains(nf));
}

TEST(Cubic, TangentLine) {
    const FieldElement one(1);
    const BaryPoint p(one, one + kR2, one - kR2);
    const BaryLine t = es_tangent_at(p);
    EXPECT_TRUE(t.contains(p));
    // Gradient of the cubic at A is (0, 1, 1), the line through A parallel BC.
    EXPECT_EQ(es_tangent_at(ref::A()), BaryLine(0, 1, 1));
    EXPECT_THROW((void)es_tangent_at(BaryPoint(6, 3, 2)), Error);
}

TEST(GroupLaw, Examples) {
    EXPECT_EQ(w_double(p_tilde()), WPoint(FieldElement::fraction(1, 2), kR2 / FieldElement(4)));
    EXPECT_EQ(w_multiple(4, p_tilde()),
              WPoint(FieldElement::fraction(169, 8), FieldElement::fraction(-2483, 32) * kR2));
    EXPECT_EQ(w_add(WPoint(1, 2), WPoint(-3, 6)), WPoint(-3, -6));
    EXPECT_EQ(*w_order(WPoint(0, 0)), 2);
    EXPECT_EQ(*w_order(WPoint(1, 2)), 3);
    EXPECT_EQ(*w_order(WPoint(-3, 6)), 6);
    EXPECT_THROW((void)w_add(WPoint(1, 1), WPoint(0, 0)), Error);
}

TEST(GroupLaw, ChordCollinearity) {
    std::mt19937 rng(19);
    const auto pts = pool();
    std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
    int checked = 0;
    for (int i = 0; i < 300 && checked < 100; ++i) {
        const WPoint &p = pts[pick(rng)], &q = pts[pick(rng)];
        if (p.is_infinity() || q.is_infinity() || p == q) continue;
        const WPoint s = w_add(p, q);
        if (s.is_infinity()) {
            EXPECT_EQ(p.u(), q.u());
            continue;
        }
        if (p.u() == q.u()) continue;
        // The third intersection (s.u, -s.v) lies on the chord through p and q.
        const FieldElement slope = (q.v() - p.v()) / (q.u() - p.u());
        EXPECT_EQ(-s.v(), p.v() + slope * (s.u() - p.u()));
        EXPECT_EQ(s.v() * s.v(), curve_rhs(s.u()));
        ++checked;
    }
    EXPECT_GE(checked, 50);
}

TEST(GroupLaw, AxiomsProperty) {
    std::mt19937 rng(2024);
    const auto pts = pool();
    std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
    const WPoint o = WPoint::infinity();
    for (int i = 0; i < 200; ++i) {
        const WPoint &a = pts[pick(rng)], &b = pts[pick(rng)], &c = pts[pick(rng)];
        EXPECT_EQ(w_add(a, o), a);
        EXPECT_EQ(w_add(a, w_neg(a)), o);
        EXPECT_EQ(w_add(a, b), w_add(b, a));
        try {
            EXPECT_EQ(w_add(w_add(a, b), c), w_add(a, w_add(b, c)));
        } catch (const Error &e) {
            // Points over Q(sqrt 2) and Q(sqrt 3) combined can leave depth 2.
            EXPECT_EQ(e.kind(), ErrorKind::TowerMismatch);
        }
    }
}

TEST(Torsion, OrderCensus) {
    const auto t = torsion12();
    ASSERT_EQ(t.size(), 12u);
    std::map<int, int> census;
    for (const auto &p : t) {
        EXPECT_TRUE(w_contains(p));
        ++census[*w_order(p)];
        for (const auto &q : t) EXPECT_TRUE(in(t, w_add(p, q)));
    }
    EXPECT_EQ(census, (std::map<int, int>{{1, 1}, {2, 3}, {3, 2}, {6, 6}}));
    for (const auto &p : rational_torsion()) EXPECT_TRUE(in(t, p));
    EXPECT_EQ(rational_torsion().size(), 6u);
}

TEST(Torsion, PullbacksOfRationalTorsion) {
    std::vector<BaryPoint> got;
    for (const auto &p : rational_torsion()) got.push_back(w_to_bary(p));
    const std::vector<BaryPoint> want{ref::A(), ref::B(), ref::C(), BaryPoint(0, 1, -1), BaryPoint(1, 0, -1),
                                      BaryPoint(1, -1, 0)};
    for (const auto &p : want) EXPECT_NE(std::find(got.begin(), got.end(), p), got.end()) << p.to_string();
    EXPECT_TRUE(w_to_bary(WPoint::infinity()) == ref::A());
    EXPECT_EQ(bary_to_w(BaryPoint(0, 1, -1)), WPoint(0, 0));
}

TEST(Torsion, PullbacksOfMedianPoints) {
    const auto t = torsion12(), r = rational_torsion();
    std::vector<BaryPoint> want;
    for (const int s : {1, -1}) {
        const FieldElement c = FieldElement(-2) + FieldElement(s) * kR3;
        want.emplace_back(c, FieldElement(1), FieldElement(1));
        want.emplace_back(FieldElement(1), c, FieldElement(1));
        want.emplace_back(FieldElement(1), FieldElement(1), c);
    }
    for (const auto &p : t) {
        if (in(r, p)) continue;
        const BaryPoint b = w_to_bary(p);
        EXPECT_TRUE(es_contains(b));
        EXPECT_TRUE(on_median(b));
        EXPECT_NE(std::find(want.begin(), want.end(), b), want.end()) << b.to_string();
    }
}

TEST(Torsion, PTildeNotTorsion) {
    const auto t = torsion12();
    for (int n = 1; n <= 24; ++n) EXPECT_FALSE(in(t, w_multiple(n, p_tilde()))) << n;
    EXPECT_FALSE(w_order(p_tilde(), 24).has_value());
    EXPECT_EQ(w_multiple(-3, p_tilde()), w_neg(w_multiple(3, p_tilde())));
    EXPECT_EQ(w_multiple(0, p_tilde()), WPoint::infinity());
}

TEST(Invariants, Values) {
    const CurveInvariants c = es_invariants();
    EXPECT_EQ(c.b2, 24);
    EXPECT_EQ(c.b4, -6);
    EXPECT_EQ(c.c4, 720);
    EXPECT_EQ(c.c6, -19008);
    EXPECT_EQ(c.discriminant, 6912);
    EXPECT_EQ(c.j, 54000);
    EXPECT_EQ(j_invariant(), 54000);
    // 16 times the discriminant of u^3 + b u^2 + c u with b = 6, c = -3.
    const Rational b = 6, cc = -3;
    EXPECT_EQ(c.discriminant, 16 * (b * b * cc * cc - 4 * cc * cc * cc));
    EXPECT_EQ(c.j, c.c4 * c.c4 * c.c4 / c.discriminant);
}

TEST(CurveEa, Parameters) {
    for (const int a : {3, 0, -1, 9}) EXPECT_THROW(CurveEa{FieldElement(a)}, Error);
    for (const int a : {1, 2, 5, -3}) {
        const CurveEa c{FieldElement(a)};
        EXPECT_TRUE(ea_contains(c, FieldElement(0), FieldElement(0)));
        EXPECT_EQ(c.homothety_ratio(), FieldElement(4) / FieldElement(a + 1));
    }
    // a = 1, x = 2: 3y^2 + 3y + 2 = 0 has discriminant 9 - 24.
    const CurveEa one{FieldElement(1)};
    for (const auto &p : ea_sample(one, 10, 4)) EXPECT_NE(p.x, FieldElement(2));
}

TEST(CurveEa, HomothetyRatio) {
    for (const int a : {2, 5, -3}) {
        const CurveEa c{FieldElement(a)};
        const auto pts = ea_sample(c, 5, 1);
        ASSERT_EQ(pts.size(), 5u);
        for (const auto &p : pts) {
            EXPECT_TRUE(ea_contains(c, p.x, p.y));
            const BaryPoint b(p.x, p.y, FieldElement(1) - p.x - p.y);
            const MClassification m = classify_M(b);
            ASSERT_EQ(m.kind, MClassification::Kind::homothety);
            EXPECT_EQ(*m.k, FieldElement(4) / FieldElement(a + 1));
        }
    }
}
