#include "cevian/configuration.hpp"
#include "cevian/error.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>

using namespace cevian;

namespace {

ErrorKind kind_of(const std::function<void()> &fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::IOError;
}

BaryPoint random_valid(std::mt19937 &rng, bool off_medians) {
    std::uniform_int_distribution<int> d(-9, 9);
    for (;;) {
        const BaryPoint p(d(rng), d(rng), d(rng));
        if (is_valid(p, off_medians) && !(p[0] * p[1] + p[1] * p[2] + p[2] * p[0]).is_zero()) return p;
    }
}

BaryPoint special_point() {
    const FieldElement r2 = FieldElement::root_of(2), one(1);
    return {one, one + r2, one - r2};
}

// xy + xz + yz - x^2
Conic locus_a() {
    const FieldElement h = FieldElement::fraction(1, 2);
    return Conic::from_upper({FieldElement(-1), h, h, FieldElement(0), h, FieldElement(0)});
}

Conic steiner_inellipse() {
    return Conic::from_upper({FieldElement(1), FieldElement(-1), FieldElement(-1), FieldElement(1), FieldElement(-1),
                              FieldElement(1)});
}

bool same_points(std::vector<BaryPoint> a, std::vector<BaryPoint> b) {
    if (a.size() != b.size()) return false;
    return std::all_of(a.begin(), a.end(), [&](const BaryPoint &p) {
        return std::find(b.begin(), b.end(), p) != b.end();
    });
}

const BaryPoint D0(0, 1, 1), E0(1, 0, 1), F0(1, 1, 0);

} // namespace

TEST(Conic, ThroughFiveExamples) {
    const Conic c = conic_through_5(ref::A(), ref::B(), ref::C(), BaryPoint(6, 3, 2), BaryPoint(5, 4, 3));
    EXPECT_TRUE(c.contains(BaryPoint(1, 2, 3)));
    EXPECT_EQ(c, cevian_conic(BaryPoint(6, 3, 2)));
    EXPECT_EQ(conic_through_5(ref::B(), ref::C(), E0, F0, BaryPoint(6, 3, 2)), locus_a());
    EXPECT_EQ(kind_of([] {
                  (void)conic_through_5(ref::B(), ref::C(), D0, BaryPoint(0, 1, 2), ref::A());
              }),
              ErrorKind::DegenerateConfiguration);
}

TEST(Conic, ThroughFiveProperty) {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> d(-7, 7);
    int checked = 0;
    while (checked < 50) {
        std::array<BaryPoint, 5> pts{ref::A(), ref::A(), ref::A(), ref::A(), ref::A()};
        bool ok = true;
        for (auto &p : pts) {
            const Triple t{FieldElement(d(rng)), FieldElement(d(rng)), FieldElement(d(rng))};
            if (t[0].is_zero() && t[1].is_zero() && t[2].is_zero()) ok = false;
            else p = BaryPoint(t);
        }
        if (!ok) continue;
        try {
            const Conic c = conic_through_5(std::span<const BaryPoint, 5>(pts));
            for (const auto &p : pts) EXPECT_TRUE(c.contains(p));
            ++checked;
        } catch (const Error &e) {
            EXPECT_EQ(e.kind(), ErrorKind::DegenerateConfiguration);
        }
    }
}

TEST(Conic, PolarsAndCenters) {
    const Conic a = locus_a();
    EXPECT_EQ(conic_center(a), BaryPoint(1, 3, 3));
    EXPECT_EQ(signed_ratio(ref::A(), BaryPoint(1, 3, 3), D0), FieldElement::fraction(6, 7));
    EXPECT_EQ(polar(a, ref::A()), BaryLine(-2, 1, 1));
    const Conic s = steiner_circumellipse();
    EXPECT_EQ(tangent_at(s, ref::A()), BaryLine(0, 1, 1));
    EXPECT_EQ(conic_center(s), ref::G());
    EXPECT_EQ(s, circumconic_of_line(BaryLine::infinity()));
    EXPECT_EQ(kind_of([&] { (void)tangent_at(s, ref::G()); }), ErrorKind::PointNotOnConic);
}

TEST(Conic, PolarReciprocityProperty) {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> d(-9, 9);
    const std::vector<Conic> conics{locus_a(), steiner_circumellipse(), steiner_inellipse(),
                                    cevian_conic(special_point())};
    for (int i = 0; i < 100; ++i) {
        const Conic &c = conics[i % conics.size()];
        const BaryPoint p(d(rng), d(rng), d(rng) + 20), r(d(rng) + 20, d(rng), d(rng));
        EXPECT_EQ(pole(c, polar(c, p)), p);
        EXPECT_EQ(polar(c, r).contains(p), polar(c, p).contains(r));
        const BaryPoint inf(d(rng), d(rng) + 20, -(d(rng) + 20) - d(rng));
        if (inf.is_infinite()) {
            EXPECT_TRUE(polar(c, inf).contains(conic_center(c)));
        }
    }
}

TEST(Conic, LineIntersections) {
    const Conic a = locus_a();
    const FieldElement r2 = FieldElement::root_of(2), one(1);
    const auto lg = line_conic_intersect(a, BaryLine(-2, 1, 1));
    EXPECT_TRUE(same_points(lg.points, {BaryPoint(one, one + r2, one - r2), BaryPoint(one, one - r2, one + r2)}));
    EXPECT_TRUE(same_points(line_conic_intersect(a, BaryLine(1, 0, 0)).points, {ref::B(), ref::C()}));
    const BaryLine tangent_b = AffineMap::anticomplement()(BaryLine(0, 1, 0));
    EXPECT_EQ(tangent_at(a, ref::B()), tangent_b);
    const auto touch = line_conic_intersect(a, tangent_b);
    EXPECT_EQ(touch.discriminant_sign, 0);
    EXPECT_TRUE(same_points(touch.points, {ref::B()}));
    EXPECT_TRUE(same_points(line_conic_intersect(steiner_circumellipse(), BaryLine(0, 0, 1)).points,
                            {ref::A(), ref::B()}));
}

TEST(Conic, AdjoinNever) {
    const auto held = line_conic_intersect(locus_a(), BaryLine(-2, 1, 1), Adjoin::never);
    EXPECT_TRUE(held.points.empty());
    ASSERT_TRUE(held.extension.has_value());
    EXPECT_EQ(*held.extension, 2);
    EXPECT_EQ(held.discriminant_sign, 1);
    // y + z = -2x and yz = 2x^2 have no real solution.
    const auto none = line_conic_intersect(steiner_circumellipse(), BaryLine(2, 1, 1));
    EXPECT_TRUE(none.points.empty());
    EXPECT_EQ(none.discriminant_sign, -1);
}

TEST(Conic, LineIntersectionProperty) {
    std::mt19937 rng(29);
    std::uniform_int_distribution<int> d(-6, 6);
    const Conic c = steiner_circumellipse();
    for (int i = 0; i < 100; ++i) {
        const BaryLine l(d(rng), d(rng), d(rng) + 13);
        const auto res = line_conic_intersect(c, l);
        EXPECT_EQ(res.points.size(), static_cast<std::size_t>(res.discriminant_sign + 1));
        for (const auto &p : res.points) {
            EXPECT_TRUE(c.contains(p));
            EXPECT_TRUE(l.contains(p));
        }
        if (res.discriminant_sign == 0) {
            EXPECT_EQ(tangent_at(c, res.points[0]), l);
        }
    }
}

TEST(Conic, SharedInfinityIntersections) {
    const Conic s = steiner_circumellipse();
    const Conic reflected = s.image(AffineMap::point_reflection(D0));
    EXPECT_TRUE(same_points(conic_conic_intersect_shared_infinity(s, reflected), {ref::B(), ref::C()}));
    ASSERT_TRUE(radical_line(s, reflected).has_value());
    EXPECT_EQ(*radical_line(s, reflected), BaryLine(1, 0, 0));
    const Conic scaled = s.image(AffineMap::homothety(ref::A(), FieldElement(2)));
    EXPECT_TRUE(same_points(conic_conic_intersect_shared_infinity(s, scaled), {ref::A()}));
    const Conic inner = s.image(AffineMap::homothety(ref::G(), FieldElement::fraction(1, 2)));
    EXPECT_EQ(inner, steiner_inellipse());
    EXPECT_TRUE(conic_conic_intersect_shared_infinity(s, inner).empty());
    EXPECT_EQ(kind_of([&] { (void)radical_line(s, s); }), ErrorKind::IdenticalConics);
    EXPECT_EQ(kind_of([&] { (void)radical_line(s, locus_a()); }), ErrorKind::NotSharedInfinity);
}

TEST(Conic, AffineTypes) {
    EXPECT_EQ(classify_affine_type(steiner_inellipse()), AffineType::ellipse);
    EXPECT_EQ(classify_affine_type(locus_a()), AffineType::ellipse);
    const Conic cp = cevian_conic(special_point());
    EXPECT_EQ(classify_affine_type(cp), AffineType::hyperbola);
    // x^2 = 4yz meets l_inf in (y - z)^2 = 0.
    const Conic parabola = Conic::from_upper({FieldElement(1), FieldElement(0), FieldElement(0), FieldElement(0),
                                              FieldElement(-2), FieldElement(0)});
    EXPECT_EQ(classify_affine_type(parabola), AffineType::parabola);
    EXPECT_EQ(kind_of([] { (void)asymptotes(steiner_circumellipse()); }), ErrorKind::NotAHyperbola);
}

TEST(Conic, Asymptotes) {
    const Conic cp = cevian_conic(special_point());
    const auto inf = infinite_points(cp);
    ASSERT_EQ(inf.size(), 2u);
    const BaryPoint center = conic_center(cp);
    for (const BaryLine &l : asymptotes(cp)) {
        EXPECT_TRUE(l.contains(center));
        const BaryPoint at_inf = meet(l, BaryLine::infinity());
        EXPECT_TRUE(cp.contains(at_inf));
        EXPECT_EQ(tangent_at(cp, at_inf), l);
    }
}

TEST(Conic, InteriorSide) {
    const Conic s = steiner_circumellipse();
    EXPECT_TRUE(is_interior(s, ref::G()));
    EXPECT_FALSE(is_interior(s, ref::A()));
    EXPECT_EQ(side(s, ref::A()), 0);
    EXPECT_FALSE(is_interior(s, BaryPoint(-1, 1, 1)));
    EXPECT_EQ(side(s, BaryPoint(-1, 1, 1)), 1);
    EXPECT_TRUE(is_interior(locus_a(), BaryPoint(1, 3, 3)));
}

TEST(Conic, Inconic) {
    EXPECT_EQ(inconic(ref::G()), steiner_inellipse());
    EXPECT_EQ(conic_center(inconic(BaryPoint(6, 3, 2))), BaryPoint(5, 4, 3));
    const Conic i = inconic(BaryPoint(1, 2, 3));
    EXPECT_EQ(tangent_at(i, BaryPoint(1, 2, 0)), BaryLine(0, 0, 1));
    std::mt19937 rng(37);
    for (int n = 0; n < 40; ++n) {
        const BaryPoint p = random_valid(rng, false);
        const Conic c = inconic(p);
        const Traces t = cevian_traces(p);
        EXPECT_EQ(tangent_at(c, t.D), BaryLine(1, 0, 0));
        EXPECT_EQ(tangent_at(c, t.E), BaryLine(0, 1, 0));
        EXPECT_EQ(tangent_at(c, t.F), BaryLine(0, 0, 1));
        EXPECT_EQ(conic_center(c), isotom_complement(p));
    }
}

TEST(Conic, NinePointConic) {
    const Conic n = nine_point_conic(ref::G());
    for (const auto &p : {D0, E0, F0, midpoint(ref::A(), ref::G()), midpoint(ref::B(), ref::G()),
                          midpoint(ref::C(), ref::G())}) {
        EXPECT_TRUE(n.contains(p));
    }
    std::mt19937 rng(43);
    for (int i = 0; i < 40; ++i) {
        const Configuration c = derive_configuration(random_valid(rng, false));
        const Conic np = nine_point_conic(c.P_prime);
        for (const auto &v : {ref::A(), ref::B(), ref::C()}) EXPECT_TRUE(np.contains(midpoint(v, c.P_prime)));
        for (const auto &m : {D0, E0, F0}) EXPECT_TRUE(np.contains(m));
        EXPECT_EQ(conic_center(np), complement(c.Q));
        EXPECT_EQ(c.circumconic_O, np.image(c.T_P_prime.inverse()));
        EXPECT_EQ(c.circumconic_O.image(c.M), c.inconic);
        for (const auto &v : {ref::A(), ref::B(), ref::C()}) EXPECT_TRUE(c.circumconic_O.contains(v));
    }
}

TEST(Conic, CevianConicMembers) {
    std::mt19937 rng(47);
    for (int i = 0; i < 40; ++i) {
        const Configuration c = derive_configuration(random_valid(rng, true));
        ASSERT_TRUE(c.cevian_conic.has_value());
        const Conic &cp = *c.cevian_conic;
        for (const auto &p : {ref::A(), ref::B(), ref::C(), c.P, c.Q, c.P_prime, c.Q_prime, c.H}) {
            EXPECT_TRUE(cp.contains(p)) << c.P.to_string();
        }
    }
}

TEST(Conic, SpecialCircumconic) {
    const Configuration c = derive_configuration(special_point());
    const AffineMap k_inv = AffineMap::anticomplement();
    EXPECT_EQ(c.circumconic_O, circumconic_of_line(k_inv(k_inv(BaryLine(1, 0, 0)))));
    EXPECT_TRUE(c.circumconic_O.contains(c.P));
    EXPECT_EQ(tangent_at(*c.cevian_conic, c.Q), join(c.O, c.Q));
}

TEST(Conic, ImageMatchesImagesOfPoints) {
    std::mt19937 rng(53);
    std::uniform_int_distribution<int> d(-8, 8);
    const std::array<BaryPoint, 5> pts{ref::A(), ref::B(), ref::C(), BaryPoint(6, 3, 2), BaryPoint(5, 4, 3)};
    const Conic c = conic_through_5(std::span<const BaryPoint, 5>(pts));
    for (int i = 0; i < 40; ++i) {
        const BaryPoint a(d(rng), d(rng), 20), b(20, d(rng), d(rng)), e(d(rng), 20, d(rng));
        if (collinear(a, b, e)) continue;
        const AffineMap f = map_from_triangles({ref::A(), ref::B(), ref::C()}, {a, b, e});
        std::array<BaryPoint, 5> imgs = pts;
        for (auto &p : imgs) p = f(p);
        EXPECT_EQ(c.image(f), conic_through_5(std::span<const BaryPoint, 5>(imgs)));
    }
}
