#include "cevian/error.hpp"
#include "cevian/locus.hpp"

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

const FieldElement kR2 = FieldElement::root_of(2);
const BaryPoint D0(0, 1, 1), E0(1, 0, 1), F0(1, 1, 0);

BaryPoint lg_point(int s) {
    const FieldElement one(1);
    return {one, one + FieldElement(s) * kR2, one - FieldElement(s) * kR2};
}

FieldElement random_parameter(std::mt19937 &rng) {
    std::uniform_int_distribution<int> n(-40, 40), d(1, 9);
    for (;;) {
        const Rational t(n(rng), d(rng));
        const FieldElement f(t);
        if (!f.is_zero() && f != FieldElement(1) && f != FieldElement(-1)) return f;
    }
}

std::string failures(const Report &r) {
    std::string out;
    for (const auto &c : r.checks) {
        if (!c.passed) out += c.name + ": " + c.detail + "\n";
    }
    return out;
}

bool contains(const std::vector<BaryPoint> &v, const BaryPoint &p) { return std::find(v.begin(), v.end(), p) != v.end(); }

} // namespace

TEST(VertexLocus, ConicsAndExclusions) {
    const VertexLocus a = vertex_locus(Vertex::A);
    const FieldElement h = FieldElement::fraction(1, 2);
    EXPECT_EQ(a.conic, Conic::from_upper({FieldElement(-1), h, h, FieldElement(0), h, FieldElement(0)}));
    const std::vector<BaryPoint> ex(a.excluded.begin(), a.excluded.end());
    for (const auto &p : {ref::B(), ref::C(), E0, F0}) EXPECT_TRUE(contains(ex, p));
    for (const Vertex v : {Vertex::A, Vertex::B, Vertex::C}) {
        const VertexLocus l = vertex_locus(v);
        for (const auto &p : l.excluded) EXPECT_TRUE(l.conic.contains(p));
    }
    const Conic b = vertex_locus(Vertex::B).conic;
    for (const auto &p : {ref::A(), ref::C(), D0, F0}) EXPECT_TRUE(b.contains(p));
}

TEST(VertexLocus, Parametrization) {
    EXPECT_EQ(locus_param(Vertex::A, FieldElement::fraction(1, 3)), BaryPoint(6, 3, 2));
    for (const int t : {-1, 0, 1}) {
        EXPECT_EQ(kind_of([t] { (void)locus_param(Vertex::A, FieldElement(t)); }), ErrorKind::ExcludedParameter);
    }
    std::mt19937 rng(61);
    for (const Vertex v : {Vertex::A, Vertex::B, Vertex::C}) {
        const VertexLocus l = vertex_locus(v);
        for (int i = 0; i < 20; ++i) {
            const BaryPoint p = locus_param(v, random_parameter(rng));
            EXPECT_TRUE(l.conic.contains(p));
            if (!is_valid(p)) continue;
            EXPECT_EQ(derive_configuration(p).H, vertex_point(v)) << p.to_string();
            EXPECT_EQ(vertex_orthocenter_check(p), v);
        }
    }
}

TEST(VertexLocus, OrthocenterCheck) {
    EXPECT_EQ(vertex_orthocenter_check(BaryPoint(6, 3, 2)), Vertex::A);
    EXPECT_EQ(vertex_orthocenter_check(lg_point(-1)), Vertex::A);
    EXPECT_FALSE(vertex_orthocenter_check(ref::G()).has_value());
    std::mt19937 rng(67);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int i = 0; i < 100; ++i) {
        const BaryPoint p(d(rng), d(rng), d(rng));
        if (!is_valid(p) || (p[0] * p[1] + p[1] * p[2] + p[2] * p[0]).is_zero()) continue;
        const auto v = vertex_orthocenter_check(p);
        for (const Vertex w : {Vertex::A, Vertex::B, Vertex::C}) {
            EXPECT_EQ(v == w, vertex_locus(w).conic.contains(p)) << p.to_string();
        }
    }
}

TEST(VertexLocus, Tangents) {
    const Conic a = vertex_locus(Vertex::A).conic;
    const AffineMap k_inv = AffineMap::anticomplement();
    EXPECT_EQ(tangent_at(a, ref::B()), k_inv(join(ref::A(), ref::C())));
    EXPECT_EQ(tangent_at(a, ref::C()), k_inv(join(ref::A(), ref::B())));
}

TEST(VertexLocus, InsideSteinerEllipse) {
    std::mt19937 rng(71);
    const Conic s = steiner_circumellipse();
    for (int i = 0; i < 20; ++i) EXPECT_TRUE(is_interior(s, locus_param(Vertex::A, random_parameter(rng))));
}

TEST(VertexLocus, TraceRatioBound) {
    std::mt19937 rng(73);
    for (int i = 0; i < 20; ++i) {
        const BaryPoint p = locus_param(Vertex::A, random_parameter(rng));
        if (!is_valid(p)) continue;
        const FieldElement r = median_trace_ratio(p);
        EXPECT_EQ((FieldElement(2) - r * r).sign(), 1) << p.to_string();
    }
    for (const int s : {1, -1}) {
        const FieldElement r = median_trace_ratio(lg_point(s));
        EXPECT_EQ(r * r, FieldElement(2));
    }
}

TEST(Lemma21, Examples) {
    const Lemma21 on = lemma21_check(BaryPoint(6, 3, 2));
    EXPECT_TRUE(on.a && on.b && on.c && on.d);
    const Lemma21 off = lemma21_check(BaryPoint(1, 2, 3));
    EXPECT_FALSE(off.a || off.b || off.c || off.d);
    EXPECT_THROW((void)lemma21_check(E0), Error);
}

TEST(Lemma21, EquivalenceProperty) {
    std::mt19937 rng(79);
    std::uniform_int_distribution<int> d(-9, 9);
    int on = 0, off = 0;
    for (int i = 0; i < 60; ++i) {
        const BaryPoint p = i % 2 == 0 ? locus_param(Vertex::A, random_parameter(rng)) : BaryPoint(d(rng), d(rng), d(rng));
        if (!is_valid(p) || (p[0] * p[1] + p[1] * p[2] + p[2] * p[0]).is_zero()) continue;
        const Lemma21 r = lemma21_check(p);
        EXPECT_TRUE(r.all_equal()) << p.to_string();
        (r.a ? on : off)++;
    }
    EXPECT_GE(on, 10);
    EXPECT_GE(off, 10);
}

TEST(SpecialConfig, BothVariants) {
    for (const Variant v : {Variant::plus, Variant::minus}) {
        const SpecialConfig s = special_config(v);
        EXPECT_TRUE(s.checks.all_passed()) << failures(s.checks);
        EXPECT_EQ(s.config.H, ref::A());
        EXPECT_EQ(s.config.O, D0);
        // P and P' lie on opposite sides of O with d(O,P') = 3 d(O,P).
        EXPECT_EQ(signed_ratio(s.config.O, s.config.P, s.config.P_prime), FieldElement::fraction(-1, 3));
    }
    EXPECT_EQ(special_config(Variant::plus).config.P, lg_point(1));
    EXPECT_EQ(special_config(Variant::plus).config.circumconic_O, special_config(Variant::minus).config.circumconic_O);
}

TEST(SpecialConfig, EquilateralEmbedding) {
    const Report r = equilateral_embedding_check();
    EXPECT_TRUE(r.all_passed()) << failures(r);
}

TEST(CurveLocus, Intersection) {
    const auto pts = es_locus_intersection(Vertex::A);
    int simple = 0, doubled = 0;
    for (const auto &c : pts) {
        EXPECT_TRUE(es_contains(c.point));
        EXPECT_TRUE(vertex_locus(Vertex::A).conic.contains(c.point));
        if (c.multiplicity == 2) {
            ++doubled;
            EXPECT_TRUE(c.point == ref::B() || c.point == ref::C());
            EXPECT_EQ(es_tangent_at(c.point), tangent_at(vertex_locus(Vertex::A).conic, c.point));
        } else {
            ++simple;
            EXPECT_TRUE(c.point == lg_point(1) || c.point == lg_point(-1));
        }
    }
    EXPECT_EQ(simple, 2);
    EXPECT_EQ(doubled, 2);
}

TEST(Section4, CanonicalConfiguration) {
    const Section4Config cfg = canonical_section4_config();
    EXPECT_EQ(cfg.H, ref::A());
    EXPECT_EQ(cfg.O, D0);
    EXPECT_EQ(classify_affine_type(cfg.C), AffineType::hyperbola);
    EXPECT_EQ(projectivity_pi(cfg, cfg.U), cfg.Z);
    EXPECT_EQ(projectivity_pi(cfg, cfg.Z), cfg.V);
    EXPECT_EQ(projectivity_pi(cfg, cfg.V), cfg.U);
    const std::vector<std::pair<BaryPoint, FieldElement>> weights{{cfg.G, FieldElement(3)}, {cfg.V, FieldElement(-2)}};
    const BaryPoint y = affine_combination(weights);
    EXPECT_EQ(projectivity_pi(cfg, projectivity_pi(cfg, projectivity_pi(cfg, y))), y);
    EXPECT_EQ(midpoint(cfg.E, cfg.F), cfg.G);
    const auto asym = asymptotes(cfg.C);
    const BaryLine ze = join(cfg.Z, cfg.E_prime), zf = join(cfg.Z, cfg.F_prime);
    EXPECT_TRUE((asym[0] == ze && asym[1] == zf) || (asym[0] == zf && asym[1] == ze));
    const Report r = section4_structure_checks(cfg);
    EXPECT_TRUE(r.all_passed()) << failures(r);
    EXPECT_EQ(kind_of([] { (void)section4_config_from(BaryPoint(6, 3, 2)); }), ErrorKind::NotTranslation);
}

TEST(Section4, InscribedTriangles) {
    const Section4Config cfg = canonical_section4_config();
    const InscribedTriangle t = inscribed_triangle(cfg, ref::A());
    ASSERT_EQ(t.status, InscribedTriangle::Status::ok);
    EXPECT_TRUE((*t.B1 == ref::B() && *t.C1 == ref::C()) || (*t.B1 == ref::C() && *t.C1 == ref::B()));
    EXPECT_EQ(inscribed_triangle(cfg, cfg.Q).status, InscribedTriangle::Status::degenerate);
    EXPECT_EQ(inscribed_triangle(cfg, cfg.Q_prime).status, InscribedTriangle::Status::degenerate);
    EXPECT_EQ(inscribed_triangle(cfg, cfg.E).status, InscribedTriangle::Status::no_intersection);
    EXPECT_TRUE(admissible(cfg, ref::A()));
    EXPECT_FALSE(admissible(cfg, cfg.P_prime));
    EXPECT_FALSE(admissible(cfg, cfg.Q));
    EXPECT_EQ(kind_of([&] { (void)inscribed_triangle(cfg, ref::G()); }), ErrorKind::PointNotOnConic);
}

TEST(Section4, Reconstruction) {
    const Section4Config cfg = canonical_section4_config();
    EXPECT_EQ(reconstruct_P(cfg, ref::A(), 1), cfg.P);
    const BaryPoint swapped = reconstruct_P(cfg, ref::A(), 2);
    EXPECT_TRUE(es_contains(swapped));
    const auto torsion = torsion12();
    for (const auto &s : sample_admissible(cfg, 12, 5)) {
        EXPECT_TRUE(cfg.C.contains(s.A1));
        ASSERT_TRUE(admissible(cfg, s.A1));
        const InscribedTriangle t = inscribed_triangle(cfg, s.A1);
        ASSERT_EQ(t.status, InscribedTriangle::Status::ok);
        EXPECT_EQ(centroid(s.A1, *t.B1, *t.C1), cfg.G);
        for (const int orientation : {1, 2}) {
            const BaryPoint p = reconstruct_P(cfg, s.A1, orientation);
            EXPECT_TRUE(es_contains(p)) << p.to_string();
            EXPECT_EQ(classify_M(p).kind, MClassification::Kind::translation);
            EXPECT_EQ(std::find(torsion.begin(), torsion.end(), bary_to_w(p)), torsion.end());
        }
    }
    EXPECT_EQ(kind_of([&] { (void)reconstruct_P(cfg, cfg.Q, 1); }), ErrorKind::DegenerateConfiguration);
}
