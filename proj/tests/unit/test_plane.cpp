#include "cevian/error.hpp"
#include "cevian/plane.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <random>

using namespace cevian;

namespace {

BaryPoint random_point(std::mt19937 &rng) {
    std::uniform_int_distribution<int> d(-12, 12);
    for (;;) {
        const BaryPoint p(d(rng), d(rng), d(rng));
        if (p.is_ordinary()) return p;
    }
}

ErrorKind kind_of(const std::function<void()> &fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::IOError;
}

} // namespace

TEST(BaryPoint, CanonicalScaling) {
    EXPECT_EQ(BaryPoint(2, 4, 6), BaryPoint(1, 2, 3));
    EXPECT_EQ(BaryPoint(-3, 0, 3), BaryPoint(1, 0, -1));
    EXPECT_EQ(BaryPoint(0, -2, 4).to_string(), "[0,1,-2]");
    EXPECT_THROW(BaryPoint(0, 0, 0), Error);
}

TEST(Plane, JoinMeetExamples) {
    EXPECT_EQ(join(ref::G(), BaryPoint(0, 1, -1)), BaryLine(-2, 1, 1));
    EXPECT_EQ(meet(BaryLine::infinity(), BaryLine(1, 0, 0)), BaryPoint(0, 1, -1));
    EXPECT_EQ(join(ref::A(), ref::G()), BaryLine(0, 1, -1));
    EXPECT_EQ(kind_of([] { (void)join(ref::A(), ref::A()); }), ErrorKind::IdenticalArguments);
}

TEST(Plane, ParallelExamples) {
    EXPECT_TRUE(is_parallel(BaryLine(1, 0, 0), BaryLine(0, 1, 1)));
    EXPECT_FALSE(is_parallel(BaryLine(1, 0, 0), BaryLine(0, 1, 0)));
    EXPECT_TRUE(is_parallel(BaryLine(-2, 1, 1), BaryLine(1, 0, 0)));
    EXPECT_EQ(kind_of([] { (void)is_parallel(BaryLine::infinity(), BaryLine(1, 0, 0)); }),
              ErrorKind::InfiniteLineArgument);
}

TEST(Plane, RatiosAndCombinations) {
    const BaryPoint d0(0, 1, 1);
    EXPECT_EQ(signed_ratio(ref::A(), ref::G(), d0), FieldElement::fraction(2, 3));
    EXPECT_EQ(signed_ratio(ref::B(), midpoint(ref::B(), ref::C()), ref::C()), FieldElement::fraction(1, 2));
    EXPECT_EQ(midpoint(ref::B(), ref::C()), d0);
    EXPECT_EQ(reflect_in_point(ref::A(), d0), BaryPoint(-1, 1, 1));
    EXPECT_EQ(centroid(ref::A(), ref::B(), ref::C()), ref::G());
    EXPECT_EQ(kind_of([] { (void)signed_ratio(ref::A(), ref::B(), ref::C()); }), ErrorKind::NotCollinear);
    EXPECT_EQ(kind_of([] { (void)signed_ratio(ref::A(), ref::B(), ref::A()); }), ErrorKind::CoincidentBase);
    EXPECT_EQ(kind_of([] { (void)midpoint(ref::A(), BaryPoint(0, 1, -1)); }), ErrorKind::InfinitePointArgument);
    const std::vector<std::pair<BaryPoint, FieldElement>> bad{{ref::A(), 1}, {ref::B(), 1}};
    EXPECT_EQ(kind_of([&] { (void)affine_combination(bad); }), ErrorKind::WeightsSumNotOne);
    const FieldElement r2 = FieldElement::root_of(2), one(1);
    EXPECT_EQ(signed_ratio(d0, BaryPoint(0, one - r2, one + r2), ref::C()).sign(), 1);
}

TEST(Plane, Between) {
    EXPECT_TRUE(between(ref::B(), BaryPoint(0, 1, 1), ref::C()));
    EXPECT_FALSE(between(ref::B(), BaryPoint(0, -1, 3), ref::C()));
}

TEST(Plane, IncidenceProperties) {
    std::mt19937 rng(2718);
    for (int i = 0; i < 200; ++i) {
        const BaryPoint p = random_point(rng), q = random_point(rng), r = random_point(rng);
        if (p == q || q == r || p == r) continue;
        const BaryLine l = join(p, q);
        EXPECT_TRUE(l.contains(p));
        EXPECT_TRUE(l.contains(q));
        EXPECT_EQ(join(q, p), l);
        const BaryLine m = join(q, r);
        if (!(l == m)) {
            EXPECT_EQ(meet(l, m), q);
        }
        EXPECT_EQ(collinear(p, q, r), l.contains(r));
        const BaryPoint mid = midpoint(p, q);
        EXPECT_TRUE(l.contains(mid));
        EXPECT_EQ(signed_ratio(p, mid, q), FieldElement::fraction(1, 2));
        EXPECT_EQ(translate(p, displacement(p, q)), q);
        EXPECT_EQ(reflect_in_point(reflect_in_point(p, q), q), p);
        if (!l.contains(r)) {
            EXPECT_TRUE(is_parallel(l, join(r, translate(r, displacement(p, q)))));
        }
    }
}
