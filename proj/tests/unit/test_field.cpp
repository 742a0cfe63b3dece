#include "cevian/error.hpp"
#include "cevian/field.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace cevian;

namespace {

// Independent oracle: evaluate in 512-bit floating point from the coefficients.
mpf_class approx(const FieldElement &a) {
    mpf_class out(0, 512);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        mpf_class root(a.tower().basis_square(i), 512);
        root = sqrt(root);
        out += mpf_class(a.coeffs()[i], 512) * root;
    }
    return out;
}

FieldElement random_element(std::mt19937 &rng, const std::vector<FieldElement> &basis) {
    std::uniform_int_distribution<int> num(-40, 40), den(1, 12);
    FieldElement out;
    for (const auto &b : basis) out += FieldElement(Rational(num(rng), den(rng))) * b;
    return out;
}

std::vector<FieldElement> basis_2_3() {
    const FieldElement r2 = FieldElement::root_of(2), r3 = FieldElement::root_of(3);
    return {FieldElement(1), r2, r3, r2 * r3};
}

} // namespace

TEST(Tower, CanonicalRadicands) {
    EXPECT_EQ(Tower({6, 2}), Tower({2, 3}));
    EXPECT_EQ(Tower({15, 3}), Tower({3, 5}));
    EXPECT_EQ(Tower({2}).with_root(3), Tower({6, 2}));
    EXPECT_THROW(Tower({8}), Error);
    EXPECT_TRUE(Tower({2, 3}).contains_root(6));
    EXPECT_FALSE(Tower({2}).contains_root(3));
    EXPECT_THROW(Tower({2, 3}).with_root(5), Error);
}

TEST(Tower, SquarefreeSplit) {
    const SquarefreeSplit s = squarefree_split(Integer(72));
    EXPECT_EQ(s.radicand, 2);
    EXPECT_EQ(s.square, 6);
}

TEST(FieldElement, Examples) {
    const FieldElement r2 = FieldElement::root_of(2), r3 = FieldElement::root_of(3);
    EXPECT_EQ(r2 * r3, FieldElement::root_of(6));
    EXPECT_EQ(r2 * r2, FieldElement(2));
    EXPECT_EQ((FieldElement(1) + r2).inverse(), r2 - FieldElement(1));
    EXPECT_EQ(FieldElement::root_of(8), FieldElement(2) * r2);
    EXPECT_EQ(FieldElement::root_of(9), FieldElement(3));
    EXPECT_EQ(FieldElement::fraction(6, -4), FieldElement::fraction(-3, 2));
    EXPECT_EQ((FieldElement::fraction(3, 2) - FieldElement::fraction(1, 2) * FieldElement::root_of(6)).to_string(),
              "3/2-1/2*sqrt(6)");
    EXPECT_TRUE((r2 - r2).is_rational());
}

TEST(FieldElement, Errors) {
    EXPECT_THROW(FieldElement(0).inverse(), Error);
    EXPECT_THROW(FieldElement::root_of(-2), Error);
    const FieldElement r2 = FieldElement::root_of(2), r3 = FieldElement::root_of(3), r5 = FieldElement::root_of(5);
    try {
        (void)((r2 + r3) * r5);
        FAIL() << "third radicand accepted";
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::TowerMismatch);
    }
}

TEST(FieldElement, SignMatchesHighPrecision) {
    std::mt19937 rng(20240611);
    const auto basis = basis_2_3();
    for (int i = 0; i < 1000; ++i) {
        const FieldElement a = random_element(rng, basis);
        EXPECT_EQ(a.sign(), sgn(approx(a))) << a;
    }
}

TEST(FieldElement, SignNearCancellation) {
    // 665857/470832 is a convergent of sqrt 2.
    const FieldElement r2 = FieldElement::root_of(2), r3 = FieldElement::root_of(3);
    const FieldElement close = FieldElement(Rational(665857, 470832)) - r2;
    EXPECT_EQ(close.sign(), 1);
    EXPECT_EQ((-close).sign(), -1);
    const FieldElement gap = r3 - r2;
    const FieldElement mixed = gap * gap - (FieldElement(5) - FieldElement(2) * r2 * r3);
    EXPECT_TRUE(mixed.is_zero());
    const FieldElement small = gap * gap * gap * gap - FieldElement(Rational(1, 98));
    EXPECT_EQ(small.sign(), sgn(approx(small)));
}

TEST(FieldElement, FieldAxiomsProperty) {
    std::mt19937 rng(7);
    const auto basis = basis_2_3();
    for (int i = 0; i < 200; ++i) {
        const FieldElement a = random_element(rng, basis), b = random_element(rng, basis),
                           c = random_element(rng, basis);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        if (!a.is_zero()) {
            EXPECT_EQ(a * a.inverse(), FieldElement(1));
            EXPECT_EQ((b / a) * a, b);
        }
        EXPECT_EQ(a - a, FieldElement(0));
    }
}

TEST(FieldElement, ArithmeticMatchesHighPrecision) {
    std::mt19937 rng(99);
    const auto basis = basis_2_3();
    const mpf_class eps("1e-100", 512);
    for (int i = 0; i < 200; ++i) {
        const FieldElement a = random_element(rng, basis), b = random_element(rng, basis);
        mpf_class d = approx(a * b) - approx(a) * approx(b);
        EXPECT_LT(abs(d), eps);
        if (!b.is_zero()) {
            d = approx(a / b) - approx(a) / approx(b);
            EXPECT_LT(abs(d), eps);
        }
    }
}

TEST(FieldElement, SqrtOfSquares) {
    std::mt19937 rng(3);
    const FieldElement r2 = FieldElement::root_of(2);
    for (int i = 0; i < 100; ++i) {
        const FieldElement a = random_element(rng, {FieldElement(1), r2});
        const auto root = fe_sqrt(a * a, Tower({2}));
        ASSERT_TRUE(std::holds_alternative<FieldElement>(root)) << a;
        EXPECT_EQ(std::get<FieldElement>(root), a.abs());
    }
    const auto s = fe_sqrt(FieldElement(3) + FieldElement(2) * r2);
    ASSERT_TRUE(std::holds_alternative<FieldElement>(s));
    EXPECT_EQ(std::get<FieldElement>(s), FieldElement(1) + r2);
}

TEST(FieldElement, SqrtMissingRoot) {
    const auto s = fe_sqrt(FieldElement(12));
    ASSERT_TRUE(std::holds_alternative<NotASquare>(s));
    EXPECT_EQ(std::get<NotASquare>(s).radicand, 3);
    EXPECT_EQ(sqrt_adjoin(FieldElement(12)), FieldElement(2) * FieldElement::root_of(3));
    EXPECT_THROW(sqrt_adjoin(FieldElement(-1)), Error);
}

TEST(FieldElement, SqrtAdjoinSquaresBack) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> num(1, 60), den(1, 9);
    for (int i = 0; i < 100; ++i) {
        const FieldElement a(Rational(num(rng), den(rng)));
        const FieldElement r = sqrt_adjoin(a);
        EXPECT_EQ(r * r, a);
        EXPECT_EQ(r.sign(), 1);
    }
}

TEST(FieldElement, ToDouble) {
    EXPECT_DOUBLE_EQ(FieldElement::root_of(2).to_double(), std::sqrt(2.0));
    EXPECT_DOUBLE_EQ((FieldElement(1) - FieldElement::root_of(3)).to_double(), 1.0 - std::sqrt(3.0));
}

TEST(FieldElement, CoeffsInLargerTower) {
    const FieldElement r2 = FieldElement::root_of(2);
    const auto c = r2.coeffs_in(Tower({2, 3}));
    ASSERT_EQ(c.size(), 4u);
    EXPECT_EQ(c[0], 0);
    EXPECT_EQ(c[1], 1);
    EXPECT_EQ(c[2], 0);
    EXPECT_EQ(c[3], 0);
}
