#include "support.hpp"

#include "dendra/errors.hpp"

#include <gtest/gtest.h>

using namespace dendra;
using namespace dendra::testing;

namespace {

int parity_sign(std::size_t e) { return e % 2 == 0 ? 1 : -1; }

DendRepresentation adjoint_of(const DendriformAlgebra& a) { return DendRepresentation::adjoint(a); }

std::vector<DendriformAlgebra> verified_algebras() { return {e1(), e2(), rb_induced(), DendriformAlgebra::zero(2)}; }

} // namespace

TEST(PartialComposition, IdentityLaws)
{
    std::mt19937 rng(11);
    auto id = DendCochain::identity(2);
    for (std::size_t n = 1; n <= 3; ++n) {
        auto f = random_cochain(n, 2, 2, rng);
        EXPECT_EQ(partial_composition(id, 1, f), f);
        for (std::size_t i = 1; i <= n; ++i)
            EXPECT_EQ(partial_composition(f, i, id), f);
    }
}

TEST(PartialComposition, SequentialAndParallelAssociativity)
{
    std::mt19937 rng(12);
    for (int trial = 0; trial < 6; ++trial) {
        std::size_t m = 1 + rng() % 3, n = 1 + rng() % 2, p = 1 + rng() % 2;
        auto f = random_cochain(m, 2, 2, rng);
        auto g = random_cochain(n, 2, 2, rng);
        auto h = random_cochain(p, 2, 2, rng);
        for (std::size_t i = 1; i <= m; ++i)
            for (std::size_t j = 1; j <= n; ++j)
                EXPECT_EQ(partial_composition(partial_composition(f, i, g), i + j - 1, h),
                          partial_composition(f, i, partial_composition(g, j, h)));
        for (std::size_t i = 1; i <= m; ++i)
            for (std::size_t k = i + 1; k <= m; ++k)
                EXPECT_EQ(partial_composition(partial_composition(f, i, g), k + n - 1, h),
                          partial_composition(partial_composition(f, k, h), i, g));
    }
}

TEST(PartialComposition, RejectsBadSlot)
{
    auto id = DendCochain::identity(1);
    EXPECT_THROW(partial_composition(id, 2, id), SlotOutOfRange);
    EXPECT_THROW(partial_composition(id, 0, id), SlotOutOfRange);
    EXPECT_THROW(partial_composition(DendCochain::identity(2), 1, id), ShapeMismatch);
}

TEST(Multiplication, E1SquaresAgree)
{
    auto pi = DendCochain::multiplication(e1());
    EXPECT_EQ(partial_composition(pi, 1, pi), partial_composition(pi, 2, pi));
    EXPECT_TRUE(circle_product(pi, pi).is_zero());
    EXPECT_EQ(circle_product(pi, pi).arity(), 3u);
}

TEST(Multiplication, FailingCandidateIsDetected)
{
    // e < e = e, e > e = e violates the first two axioms
    DendriformAlgebra bad(1, tensor_from(1, {{0, 0, 0, 1}}), tensor_from(1, {{0, 0, 0, 1}}));
    auto pi = DendCochain::multiplication(bad);
    EXPECT_FALSE(check_dendriform_axioms(bad).pass);
    EXPECT_NE(partial_composition(pi, 1, pi), partial_composition(pi, 2, pi));
    EXPECT_FALSE(circle_product(pi, pi).is_zero());
}

TEST(CircleProduct, WithIdentityScalesByArity)
{
    std::mt19937 rng(13);
    for (std::size_t m = 1; m <= 3; ++m) {
        auto f = random_cochain(m, 2, 2, rng);
        EXPECT_EQ(circle_product(f, DendCochain::identity(2)), f * Rational(static_cast<long>(m)));
    }
}

TEST(Bracket, MultiplicationBracketsToZero)
{
    for (auto& a : verified_algebras()) {
        auto pi = DendCochain::multiplication(a);
        EXPECT_TRUE(gerstenhaber_bracket(pi, pi).is_zero());
        EXPECT_EQ(gerstenhaber_bracket(pi, pi), circle_product(pi, pi) * Rational(2));
    }
}

TEST(Bracket, GradedAntisymmetry)
{
    std::mt19937 rng(14);
    for (int trial = 0; trial < 5; ++trial) {
        auto f3 = random_cochain(3, 2, 2, rng);
        EXPECT_TRUE(gerstenhaber_bracket(f3, f3).is_zero());
        std::size_t m = 1 + rng() % 3, n = 1 + rng() % 2;
        auto f = random_cochain(m, 2, 2, rng);
        auto g = random_cochain(n, 2, 2, rng);
        EXPECT_EQ(gerstenhaber_bracket(f, g),
                  gerstenhaber_bracket(g, f) * Rational(-parity_sign((m - 1) * (n - 1))));
    }
}

TEST(Bracket, GradedJacobi)
{
    std::mt19937 rng(15);
    for (int trial = 0; trial < 4; ++trial) {
        auto f = random_cochain(2, 2, 2, rng);
        auto g = random_cochain(2, 2, 2, rng);
        auto h = random_cochain(1 + trial % 3, 2, 2, rng);
        std::size_t a = 1, b = 1, c = h.arity() - 1;
        auto lhs = gerstenhaber_bracket(gerstenhaber_bracket(f, g), h) * Rational(parity_sign(a * c)) +
                   gerstenhaber_bracket(gerstenhaber_bracket(g, h), f) * Rational(parity_sign(b * a)) +
                   gerstenhaber_bracket(gerstenhaber_bracket(h, f), g) * Rational(parity_sign(c * b));
        EXPECT_TRUE(lhs.is_zero());
    }
}

TEST(DendCoboundary, SquaresToZero)
{
    std::mt19937 rng(16);
    for (auto& a : verified_algebras()) {
        for (auto rep : {DendRepresentation::adjoint(a), DendRepresentation::trivial(a)}) {
            ASSERT_TRUE(check_representation(rep).pass);
            for (std::size_t n = 1; n <= 3; ++n) {
                auto f = random_cochain(n, a.dim, rep.mdim, rng);
                EXPECT_TRUE(dend_coboundary(rep, dend_coboundary(rep, f)).is_zero()) << "n=" << n;
            }
        }
    }
}

TEST(DendCoboundary, MatrixAgreesWithEvaluation)
{
    std::mt19937 rng(17);
    for (auto& a : verified_algebras())
        for (auto rep : {DendRepresentation::adjoint(a), DendRepresentation::trivial(a)})
            for (std::size_t n = 1; n <= 3; ++n) {
                auto f = random_cochain(n, a.dim, rep.mdim, rng);
                EXPECT_EQ(dend_coboundary_matrix(rep, n) * f.coeffs(), dend_coboundary(rep, f).coeffs());
            }
}

TEST(DendCoboundary, E1IdentityExample)
{
    auto rep = adjoint_of(e1());
    auto df = dend_coboundary(rep, DendCochain::identity(1));
    std::vector<std::size_t> ee{0, 0};
    EXPECT_EQ(df.at(1, ee, 0), 1);
    EXPECT_EQ(df.at(2, ee, 0), 0);
}

TEST(DendCoboundary, TrivialCoefficientsKeepOnlyMiddleTerms)
{
    std::mt19937 rng(18);
    auto a = rb_induced();
    auto rep = DendRepresentation::trivial(a);
    auto f = random_cochain(1, 2, 1, rng);
    auto df = dend_coboundary(rep, f);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            Vector ei = zero_vector(2), ej = zero_vector(2);
            ei[i] = 1;
            ej[j] = 1;
            std::vector<std::size_t> ij{i, j};
            EXPECT_EQ(df.at(1, ij, 0), -f.eval(1, {a.left(ei, ej)})[0]);
            EXPECT_EQ(df.at(2, ij, 0), -f.eval(1, {a.right(ei, ej)})[0]);
        }
}

TEST(MultiplicationDifferential, MatchesCoboundaryUpToSign)
{
    std::mt19937 rng(19);
    for (auto& a : verified_algebras()) {
        auto pi = DendCochain::multiplication(a);
        auto rep = adjoint_of(a);
        for (std::size_t n = 1; n <= 3; ++n) {
            auto f = random_cochain(n, a.dim, a.dim, rng);
            auto br = multiplication_differential(pi, f);
            auto df = dend_coboundary(rep, f);
            bool plus = br == df, minus = br == df * Rational(-1);
            EXPECT_TRUE(plus || minus) << "n=" << n;
            std::cout << "[ sign     ] [pi,f] = " << (plus ? "+" : "-") << "delta f at arity " << n << '\n';
        }
    }
}

TEST(MultiplicationDifferential, Linearity)
{
    std::mt19937 rng(20);
    auto pi = DendCochain::multiplication(e2());
    auto f = random_cochain(2, 2, 2, rng), g = random_cochain(2, 2, 2, rng);
    EXPECT_EQ(multiplication_differential(pi, f + g),
              multiplication_differential(pi, f) + multiplication_differential(pi, g));
}

TEST(Hochschild, SquaresToZeroFromDegreeZero)
{
    std::mt19937 rng(21);
    for (auto& a : verified_algebras()) {
        auto v = associated_associative(a);
        for (std::size_t n = 0; n <= 3; ++n) {
            auto f = random_hom(n, v.dim, rng);
            EXPECT_TRUE(hochschild_coboundary(v, hochschild_coboundary(v, f)).is_zero()) << "n=" << n;
        }
    }
    auto dual = dual_numbers();
    for (std::size_t n = 0; n <= 2; ++n) {
        auto f = random_hom(n, 2, rng);
        EXPECT_EQ(hochschild_coboundary_matrix(dual, n) * f.coeffs(), hochschild_coboundary(dual, f).coeffs());
    }
}

TEST(Hochschild, CommutativeDegreeZeroVanishes)
{
    std::mt19937 rng(22);
    auto v = dual_numbers();
    EXPECT_TRUE(hochschild_coboundary(v, random_hom(0, 2, rng)).is_zero());
}

TEST(Hochschild, IdentityOnIdempotentLine)
{
    auto v = associated_associative(e1());
    EXPECT_EQ(hochschild_coboundary(v, HomCochain::identity(1)), HomCochain::multiplication(v));
}

TEST(Hochschild, DegreeZeroIsCommutator)
{
    // upper triangular 2x2 matrices spanned by e11, e12
    AssociativeAlgebra v(2, tensor_from(2, {{0, 0, 0, 1}, {0, 1, 1, 1}}));
    HomCochain x(0, 2, 2, Vector{0, 1});
    auto dx = hochschild_coboundary(v, x);
    // w = e11: e11*e12 - e12*e11 = e12
    EXPECT_EQ(dx.eval(std::vector<std::size_t>{0}), (Vector{0, 1}));
    EXPECT_EQ(dx.eval(std::vector<std::size_t>{1}), (Vector{0, 0}));
}

TEST(Comparison, MultiplicationGoesToAssociatedProduct)
{
    for (auto& a : verified_algebras())
        EXPECT_EQ(comparison_map(DendCochain::multiplication(a)), HomCochain::multiplication(associated_associative(a)));
}

TEST(Comparison, OperadMorphism)
{
    std::mt19937 rng(23);
    for (int trial = 0; trial < 6; ++trial) {
        std::size_t m = 1 + rng() % 3, n = 1 + rng() % 3;
        auto f = random_cochain(m, 2, 2, rng), g = random_cochain(n, 2, 2, rng);
        for (std::size_t i = 1; i <= m; ++i)
            EXPECT_EQ(comparison_map(partial_composition(f, i, g)),
                      partial_composition(comparison_map(f), i, comparison_map(g)));
    }
}

TEST(Comparison, ChainMap)
{
    std::mt19937 rng(24);
    for (auto& a : verified_algebras()) {
        auto rep = adjoint_of(a);
        auto v = associated_associative(a);
        for (std::size_t n = 1; n <= 3; ++n) {
            auto f = random_cochain(n, a.dim, a.dim, rng);
            EXPECT_EQ(comparison_map(dend_coboundary(rep, f)), hochschild_coboundary(v, comparison_map(f)));
            EXPECT_EQ(comparison_matrix(n, a.dim, a.dim) * f.coeffs(), comparison_map(f).coeffs());
        }
    }
}
