#include "support.hpp"

#include "dendra/errors.hpp"
#include "dendra/linalg.hpp"

#include <gtest/gtest.h>

using namespace dendra;
using namespace dendra::testing;

namespace {

Matrix rows(std::size_t cols, std::vector<std::vector<int>> data)
{
    std::vector<Vector> vs;
    for (auto& r : data)
        vs.emplace_back(r.begin(), r.end());
    return Matrix::from_rows(cols, vs);
}

Matrix random_matrix(std::size_t r, std::size_t c, std::mt19937& rng, int zero_bias = 0)
{
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (static_cast<int>(rng() % 4) >= zero_bias)
                m.set(i, j, small_rational(rng));
    return m;
}

} // namespace

TEST(Rational, ParsesAndCanonicalizes)
{
    EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
    EXPECT_EQ(parse_rational("-7"), Rational(-7));
    EXPECT_EQ(to_string(parse_rational("0/5")), "0");
    EXPECT_EQ(to_string(parse_rational("-4/6")), "-2/3");
    EXPECT_EQ(to_string(Rational(1, 3) + Rational(1, 6)), "1/2");
    EXPECT_THROW(parse_rational("1/0"), SchemaError);
    EXPECT_THROW(parse_rational("1.5"), SchemaError);
    EXPECT_THROW(parse_rational("2/-3"), SchemaError);
}

TEST(Rank, KnownExamples)
{
    EXPECT_EQ(rank(Matrix::identity(2)), 2u);
    EXPECT_EQ(rank(Matrix(3, 4)), 0u);
    EXPECT_EQ(rank(rows(2, {{1, 2}, {2, 4}})), 1u);
}

TEST(Kernel, KnownExamples)
{
    EXPECT_EQ(kernel(Matrix::identity(3)).dim(), 0u);
    EXPECT_EQ(kernel(Matrix(3, 3)), Subspace::full(3));
    auto k = kernel(rows(2, {{1, 1}}));
    ASSERT_EQ(k.dim(), 1u);
    EXPECT_TRUE(k.contains(Vector{1, -1}));
}

TEST(Solve, KnownExamples)
{
    Vector b{3, -1, Rational(1, 2)};
    EXPECT_EQ(solve(Matrix::identity(3), b), b);
    EXPECT_FALSE(solve(Matrix(2, 2), Vector{1, 0}).has_value());
    EXPECT_EQ(solve(rows(1, {{2}}), Vector{3}), (Vector{Rational(3, 2)}));
}

TEST(Solve, ParticularSolutionSetsFreeVariablesToZero)
{
    auto x = solve(rows(3, {{1, 1, 0}, {0, 0, 1}}), Vector{2, 5});
    ASSERT_TRUE(x);
    EXPECT_EQ(*x, (Vector{2, 0, 5}));
}

TEST(QuotientDim, KnownExamples)
{
    auto full = Subspace::full(2);
    EXPECT_EQ(quotient_dim(full, Subspace(2)), 2u);
    EXPECT_EQ(quotient_dim(full, full), 0u);
    auto z = Subspace::full(3);
    auto b = Subspace::span(3, {Vector{1, 1, 0}});
    EXPECT_EQ(quotient_dim(z, b), 2u);
    EXPECT_THROW(quotient_dim(b, z), ContainmentViolation);
}

TEST(Quotient, ClassVectorsIgnoreTheDenominator)
{
    auto z = Subspace::full(3);
    auto b = Subspace::span(3, {Vector{1, 1, 0}});
    Quotient q(z, b);
    ASSERT_EQ(q.dim(), 2u);
    Vector v{1, 2, 3};
    Vector w{2, 3, 3}; // v + (1, 1, 0)
    EXPECT_EQ(q.class_vector(v), q.class_vector(w));
    EXPECT_TRUE(q.is_trivial_class(Vector{-2, -2, 0}));
    for (std::size_t i = 0; i < q.dim(); ++i) {
        auto c = q.class_vector(q.representatives()[i]);
        ASSERT_TRUE(c);
        for (std::size_t j = 0; j < q.dim(); ++j)
            EXPECT_EQ((*c)[j], Rational(i == j ? 1 : 0));
    }
}

TEST(Matrix, SparseAndDenseAgree)
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix a = random_matrix(4, 5, rng, 2);
        Matrix sparse(4, 5, 0);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 5; ++j)
                sparse.set(i, j, a.get(i, j));
        ASSERT_TRUE(sparse.is_sparse());
        EXPECT_EQ(sparse, a);
        Vector x = random_vector(5, rng);
        EXPECT_EQ(sparse * x, a * x);
        EXPECT_EQ(rank(sparse), rank(a));
        EXPECT_EQ(kernel(sparse), kernel(a));
        EXPECT_EQ(sparse.transpose(), a.transpose());
    }
}

TEST(Matrix, KroneckerOrdersFirstFactorMostSignificant)
{
    Matrix a = rows(2, {{1, 2}, {3, 4}});
    Matrix b = rows(2, {{0, 1}, {1, 0}});
    Matrix k = kron(a, b);
    EXPECT_EQ(k.get(0, 1), Rational(1));
    EXPECT_EQ(k.get(0, 3), Rational(2));
    EXPECT_EQ(k.get(3, 0), Rational(3));
    EXPECT_EQ(k.get(2, 1), Rational(3));
}

TEST(Matrix, OutOfRangeAccessThrows)
{
    Matrix m(2, 2);
    EXPECT_THROW(m.get(2, 0), IndexOutOfRange);
    EXPECT_THROW(m * Matrix(3, 1), ShapeMismatch);
}

TEST(LinalgProperties, RankNullityAndExactness)
{
    std::mt19937 rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = 1 + rng() % 5, c = 1 + rng() % 6;
        Matrix m = random_matrix(r, c, rng, trial % 3);
        auto k = kernel(m);
        EXPECT_EQ(rank(m) + k.dim(), c);
        for (const auto& v : k.basis())
            EXPECT_TRUE(is_zero(m * v));
        Vector b = random_vector(r, rng);
        if (auto x = solve(m, b))
            EXPECT_EQ(m * *x, b);
        else
            EXPECT_FALSE(image(m).contains(b));
        Vector in_image = m * random_vector(c, rng);
        auto y = solve(m, in_image);
        ASSERT_TRUE(y);
        EXPECT_EQ(m * *y, in_image);
    }
}

TEST(LinalgProperties, Deterministic)
{
    std::mt19937 rng(3);
    Matrix m = random_matrix(5, 7, rng, 1);
    auto e1 = row_reduce(m), e2 = row_reduce(m);
    EXPECT_EQ(e1.rows, e2.rows);
    EXPECT_EQ(e1.pivots, e2.pivots);
    // Canonical bases do not depend on the spanning set.
    auto k = kernel(m);
    std::vector<Vector> shuffled(k.basis().rbegin(), k.basis().rend());
    if (shuffled.size() >= 2)
        axpy(shuffled[0], Rational(5, 3), shuffled[1]);
    EXPECT_EQ(Subspace::span(7, shuffled), k);
}

TEST(Subspace, SumAndContainment)
{
    auto a = Subspace::span(3, {Vector{1, 0, 0}});
    auto b = Subspace::span(3, {Vector{0, 1, 1}});
    auto s = a.sum(b);
    EXPECT_EQ(s.dim(), 2u);
    EXPECT_TRUE(s.contains(a));
    EXPECT_TRUE(s.contains(Vector{2, 3, 3}));
    EXPECT_FALSE(s.contains(Vector{0, 0, 1}));
    auto coords = s.coordinates(Vector{2, 3, 3});
    ASSERT_TRUE(coords);
    EXPECT_EQ(s.basis_matrix() * *coords, (Vector{2, 3, 3}));
}
