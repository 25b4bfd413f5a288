#include "support.hpp"

#include "dendra/errors.hpp"

#include <gtest/gtest.h>

using namespace dendra;
using namespace dendra::testing;

namespace {

/// Subsets of G closed under the product, by bitmask enumeration.
std::size_t brute_force_subgroup_count(const FiniteGroup& g)
{
    std::size_t count = 0;
    for (unsigned mask = 1; mask < (1u << g.order()); ++mask) {
        if (!(mask & 1u))
            continue;
        bool closed = true;
        for (std::size_t a = 0; a < g.order() && closed; ++a)
            for (std::size_t b = 0; b < g.order() && closed; ++b)
                if ((mask >> a & 1u) && (mask >> b & 1u) && !(mask >> g.mul(a, b) & 1u))
                    closed = false;
        count += closed;
    }
    return count;
}

/// (g.f)(r; a_1..a_n) = g f(r; g^-1 a_1, ..., g^-1 a_n)
DendCochain act_on(const DendGroupAction& act, std::size_t g, const DendCochain& f)
{
    std::vector<Matrix> maps(f.arity(), act.matrix(act.group().inverse(g)));
    return postcompose(act.matrix(g), precompose(f, maps));
}

/// Image of the averaging operator f -> (1/|G|) sum_g g.f.
Subspace reynolds_image(const DendGroupAction& act, std::size_t n)
{
    const std::size_t d = act.algebra.dim;
    const std::size_t dim = DendCochain::space_dim(n, d, d);
    std::vector<Vector> images;
    for (std::size_t k = 0; k < dim; ++k) {
        Vector e = zero_vector(dim);
        e[k] = 1;
        DendCochain f(n, d, d, e), avg(n, d, d);
        for (std::size_t g = 0; g < act.group().order(); ++g)
            avg += act_on(act, g, f);
        images.push_back((avg * Rational(1, static_cast<long>(act.group().order()))).coeffs());
    }
    return Subspace::span(dim, images);
}

DendGroupAction cyclic_trivial(const DendriformAlgebra& a, std::size_t n)
{
    return trivial_action(a, FiniteGroup::cyclic(n));
}

} // namespace

TEST(FiniteGroup, ValidatesTable)
{
    EXPECT_THROW(FiniteGroup({{0, 1}, {0, 1}}), InvalidGroup);
    EXPECT_THROW(FiniteGroup({{1, 0}, {0, 1}}), InvalidGroup);
    auto z3 = FiniteGroup::cyclic(3);
    EXPECT_EQ(z3.inverse(1), 2u);
    EXPECT_EQ(z3.mul(2, 2), 1u);
}

TEST(FiniteGroup, SymmetricTableComposesPermutations)
{
    auto s3 = FiniteGroup::symmetric3();
    ASSERT_EQ(s3.order(), 6u);
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b) {
            auto pa = FiniteGroup::symmetric3_permutation(a), pb = FiniteGroup::symmetric3_permutation(b);
            std::vector<std::size_t> ab(3);
            for (std::size_t x = 0; x < 3; ++x)
                ab[x] = pa[pb[x]];
            EXPECT_EQ(FiniteGroup::symmetric3_permutation(s3.mul(a, b)), ab);
        }
}

TEST(GroupRepresentation, LawsAndInverses)
{
    auto act = s3_permutation();
    EXPECT_TRUE(check_group_representation(act.rep).pass);
    for (std::size_t g = 0; g < 6; ++g)
        EXPECT_EQ(act.matrix(g) * act.matrix(act.group().inverse(g)), Matrix::identity(3));

    auto broken = act.rep;
    broken.matrices[1] = Matrix::identity(3);
    EXPECT_FALSE(check_group_representation(broken).pass);
}

TEST(CheckAction, KnownExamples)
{
    EXPECT_TRUE(check_action(cyclic_trivial(rb_induced(), 3)).pass);
    EXPECT_TRUE(check_action(e2_swap()).pass);
    EXPECT_TRUE(check_action(s3_permutation()).pass);
    EXPECT_TRUE(check_action(rb_sign()).pass);

    auto lopsided = e2_swap();
    lopsided.algebra.prec(1, 1, 1) = 0;
    auto r = check_action(lopsided);
    EXPECT_FALSE(r.pass);
    ASSERT_FALSE(r.violations.empty());
    EXPECT_EQ(r.violations.front().identity, "auto-prec[g=1]");
}

TEST(Subgroups, KnownExamples)
{
    EXPECT_EQ(subgroups(FiniteGroup::trivial()), (std::vector<Subgroup>{{0}}));
    EXPECT_EQ(subgroups(FiniteGroup::cyclic(2)), (std::vector<Subgroup>{{0}, {0, 1}}));
    auto s3 = FiniteGroup::symmetric3();
    auto subs = subgroups(s3);
    EXPECT_EQ(subs.size(), brute_force_subgroup_count(s3));
    EXPECT_EQ(subs.size(), 6u);
    for (const auto& h : subs)
        EXPECT_TRUE(is_subgroup(s3, h));
    EXPECT_EQ(subs.front(), (Subgroup{0}));
    EXPECT_EQ(subs.back(), (Subgroup{0, 1, 2, 3, 4, 5}));
}

TEST(Subgroups, CyclicCountsMatchDivisors)
{
    for (std::size_t n : {4, 6, 8, 12})
        EXPECT_EQ(subgroups(FiniteGroup::cyclic(n)).size(), brute_force_subgroup_count(FiniteGroup::cyclic(n)));
    EXPECT_THROW(subgroups(FiniteGroup::cyclic(25)), ResourceLimit);
}

TEST(FixedSubalgebra, KnownExamples)
{
    auto act = e2_swap();
    auto whole = fixed_subalgebra(act, {0});
    EXPECT_EQ(whole.embedding, Matrix::identity(2));
    auto fixed = fixed_subalgebra(act, {0, 1});
    ASSERT_EQ(fixed.algebra.dim, 1u);
    EXPECT_TRUE(fixed.space.contains(Vector{1, 1}));
    EXPECT_EQ(fixed.algebra.prec(0, 0, 0), Rational(1));
    EXPECT_EQ(fixed.algebra.succ(0, 0, 0), Rational(0));

    auto triv = cyclic_trivial(e2(), 2);
    for (const auto& h : subgroups(triv.group()))
        EXPECT_EQ(fixed_subalgebra(triv, h).algebra.dim, 2u);
}

TEST(FixedSubalgebra, ProductsOfFixedVectorsStayFixed)
{
    for (const auto& act : {e2_swap(), s3_permutation(), rb_sign()})
        for (const auto& h : subgroups(act.group())) {
            auto f = fixed_subalgebra(act, h);
            EXPECT_TRUE(check_dendriform_axioms(f.algebra).pass);
            const std::size_t k = f.algebra.dim;
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) {
                    Vector a = f.embedding.column(i), b = f.embedding.column(j);
                    EXPECT_TRUE(f.space.contains(act.algebra.left(a, b)));
                    EXPECT_TRUE(f.space.contains(act.algebra.right(a, b)));
                    Vector ei = zero_vector(k), ej = zero_vector(k);
                    ei[i] = 1;
                    ej[j] = 1;
                    EXPECT_EQ(f.embedding * f.algebra.left(ei, ej), act.algebra.left(a, b));
                }
        }
}

TEST(FixedSubalgebra, SignActionFixesTheSquareZeroLine)
{
    auto f = fixed_subalgebra(rb_sign(), {0, 1});
    ASSERT_EQ(f.algebra.dim, 1u);
    EXPECT_TRUE(f.space.contains(Vector{0, 1}));
    EXPECT_TRUE(f.algebra.prec.is_zero());
}

TEST(EquivariantCochains, KnownExamples)
{
    for (std::size_t n = 1; n <= 3; ++n) {
        auto full = DendCochain::space_dim(n, 2, 2);
        EXPECT_EQ(full, n * (1u << n) * 2);
        EXPECT_EQ(equivariant_cochain_subspace(cyclic_trivial(e2(), 3), n).dim(), full);
        EXPECT_EQ(equivariant_cochain_subspace(trivial_action(e2()), n).dim(), full);
    }
    // Commutant of the swap matrix.
    EXPECT_EQ(equivariant_cochain_subspace(e2_swap(), 1).dim(), 2u);
}

TEST(EquivariantCochains, GeneratorsGiveTheSameSubspace)
{
    auto all = s3_permutation();
    auto gens = all;
    gens.rep.generators = {1, 3};
    for (std::size_t n = 1; n <= 3; ++n)
        EXPECT_EQ(equivariant_cochain_subspace(gens, n), equivariant_cochain_subspace(all, n)) << n;
    for (std::size_t n = 0; n <= 3; ++n)
        EXPECT_EQ(equivariant_hom_subspace(gens.rep, n), equivariant_hom_subspace(all.rep, n)) << n;
}

TEST(EquivariantCochains, AveragingImageMatchesConstraints)
{
    for (const auto& act : {e2_swap(), s3_permutation(), rb_sign()})
        for (std::size_t n = 1; n <= 2; ++n)
            EXPECT_EQ(reynolds_image(act, n), equivariant_cochain_subspace(act, n)) << n;
}

TEST(EquivariantCochains, MultiplicationIsEquivariant)
{
    for (const auto& act : {e2_swap(), s3_permutation(), rb_sign()})
        EXPECT_TRUE(equivariant_cochain_subspace(act, 2).contains(DendCochain::multiplication(act.algebra).coeffs()));
}

TEST(Subconjugacy, KnownExamples)
{
    auto s3 = FiniteGroup::symmetric3();
    EXPECT_EQ(subconjugacy_witnesses(s3, {0}, {0}).size(), 6u);
    EXPECT_TRUE(subconjugacy_witnesses(s3, {0, 1, 2, 3, 4, 5}, {0}).empty());
    EXPECT_EQ(subconjugacy_witnesses(s3, {0, 1}, {0, 1, 2, 3, 4, 5}).size(), 6u);
    // Transpositions are conjugate to each other but never into the 3-cycles.
    EXPECT_EQ(subconjugacy_witnesses(s3, {0, 1}, {0, 2}).size(), 2u);
    EXPECT_TRUE(subconjugacy_witnesses(s3, {0, 1}, {0, 3, 4}).empty());
}

TEST(RestrictionMap, RequiresSubconjugacy)
{
    auto act = e2_swap();
    auto e = fixed_subalgebra(act, {0});
    auto g = fixed_subalgebra(act, {0, 1});
    EXPECT_THROW(restriction_map(act, g, e, 0), ContainmentViolation);
    Matrix p = restriction_map(act, e, g, 1);
    EXPECT_EQ(p.rows(), 2u);
    EXPECT_EQ(p.cols(), 1u);
}

TEST(OrbitFunctor, TrivialGroupHasOneObject)
{
    auto og = build_og_algebra(trivial_action(e1()));
    ASSERT_EQ(og.objects.size(), 1u);
    ASSERT_EQ(og.morphisms.size(), 1u);
    EXPECT_EQ(og.morphisms[0].map, Matrix::identity(1));
    EXPECT_TRUE(og.functoriality.pass);
}

TEST(OrbitFunctor, SwapAndSymmetricInstances)
{
    auto og = build_og_algebra(e2_swap());
    ASSERT_EQ(og.objects.size(), 2u);
    EXPECT_EQ(og.objects[0].algebra.dim, 2u);
    EXPECT_EQ(og.objects[1].algebra.dim, 1u);
    EXPECT_TRUE(og.functoriality.pass);

    for (const auto& act : {e2_swap(), s3_permutation(), rb_sign()}) {
        auto o = build_og_algebra(act);
        EXPECT_TRUE(o.functoriality.pass);
        std::size_t witnesses = 0;
        for (const auto& m : o.morphisms) {
            const auto& h = o.objects[m.source];
            const auto& k = o.objects[m.target];
            witnesses += m.witnesses.size();
            for (auto g : m.witnesses) {
                // psi_g lands in A^H and agrees with g on A^K.
                EXPECT_EQ(h.embedding * m.map, act.matrix(g) * k.embedding);
                for (std::size_t c = 0; c < k.embedding.cols(); ++c)
                    EXPECT_TRUE(h.space.contains(act.matrix(g) * k.embedding.column(c)));
            }
        }
        EXPECT_EQ(witnesses, o.witness_count);
    }
}

TEST(OrbitFunctor, WitnessCountsForSymmetricGroup)
{
    auto og = build_og_algebra(s3_permutation());
    std::size_t expected = 0;
    auto subs = subgroups(FiniteGroup::symmetric3());
    for (const auto& h : subs)
        for (const auto& k : subs)
            expected += subconjugacy_witnesses(FiniteGroup::symmetric3(), h, k).size();
    EXPECT_EQ(og.witness_count, expected);
    EXPECT_LE(og.morphisms.size(), og.witness_count);
}
