#pragma once

#include "dendra/algebra.hpp"
#include "dendra/catalog.hpp"
#include "dendra/equivariance.hpp"
#include "dendra/operad.hpp"

#include <random>

namespace dendra::testing {

inline Rational small_rational(std::mt19937& rng)
{
    static constexpr int nums[] = {-2, -1, 0, 0, 1, 1, 2, 3};
    static constexpr int dens[] = {1, 1, 1, 2, 3};
    Rational q(nums[rng() % 8], dens[rng() % 5]);
    q.canonicalize();
    return q;
}

inline Vector random_vector(std::size_t n, std::mt19937& rng)
{
    Vector v(n);
    for (auto& x : v)
        x = small_rational(rng);
    return v;
}

inline DendCochain random_cochain(std::size_t arity, std::size_t d, std::size_t m, std::mt19937& rng)
{
    return DendCochain(arity, d, m, random_vector(DendCochain::space_dim(arity, d, m), rng));
}

inline HomCochain random_hom(std::size_t arity, std::size_t d, std::mt19937& rng)
{
    return HomCochain(arity, d, d, random_vector(HomCochain::space_dim(arity, d, d), rng));
}

inline Tensor3 tensor_from(std::size_t d, std::initializer_list<std::tuple<std::size_t, std::size_t, std::size_t, int>> entries)
{
    Tensor3 t = Tensor3::cube(d);
    for (auto [i, j, k, v] : entries)
        t(i, j, k) = v;
    return t;
}

using catalog::dual_numbers;
using catalog::dual_numbers_rb;
using catalog::e1;
using catalog::e2;
using catalog::e2_swap;
using catalog::permutation_matrix;
using catalog::rb_induced;
using catalog::rb_sign;
using catalog::s3_permutation;

inline DendGroupAction trivial_action(const DendriformAlgebra& a, const FiniteGroup& g = FiniteGroup::trivial())
{
    return {a, GroupRepresentation::trivial(g, a.dim)};
}

} // namespace dendra::testing
