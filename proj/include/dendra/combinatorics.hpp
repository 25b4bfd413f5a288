#pragma once

#include "dendra/rational.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace dendra {

/// The element [r] of C_n. Colors are 1-based, as in the displayed formulas.
struct Color
{
    int n = 1;
    int r = 1;

    friend bool operator==(const Color&, const Color&) = default;
};

/// Finitely supported formal combination of colors in K[C_n].
class ColorSum
{
public:
    explicit ColorSum(int n) : n_(n) {}

    static ColorSum single(int n, int r);
    /// [1] + [2] + ... + [n]
    static ColorSum full(int n);

    int arity() const { return n_; }
    const std::map<int, Rational>& terms() const { return coeffs_; }
    void add(int r, const Rational& c);

    friend bool operator==(const ColorSum&, const ColorSum&) = default;

private:
    int n_;
    std::map<int, Rational> coeffs_;
};

/// R_0(m; 1,...,n,...,1) with n in slot i, applied to [r] in C_{m+n-1}.
Color r0_map(int m, int i, int n, int r);
/// R_i(m; 1,...,n,...,1) with n in slot i, applied to [r] in C_{m+n-1}.
ColorSum ri_map(int m, int i, int n, int r);

/// A (n, m)-shuffle as the image array sigma[0..n+m-1] of 1..n+m.
struct Shuffle
{
    int n = 0;
    int m = 0;
    std::vector<int> sigma;

    friend bool operator==(const Shuffle&, const Shuffle&) = default;
};

inline constexpr std::size_t kShuffleLimit = 1'000'000;

struct ShuffleSplit
{
    std::vector<Shuffle> sh1; // sigma(n) = n + m
    std::vector<Shuffle> sh2; // sigma(n + m) = n + m
};

/// Both halves of Sh_{n,m}, each lexicographic in sigma.
ShuffleSplit shuffles(int n, int m, std::size_t cap = kShuffleLimit);

std::size_t binomial(std::size_t n, std::size_t k);

} // namespace dendra
