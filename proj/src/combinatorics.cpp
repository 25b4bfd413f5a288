#include "dendra/combinatorics.hpp"

#include "dendra/errors.hpp"

#include <string>

namespace dendra {

ColorSum ColorSum::single(int n, int r)
{
    ColorSum s(n);
    s.add(r, 1);
    return s;
}

ColorSum ColorSum::full(int n)
{
    ColorSum s(n);
    for (int r = 1; r <= n; ++r)
        s.add(r, 1);
    return s;
}

void ColorSum::add(int r, const Rational& c)
{
    if (r < 1 || r > n_)
        throw IndexOutOfRange("color [" + std::to_string(r) + "] outside C_" + std::to_string(n_));
    Rational& slot = coeffs_[r];
    slot += c;
    if (sgn(slot) == 0)
        coeffs_.erase(r);
}

namespace {

void check_profile(int m, int i, int n, int r)
{
    if (m < 1 || n < 1 || i < 1 || i > m || r < 1 || r > m + n - 1)
        throw IndexOutOfRange("profile (m=" + std::to_string(m) + ", i=" + std::to_string(i) +
                              ", n=" + std::to_string(n) + ") with color [" + std::to_string(r) + "]");
}

} // namespace

Color r0_map(int m, int i, int n, int r)
{
    check_profile(m, i, n, r);
    if (r <= i - 1)
        return {m, r};
    if (r <= i + n - 1)
        return {m, i};
    return {m, r - n + 1};
}

ColorSum ri_map(int m, int i, int n, int r)
{
    check_profile(m, i, n, r);
    if (i <= r && r <= i + n - 1)
        return ColorSum::single(n, r - (i - 1));
    return ColorSum::full(n);
}

std::size_t binomial(std::size_t n, std::size_t k)
{
    if (k > n)
        return 0;
    std::size_t result = 1;
    for (std::size_t j = 1; j <= k; ++j)
        result = result * (n - k + j) / j;
    return result;
}

ShuffleSplit shuffles(int n, int m, std::size_t cap)
{
    if (n < 1 || m < 1)
        throw IndexOutOfRange("shuffle block lengths must be positive");
    if (binomial(n + m, n) > cap)
        throw ResourceLimit("Sh_{" + std::to_string(n) + "," + std::to_string(m) + "} exceeds the shuffle cap");

    ShuffleSplit out;
    const int total = n + m;
    // Positions of the first block, increasing; lexicographic in sigma.
    std::vector<int> first(n);
    for (int k = 0; k < n; ++k)
        first[k] = k + 1;
    while (true) {
        Shuffle s{n, m, std::vector<int>(total)};
        std::vector<bool> used(total + 1, false);
        for (int k = 0; k < n; ++k) {
            s.sigma[k] = first[k];
            used[first[k]] = true;
        }
        int next = n;
        for (int v = 1; v <= total; ++v)
            if (!used[v])
                s.sigma[next++] = v;
        if (s.sigma[n - 1] == total)
            out.sh1.push_back(std::move(s));
        else
            out.sh2.push_back(std::move(s));

        int k = n - 1;
        while (k >= 0 && first[k] == total - (n - 1 - k))
            --k;
        if (k < 0)
            break;
        ++first[k];
        for (int j = k + 1; j < n; ++j)
            first[j] = first[j - 1] + 1;
    }
    return out;
}

} // namespace dendra
