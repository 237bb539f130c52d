// Brute-force reference implementations used only by the tests. None of them
// call into the library's algorithms; they work from the definitions.
#ifndef RKC_TESTS_ORACLES_HPP
#define RKC_TESTS_ORACLES_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Int = mpz_class;

// p(n) by Euler's pentagonal recurrence.
inline std::vector<Int> partition_numbers(int n)
{
    std::vector<Int> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m)
        for (int j = 1;; ++j) {
            const int g1 = j * (3 * j - 1) / 2, g2 = j * (3 * j + 1) / 2;
            if (g1 > m)
                break;
            const int sign = (j % 2) ? 1 : -1;
            p[static_cast<std::size_t>(m)] += sign * p[static_cast<std::size_t>(m - g1)];
            if (g2 <= m)
                p[static_cast<std::size_t>(m)] += sign * p[static_cast<std::size_t>(m - g2)];
        }
    return p;
}

// Every partition of n as a plain vector, any order.
inline std::vector<std::vector<int>> partitions(int n)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int cap) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int v = std::min(left, cap); v >= 1; --v) {
            cur.push_back(v);
            rec(left - v, v);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

// Cycle type of a permutation, sorted decreasing.
inline std::vector<int> cycle_type(const std::vector<int>& perm)
{
    std::vector<int> seen(perm.size(), 0), type;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i])
            continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
            seen[j] = 1;
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    return type;
}

// Characters by the Frobenius formula: chi^lambda(rho) is the coefficient of
// x^{lambda + delta} in a_delta * p_rho, with l = len(lambda) variables
// (extra variables only add zero rows). Polynomials are maps exponent -> coeff.
inline Int frobenius_character(const std::vector<int>& lambda, const std::vector<int>& rho)
{
    const std::size_t l = std::max<std::size_t>(lambda.size(), 1);
    using Poly = std::map<std::vector<int>, Int>;
    Poly acc;
    // a_delta = sum over permutations sigma of sign(sigma) x^{sigma(delta)}.
    std::vector<int> idx(l);
    std::iota(idx.begin(), idx.end(), 0);
    do {
        std::vector<int> e(l);
        int inversions = 0;
        for (std::size_t i = 0; i < l; ++i) {
            e[i] = static_cast<int>(l - 1) - idx[i];
            for (std::size_t j = i + 1; j < l; ++j)
                inversions += idx[i] > idx[j];
        }
        acc[e] += (inversions % 2) ? -1 : 1;
    } while (std::next_permutation(idx.begin(), idx.end()));
    for (int r : rho) {
        Poly next;
        for (const auto& [e, c] : acc)
            for (std::size_t i = 0; i < l; ++i) {
                auto e2 = e;
                e2[i] += r;
                next[e2] += c;
            }
        acc = std::move(next);
    }
    std::vector<int> target(l);
    for (std::size_t i = 0; i < l; ++i)
        target[i] = (i < lambda.size() ? lambda[i] : 0) + static_cast<int>(l - 1 - i);
    const auto it = acc.find(target);
    return it == acc.end() ? Int(0) : it->second;
}

// All permutations of {0..n-1}.
inline void for_each_permutation(int n, const std::function<void(const std::vector<int>&)>& f)
{
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do
        f(p);
    while (std::next_permutation(p.begin(), p.end()));
}

// Arrays of r rows x s columns with entries in 0..t, weakly decreasing along
// rows and columns; returns the size distribution.
inline std::vector<Int> box_distribution(int r, int s, int t)
{
    std::vector<Int> dist(static_cast<std::size_t>(r * s * t) + 1, 0);
    std::vector<int> a(static_cast<std::size_t>(r * s), 0);
    std::function<void(int, int)> rec = [&](int cell, int sum) {
        if (cell == r * s) {
            ++dist[static_cast<std::size_t>(sum)];
            return;
        }
        const int i = cell / s, j = cell % s;
        int hi = t;
        if (i > 0)
            hi = std::min(hi, a[static_cast<std::size_t>(cell - s)]);
        if (j > 0)
            hi = std::min(hi, a[static_cast<std::size_t>(cell - 1)]);
        for (int v = 0; v <= hi; ++v) {
            a[static_cast<std::size_t>(cell)] = v;
            rec(cell + 1, sum + v);
        }
    };
    rec(0, 0);
    return dist;
}

// Plane partitions of k in a rows x cols rectangle.
inline Int rect_count(int k, int rows, int cols)
{
    if (rows == 0 || cols == 0)
        return k == 0 ? 1 : 0;
    return box_distribution(rows, cols, k)[static_cast<std::size_t>(k)];
}

// The alpha-lattice condition checked on every prefix and every i, as written.
inline bool alpha_lattice(const std::vector<int>& word, const std::vector<int>& alpha)
{
    int top = static_cast<int>(alpha.size());
    for (int v : word)
        top = std::max(top, v);
    auto al = [&](int i) { return i <= static_cast<int>(alpha.size()) ? alpha[static_cast<std::size_t>(i - 1)] : 0; };
    for (std::size_t len = 0; len <= word.size(); ++len)
        for (int i = 1; i < top + 1; ++i) {
            int ci = 0, cj = 0;
            for (std::size_t p = 0; p < len; ++p) {
                ci += word[p] == i;
                cj += word[p] == i + 1;
            }
            if (ci + al(i) < cj + al(i + 1))
                return false;
        }
    return true;
}

// Counts Kronecker tableaux of shape lambda/alpha and type nu/alpha by
// filling every cell with every value and testing all conditions at the end.
inline long kronecker_tableaux_count(const std::vector<int>& lambda, const std::vector<int>& alpha,
                                     const std::vector<int>& nu)
{
    auto part = [](const std::vector<int>& v, std::size_t i) { return i < v.size() ? v[i] : 0; };
    std::vector<std::pair<int, int>> cells;
    for (std::size_t r = 0; r < lambda.size(); ++r)
        for (int c = part(alpha, r); c < lambda[r]; ++c)
            cells.emplace_back(static_cast<int>(r), c);
    const int top = static_cast<int>(nu.size());
    std::vector<int> content(static_cast<std::size_t>(top) + 1, 0);
    for (int v = 1; v <= top; ++v)
        content[static_cast<std::size_t>(v)] = nu[static_cast<std::size_t>(v - 1)] - part(alpha, static_cast<std::size_t>(v - 1));
    for (int v = 1; v <= top; ++v)
        if (content[static_cast<std::size_t>(v)] < 0)
            return 0;
    std::map<std::pair<int, int>, int> fill;
    long count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == cells.size()) {
            for (int v = 1; v <= top; ++v)
                if (content[static_cast<std::size_t>(v)] != 0)
                    return;
            // Semistandard.
            for (const auto& [rc, v] : fill) {
                auto left = fill.find({rc.first, rc.second - 1});
                if (left != fill.end() && left->second > v)
                    return;
                auto up = fill.find({rc.first - 1, rc.second});
                if (up != fill.end() && up->second >= v)
                    return;
            }
            std::vector<int> word;
            for (std::size_t r = 0; r < lambda.size(); ++r)
                for (int c = lambda[r] - 1; c >= part(alpha, r); --c)
                    word.push_back(fill[{static_cast<int>(r), c}]);
            if (!alpha_lattice(word, alpha))
                return;
            const int d = part(alpha, 0) - part(alpha, 1);
            if (d > 0) {
                int ones2 = 0, twos1 = 0;
                for (const auto& [rc, v] : fill) {
                    ones2 += rc.first == 1 && v == 1;
                    twos1 += rc.first == 0 && v == 2;
                }
                if (ones2 != d && twos1 != d)
                    return;
            }
            ++count;
            return;
        }
        for (int v = 1; v <= top; ++v) {
            if (content[static_cast<std::size_t>(v)] == 0)
                continue;
            --content[static_cast<std::size_t>(v)];
            fill[cells[i]] = v;
            rec(i + 1);
            ++content[static_cast<std::size_t>(v)];
        }
        fill.erase(cells[i]);
    };
    rec(0);
    return count;
}

} // namespace oracle

#endif
