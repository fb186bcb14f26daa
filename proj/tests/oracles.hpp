#pragma once

// Brute-force reference implementations used only by the tests. Each one
// follows the textbook definition directly and shares no code path with the
// library routine it checks.

#include "purecross/numeric.hpp"
#include "purecross/partition.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace oracle {

using purecross::AtomSet;
using purecross::Partition;
using purecross::Rational;

/// All set partitions of [n], generated by inserting atom k into an existing
/// block or a new one.
inline std::vector<Partition> all_partitions(int n)
{
    std::vector<std::vector<AtomSet>> current{{}};
    for (int k = 1; k <= n; ++k) {
        std::vector<std::vector<AtomSet>> next;
        for (const auto& blocks : current) {
            for (std::size_t b = 0; b < blocks.size(); ++b) {
                auto copy = blocks;
                copy[b].push_back(k);
                next.push_back(std::move(copy));
            }
            auto copy = blocks;
            copy.push_back({k});
            next.push_back(std::move(copy));
        }
        current = std::move(next);
    }
    std::vector<Partition> out;
    for (const auto& blocks : current) out.push_back(Partition::from_blocks(n, blocks));
    std::sort(out.begin(), out.end());
    return out;
}

inline bool same(const Partition& p, int i, int j)
{
    for (const auto& b : p.blocks()) {
        bool hi = std::find(b.begin(), b.end(), i) != b.end();
        bool hj = std::find(b.begin(), b.end(), j) != b.end();
        if (hi || hj) return hi && hj;
    }
    return false;
}

/// No i < j < k < l with i ~ k, j ~ l, i !~ j.
inline bool noncrossing(const Partition& p)
{
    const int n = p.size();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l)
                    if (same(p, i, k) && same(p, j, l) && !same(p, i, j)) return false;
    return true;
}

/// B meets S implies B inside S.
inline bool splits_def(const AtomSet& s, const Partition& p)
{
    auto in = [&](int a) { return std::find(s.begin(), s.end(), a) != s.end(); };
    for (const auto& b : p.blocks()) {
        bool meets = false, inside = true;
        for (int a : b) {
            meets = meets || in(a);
            inside = inside && in(a);
        }
        if (meets && !inside) return false;
    }
    return true;
}

inline bool connected(const Partition& p)
{
    const int n = p.size();
    for (int start = 0; start < n; ++start)
        for (int q = 1; start + q <= n; ++q) {
            if (q == n) continue;
            AtomSet s;
            for (int a = start + 1; a <= start + q; ++a) s.push_back(a);
            if (splits_def(s, p)) return false;
        }
    return true;
}

inline bool no_neighbors(const Partition& p)
{
    for (int k = 1; k < p.size(); ++k)
        if (same(p, k, k + 1)) return false;
    return true;
}

inline bool pc_plus(const Partition& p) { return connected(p) && no_neighbors(p); }

inline bool purely_crossing(const Partition& p)
{
    return p.size() >= 2 && pc_plus(p) && !same(p, 1, p.size());
}

/// sigma <= pi iff every block of pi splits sigma.
inline bool leq(const Partition& sigma, const Partition& pi)
{
    for (const auto& b : pi.blocks())
        if (!splits_def(b, sigma)) return false;
    return true;
}

/// The least element of {rho noncrossing : pi <= rho}, found by search.
inline Partition cover(const Partition& pi)
{
    std::vector<Partition> above;
    for (const auto& rho : all_partitions(pi.size()))
        if (noncrossing(rho) && leq(pi, rho)) above.push_back(rho);
    for (const auto& cand : above)
        if (std::all_of(above.begin(), above.end(), [&](const Partition& r) { return leq(cand, r); })) return cand;
    throw std::logic_error("no least noncrossing upper bound");
}

inline std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b, std::size_t keep)
{
    std::vector<Rational> out(keep);
    for (std::size_t i = 0; i < a.size() && i < keep; ++i)
        for (std::size_t j = 0; j < b.size() && i + j < keep; ++j) out[i + j] += a[i] * b[j];
    return out;
}

/// Compositional inverse by Lagrange inversion on plain coefficient
/// vectors: g_n = (1/n) [x^{n-1}] (x / f)^n.
inline std::vector<Rational> lagrange(const std::vector<Rational>& f)
{
    const std::size_t order = f.size() - 1;
    // h = f / x, then its reciprocal by long division.
    std::vector<Rational> h(f.begin() + 1, f.end());
    std::vector<Rational> inv(order);
    inv[0] = 1 / h[0];
    for (std::size_t k = 1; k < order; ++k) {
        Rational acc = 0;
        for (std::size_t j = 1; j <= k; ++j) acc += h[j] * inv[k - j];
        inv[k] = -acc / h[0];
    }
    std::vector<Rational> g(order + 1);
    std::vector<Rational> power{1};
    for (std::size_t n = 1; n <= order; ++n) {
        power = poly_mul(power, inv, order);
        g[n] = power[n - 1] / static_cast<long>(n);
    }
    return g;
}

/// Catalan numbers via C_{n+1} = sum C_i C_{n-i}.
inline std::vector<long long> catalan(int upto)
{
    std::vector<long long> c{1};
    for (int n = 0; n < upto; ++n) {
        long long s = 0;
        for (int i = 0; i <= n; ++i) s += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(n - i)];
        c.push_back(s);
    }
    return c;
}

}  // namespace oracle
