#ifndef BENTHAD_TESTS_FIXTURES_HPP
#define BENTHAD_TESTS_FIXTURES_HPP

// Shared test fixtures and independent oracles. Everything here sticks to
// plain loops over int grids so that library bugs cannot hide behind the
// code paths under test.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "benthad/digraph.hpp"
#include "benthad/matrix.hpp"
#include "benthad/perm.hpp"

namespace fixtures {

using benthad::ColoredDigraph;
using benthad::HadamardMatrix;
using benthad::MonomialMatrix;
using benthad::Perm;
using benthad::SignVector;

using Grid = std::vector<std::vector<int>>;

inline Grid to_grid(const HadamardMatrix& h)
{
    int v = h.order();
    Grid g(static_cast<size_t>(v), std::vector<int>(static_cast<size_t>(v)));
    for (int i = 0; i < v; ++i)
        for (int j = 0; j < v; ++j)
            g[i][j] = h.at(i, j);
    return g;
}

inline Grid matmul(const Grid& a, const Grid& b)
{
    size_t n = a.size();
    Grid c(n, std::vector<int>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k)
            for (size_t j = 0; j < n; ++j)
                c[i][j] += a[i][k] * b[k][j];
    return c;
}

inline Grid mono_grid(const MonomialMatrix& m)
{
    int v = m.size();
    Grid g(static_cast<size_t>(v), std::vector<int>(static_cast<size_t>(v), 0));
    for (int i = 0; i < v; ++i)
        g[m.perm()[i]][i] = m.signs()[i];
    return g;
}

/// Bush-type Hadamard matrix of order (2u)^2 from a Hadamard matrix of
/// order 2u: block-circulant over the rank-one blocks C_i = r_i^t r_i of
/// the normalized input (C_0 = J on the diagonal, zero-sum blocks off it).
inline HadamardMatrix bush_from(const HadamardMatrix& k)
{
    HadamardMatrix n = benthad::normalize(k).matrix;
    int s = n.order();
    int v = s * s;
    Grid g(static_cast<size_t>(v), std::vector<int>(static_cast<size_t>(v)));
    for (int bi = 0; bi < s; ++bi)
        for (int bj = 0; bj < s; ++bj) {
            int r = ((bj - bi) % s + s) % s;
            for (int a = 0; a < s; ++a)
                for (int b = 0; b < s; ++b)
                    g[bi * s + a][bj * s + b] = n.at(r, a) * n.at(r, b);
        }
    return HadamardMatrix::from_grid(g);
}

/// The Hadamard-database-style representative of the order-16 Sylvester
/// equivalence class: index 0 plus the fifteen 2-subsets of a 6-set,
/// entry -1 exactly where two distinct subsets intersect. This is the
/// matrix behind the published order-16 group orders and its count
/// of 140 self-dual sequences.
inline HadamardMatrix t6_representative()
{
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            pairs.emplace_back(a, b);
    Grid g(16, std::vector<int>(16, 1));
    for (int x = 0; x < 15; ++x)
        for (int y = 0; y < 15; ++y) {
            if (x == y)
                continue;
            auto [a, b] = pairs[x];
            auto [c, d] = pairs[y];
            if (a == c || a == d || b == c || b == d)
                g[1 + x][1 + y] = -1;
        }
    return HadamardMatrix::from_grid(g);
}

// ------------------------------------------------------------- bent oracles

inline std::vector<int> matvec(const HadamardMatrix& h, const SignVector& x)
{
    int v = h.order();
    std::vector<int> out(static_cast<size_t>(v), 0);
    for (int i = 0; i < v; ++i)
        for (int j = 0; j < v; ++j)
            out[i] += h.at(i, j) * x[j];
    return out;
}

inline SignVector mask_vector(int v, unsigned mask)
{
    std::vector<int> s(static_cast<size_t>(v));
    for (int j = 0; j < v; ++j)
        s[j] = (mask >> j) & 1 ? -1 : 1;
    return SignVector(std::move(s));
}

/// All self-dual (or bent) sequences by direct 2^v scan with plain
/// integer arithmetic.
inline std::vector<SignVector> brute_search(const HadamardMatrix& h,
                                            bool self_dual_only)
{
    int v = h.order();
    int s2 = 0;
    while (s2 * s2 < v)
        ++s2;
    std::vector<SignVector> out;
    for (unsigned mask = 0; mask < (1u << v); ++mask) {
        SignVector x = mask_vector(v, mask);
        auto hx = matvec(h, x);
        bool ok = true;
        for (int i = 0; i < v && ok; ++i) {
            if (self_dual_only)
                ok = hx[i] == s2 * x[i];
            else
                ok = hx[i] == s2 || hx[i] == -s2;
        }
        if (ok)
            out.push_back(std::move(x));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// --------------------------------------------------------- monomial helpers

/// All 2^v v! monomial matrices; v <= 4 intended.
inline std::vector<MonomialMatrix> all_monomials(int v)
{
    std::vector<int> p(static_cast<size_t>(v));
    std::iota(p.begin(), p.end(), 0);
    std::vector<MonomialMatrix> out;
    do {
        for (unsigned mask = 0; mask < (1u << v); ++mask) {
            std::vector<int> s(static_cast<size_t>(v));
            for (int i = 0; i < v; ++i)
                s[i] = (mask >> i) & 1 ? -1 : 1;
            out.emplace_back(p, s);
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline MonomialMatrix random_monomial(int v, std::mt19937_64& rng)
{
    std::vector<int> p(static_cast<size_t>(v)), s(static_cast<size_t>(v));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    for (int i = 0; i < v; ++i)
        s[i] = rng() % 2 ? 1 : -1;
    return MonomialMatrix(std::move(p), std::move(s));
}

inline bool commutes_naive(const MonomialMatrix& p, const HadamardMatrix& h)
{
    return matmul(mono_grid(p), to_grid(h)) == matmul(to_grid(h), mono_grid(p));
}

/// Monomial matrix as a permutation of the strong graph's 2v vertices.
inline Perm encode_strong(const MonomialMatrix& m)
{
    int v = m.size();
    std::vector<int> img(static_cast<size_t>(2) * v);
    for (int i = 0; i < v; ++i) {
        int base = 2 * m.perm()[i] + (m.signs()[i] < 0 ? 1 : 0);
        img[2 * i] = base;
        img[2 * i + 1] = base ^ 1;
    }
    return Perm(std::move(img));
}

// ---------------------------------------------------------- digraph helpers

inline long brute_digraph_autos(const ColoredDigraph& g)
{
    std::vector<int> p(static_cast<size_t>(g.n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<char>> adj(static_cast<size_t>(g.n),
                                       std::vector<char>(static_cast<size_t>(g.n), 0));
    for (auto [a, b] : g.arcs)
        adj[a][b] = 1;
    long cnt = 0;
    do {
        bool ok = true;
        for (int i = 0; i < g.n && ok; ++i) {
            if (g.colors[p[i]] != g.colors[i]) {
                ok = false;
                break;
            }
            for (int j = 0; j < g.n; ++j)
                if (adj[i][j] != adj[p[i]][p[j]]) {
                    ok = false;
                    break;
                }
        }
        if (ok)
            ++cnt;
    } while (std::next_permutation(p.begin(), p.end()));
    return cnt;
}

inline std::vector<int> random_labeling(int n, std::mt19937_64& rng)
{
    std::vector<int> p(static_cast<size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

} // namespace fixtures

#endif
