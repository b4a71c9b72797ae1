#include "benthad/symmetry.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace benthad {

namespace {

// P*H and H*Q as plain grids, for the PH = HP style re-checks
std::vector<int> mono_left(const MonomialMatrix& p, const HadamardMatrix& h)
{
    int v = h.order();
    std::vector<int> out(static_cast<size_t>(v) * v);
    for (int i = 0; i < v; ++i)
        for (int j = 0; j < v; ++j)
            out[static_cast<size_t>(p.perm()[i]) * v + j] = p.signs()[i] * h.at(i, j);
    return out;
}

std::vector<int> mono_right(const HadamardMatrix& h, const MonomialMatrix& q)
{
    int v = h.order();
    std::vector<int> out(static_cast<size_t>(v) * v);
    for (int i = 0; i < v; ++i)
        for (int j = 0; j < v; ++j)
            out[static_cast<size_t>(i) * v + j] = h.at(i, q.perm()[j]) * q.signs()[j];
    return out;
}

bool commutes(const MonomialMatrix& p, const HadamardMatrix& h)
{
    return mono_left(p, h) == mono_right(h, p);
}

// block-respecting decode: graph vertices 2i, 2i+1 make up matrix index i
MonomialMatrix decode_blocks(const Perm& g, int v, int offset_src, int offset_dst)
{
    std::vector<int> perm(static_cast<size_t>(v)), signs(static_cast<size_t>(v));
    for (int i = 0; i < v; ++i) {
        int a = g[offset_src + 2 * i];
        int b = g[offset_src + 2 * i + 1];
        if (a < offset_dst || a >= offset_dst + 2 * v || (a ^ 1) != b)
            throw VerificationFailureError(
                "graph automorphism does not preserve vertex blocks");
        perm[i] = (a - offset_dst) / 2;
        signs[i] = (a - offset_dst) % 2 == 0 ? 1 : -1;
    }
    return MonomialMatrix(std::move(perm), std::move(signs));
}

} // namespace

StrongAutGroup saut(const HadamardMatrix& h, int graph_limit)
{
    auto res = automorphisms(strong_graph(h), graph_limit);
    StrongAutGroup out;
    out.order = res.group.order();
    for (const auto& g : res.group.generators()) {
        MonomialMatrix p = decode_blocks(g, h.order(), 0, 0);
        if (!commutes(p, h))
            throw VerificationFailureError("decoded SAut generator fails PH = HP");
        out.generators.push_back(std::move(p));
    }
    return out;
}

PermutationGroup c_group(const HadamardMatrix& h, int graph_limit)
{
    auto res = automorphisms(gamma_graph(h), graph_limit);
    for (const auto& g : res.group.generators())
        if (!commutes(MonomialMatrix::permutation(g.img), h))
            throw VerificationFailureError("decoded C(H) generator fails PH = HP");
    return res.group;
}

IncidenceSystem IncidenceSystem::of(const HadamardMatrix& h)
{
    IncidenceSystem s;
    s.v = h.order();
    s.incidence.assign(static_cast<size_t>(s.v),
                       std::vector<int>(static_cast<size_t>(s.v), 0));
    for (int i = 0; i < s.v; ++i)
        for (int j = 0; j < s.v; ++j)
            s.incidence[i][j] = h.at(i, j) < 0 ? 1 : 0;
    return s;
}

std::vector<Perm> polarities(const HadamardMatrix& h, long enumeration_limit,
                             int graph_limit)
{
    if (!h.symmetric())
        throw NotSymmetricError("polarities are defined for symmetric H only");
    PermutationGroup c = c_group(h, graph_limit);
    auto a = IncidenceSystem::of(h);
    int v = h.order();
    std::vector<Perm> out;
    c.for_each_element(
        [&](const Perm& p) {
            for (int i = 0; i < v; ++i)
                if (p[p[i]] != i)
                    return;
            // involution in C(H): as a matrix P = P^t; re-check the polarity
            // law P A = A^t P, i.e. A_ij = A_{p(j) p(i)}
            for (int i = 0; i < v; ++i)
                for (int j = 0; j < v; ++j)
                    if (a.incidence[i][j] != a.incidence[p[j]][p[i]])
                        throw VerificationFailureError(
                            "involution in C(H) is not a polarity");
            out.push_back(p);
        },
        BigInt(enumeration_limit));
    std::sort(out.begin(), out.end());
    return out;
}

FullAutGroup full_aut(const HadamardMatrix& h, int graph_limit)
{
    int v = h.order();
    auto res = automorphisms(pair_graph(h), graph_limit);
    FullAutGroup out;
    out.order = res.group.order();
    for (const auto& g : res.group.generators()) {
        MonomialMatrix p = decode_blocks(g, v, 0, 0);
        MonomialMatrix q = decode_blocks(g, v, 2 * v, 2 * v).transposed();
        if (!(apply_monomial(p, q, h) == h))
            throw VerificationFailureError("decoded Aut generator fails PHQ = H");
        out.generator_pairs.emplace_back(std::move(p), std::move(q));
    }
    return out;
}

std::optional<MonomialMatrix> strong_equivalent(const HadamardMatrix& h,
                                                const HadamardMatrix& k,
                                                int graph_limit)
{
    if (h.order() != k.order())
        throw OrderMismatchError("strong_equivalent: orders differ");
    int v = h.order();
    auto ch = automorphisms(strong_graph(h), graph_limit).canonical;
    auto ck = automorphisms(strong_graph(k), graph_limit).canonical;
    if (!(ch == ck))
        return std::nullopt;
    // compose the two canonical labelings into an isomorphism G(H) -> G(K)
    std::vector<int> from_pos(static_cast<size_t>(2) * v);
    for (int x = 0; x < 2 * v; ++x)
        from_pos[ck.labeling[x]] = x;
    std::vector<int> iso(static_cast<size_t>(2) * v);
    for (int x = 0; x < 2 * v; ++x)
        iso[x] = from_pos[ch.labeling[x]];
    MonomialMatrix p = decode_blocks(Perm(std::move(iso)), v, 0, 0);
    if (apply_monomial(p, p.transposed(), h) == k)
        return p;
    throw VerificationFailureError("canonical forms matched but witness failed");
}

// ------------------------------------------------------ extended affine maps

std::uint32_t gf2_matvec(const std::vector<std::uint32_t>& rows, int m,
                         std::uint32_t x)
{
    std::uint32_t y = 0;
    for (int i = 0; i < m; ++i)
        y |= static_cast<std::uint32_t>(std::popcount(rows[i] & x) & 1) << i;
    return y;
}

std::optional<std::vector<std::uint32_t>> gf2_inverse(
    const std::vector<std::uint32_t>& rows, int m)
{
    std::vector<std::uint32_t> a(rows), inv(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i)
        inv[i] = 1u << i;
    int r = 0;
    for (int c = 0; c < m; ++c) {
        int sel = -1;
        for (int i = r; i < m; ++i)
            if ((a[i] >> c) & 1) {
                sel = i;
                break;
            }
        if (sel < 0)
            return std::nullopt;
        std::swap(a[sel], a[r]);
        std::swap(inv[sel], inv[r]);
        for (int i = 0; i < m; ++i)
            if (i != r && ((a[i] >> c) & 1)) {
                a[i] ^= a[r];
                inv[i] ^= inv[r];
            }
        ++r;
    }
    return inv;
}

SignVector apply_eat(const ExtendedAffineTransform& t, const SignVector& f)
{
    int v = 1 << t.m;
    if (f.size() != v)
        throw DimensionMismatchError("apply_eat: vector length is not 2^m");
    auto ainv = gf2_inverse(t.a, t.m);
    if (!ainv)
        throw SingularMatrixError("apply_eat: A is singular");
    std::vector<int> out(static_cast<size_t>(v));
    for (int x = 0; x < v; ++x) {
        std::uint32_t src = gf2_matvec(*ainv, t.m,
                                       static_cast<std::uint32_t>(x) ^ t.b);
        int sgn = (std::popcount(t.d & static_cast<std::uint32_t>(x)) & 1) ? -1 : 1;
        out[x] = f[static_cast<int>(src)] * sgn * t.c;
    }
    return SignVector(std::move(out));
}

MonomialMatrix eat_monomial(const ExtendedAffineTransform& t)
{
    int v = 1 << t.m;
    if (!gf2_inverse(t.a, t.m))
        throw SingularMatrixError("eat_monomial: A is singular");
    // (M F)(x) = F(A^{-1}(x+b)) * (-1)^{<d,x>} * c maps source index
    // i = A^{-1}(x+b), i.e. x = A i + b
    std::vector<int> perm(static_cast<size_t>(v)), signs(static_cast<size_t>(v));
    for (int i = 0; i < v; ++i) {
        std::uint32_t x = gf2_matvec(t.a, t.m, static_cast<std::uint32_t>(i)) ^ t.b;
        perm[i] = static_cast<int>(x);
        signs[i] = ((std::popcount(t.d & x) & 1) ? -1 : 1) * t.c;
    }
    return MonomialMatrix(std::move(perm), std::move(signs));
}

bool eat_in_saut(const ExtendedAffineTransform& t)
{
    if (!gf2_inverse(t.a, t.m))
        throw SingularMatrixError("eat_in_saut: A is singular");
    bool orth = true;
    for (int i = 0; i < t.m && orth; ++i)
        for (int j = i; j < t.m; ++j) {
            int want = i == j ? 1 : 0;
            if ((std::popcount(t.a[i] & t.a[j]) & 1) != want) {
                orth = false;
                break;
            }
        }
    bool pred = orth && t.b == t.d && (std::popcount(t.b) & 1) == 0;

    HadamardMatrix s = HadamardMatrix::sylvester(t.m);
    bool direct = commutes(eat_monomial(t), s);
    if (pred != direct)
        throw VerificationFailureError(
            "extended affine transform: predicate and direct test disagree");
    return pred;
}

std::vector<std::vector<std::uint32_t>> orth_group(int m)
{
    if (m < 1)
        throw BadEntryError("orth_group: m must be positive");
    if (m > 5)
        throw SizeLimitError("orth_group enumerates 2^(m^2) matrices; m > 5 refused");
    std::vector<std::vector<std::uint32_t>> out;
    std::uint64_t total = 1ull << (m * m);
    std::uint32_t mask = (1u << m) - 1;
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        std::vector<std::uint32_t> rows(static_cast<size_t>(m));
        for (int r = 0; r < m; ++r)
            rows[r] = static_cast<std::uint32_t>(bits >> (m * r)) & mask;
        bool ok = true;
        for (int i = 0; i < m && ok; ++i)
            for (int j = i; j < m; ++j) {
                int want = i == j ? 1 : 0;
                if ((std::popcount(rows[i] & rows[j]) & 1) != want) {
                    ok = false;
                    break;
                }
            }
        if (ok)
            out.push_back(std::move(rows));
    }
    return out;
}

} // namespace benthad
