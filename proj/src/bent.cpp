#include "benthad/bent.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <chrono>
#include <thread>

namespace benthad {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

std::vector<int> mat_vec(const HadamardMatrix& h, const SignVector& x)
{
    int v = h.order();
    std::vector<int> out(static_cast<size_t>(v), 0);
    for (int i = 0; i < v; ++i) {
        int acc = 0;
        for (int j = 0; j < v; ++j)
            acc += h.at(i, j) * x[j];
        out[i] = acc;
    }
    return out;
}

void finalize(SearchResult& r, const HadamardMatrix& h)
{
    std::sort(r.sequences.begin(), r.sequences.end());
    r.sequences.erase(std::unique(r.sequences.begin(), r.sequences.end()),
                      r.sequences.end());
    for (const auto& x : r.sequences)
        if (!is_self_dual_bent(h, x))
            throw VerificationFailureError("search produced a non-solution");
}

} // namespace

DualResult dual(const HadamardMatrix& h, const SignVector& x)
{
    int u = h.require_root_u();
    if (x.size() != h.order())
        throw DimensionMismatchError("dual: vector length != order");
    auto hx = mat_vec(h, x);
    std::vector<int> y(hx.size());
    for (size_t i = 0; i < hx.size(); ++i) {
        if (hx[i] != 2 * u && hx[i] != -2 * u)
            return DualResult{};
        y[i] = hx[i] > 0 ? 1 : -1;
    }
    SignVector yv(std::move(y));
    // certify: Y is bent attached to H^t, i.e. H^t Y = 2u X
    auto hty = mat_vec(h.transposed(), yv);
    for (size_t i = 0; i < hty.size(); ++i)
        if (hty[i] != 2 * u * x[static_cast<int>(i)])
            throw VerificationFailureError("dual certification failed");
    DualResult r;
    r.cls = yv == x ? BentClass::self_dual : BentClass::bent;
    r.dual = std::move(yv);
    return r;
}

bool is_bent(const HadamardMatrix& h, const SignVector& x)
{
    return dual(h, x).cls != BentClass::not_bent;
}

bool is_self_dual_bent(const HadamardMatrix& h, const SignVector& x)
{
    return dual(h, x).cls == BentClass::self_dual;
}

HadamardCode HadamardCode::of(const HadamardMatrix& h)
{
    HadamardCode c;
    c.codewords.reserve(static_cast<size_t>(2) * h.order());
    for (int j = 0; j < h.order(); ++j) {
        auto col = h.column(j);
        c.codewords.push_back(col.negated());
        c.codewords.push_back(std::move(col));
    }
    return c;
}

int covering_distance(const HadamardMatrix& h, const SignVector& x)
{
    if (x.size() != h.order())
        throw DimensionMismatchError("covering_distance: length mismatch");
    auto code = HadamardCode::of(h);
    int best = h.order() + 1;
    for (const auto& c : code.codewords) {
        int d = 0;
        for (int i = 0; i < x.size(); ++i)
            d += c[i] != x[i];
        best = std::min(best, d);
    }
    return best;
}

std::vector<int> greedy_minor(const RatMatrix& b, bool* zero_first_column)
{
    if (zero_first_column)
        *zero_first_column = false;
    int k = static_cast<int>(b.size());
    int v = k == 0 ? 0 : static_cast<int>(b[0].size());
    std::vector<int> j;
    // incremental echelon basis of the selected columns
    RatMatrix ech;
    for (int col = 0; col < v && static_cast<int>(j.size()) < k; ++col) {
        RatRow c(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i)
            c[i] = b[i][col];
        if (col == 0 && zero_first_column &&
            std::all_of(c.begin(), c.end(), [](const Rat& x) { return x == 0; }))
            *zero_first_column = true;
        // reduce against echelon rows
        RatRow w = c;
        for (const auto& row : ech) {
            size_t lead = 0;
            while (lead < row.size() && row[lead] == 0)
                ++lead;
            if (lead < w.size() && w[lead] != 0) {
                Rat f = w[lead] / row[lead];
                for (size_t t = lead; t < w.size(); ++t)
                    w[t] -= f * row[t];
            }
        }
        if (std::any_of(w.begin(), w.end(), [](const Rat& x) { return x != 0; })) {
            ech.push_back(std::move(w));
            j.push_back(col);
        }
    }
    assert(static_cast<int>(j.size()) == rank(b));
    return j;
}

EigenBasis eigenspace_basis(const HadamardMatrix& h)
{
    int u = h.require_root_u();
    int v = h.order();
    RatMatrix m(static_cast<size_t>(v), RatRow(static_cast<size_t>(v)));
    for (int i = 0; i < v; ++i)
        for (int j = 0; j < v; ++j)
            m[i][j] = h.at(i, j) - (i == j ? 2 * u : 0);
    EigenBasis eb;
    eb.b = kernel_basis(m);
    eb.k = static_cast<int>(eb.b.size());
    if (eb.k == 0)
        throw EmptyEigenspaceError(
            "eigenvalue " + std::to_string(2 * u) +
            " does not occur: no self-dual bent sequences exist");
    assert(eb.k <= v);
    eb.j = greedy_minor(eb.b, &eb.zero_first_column);
    RatMatrix bk(static_cast<size_t>(eb.k), RatRow(static_cast<size_t>(eb.k)));
    for (int r = 0; r < eb.k; ++r)
        for (int c = 0; c < eb.k; ++c)
            bk[r][c] = eb.b[r][eb.j[c]];
    auto inv = inverse(bk);
    if (!inv)
        throw VerificationFailureError("greedy minor is singular");
    eb.bk_inverse = std::move(*inv);
    return eb;
}

// ------------------------------------------------------------------ searches

SearchResult search_exhaustive(const HadamardMatrix& h, SearchMode mode,
                               int exhaust_limit, int threads)
{
    auto t0 = std::chrono::steady_clock::now();
    int u = h.require_root_u();
    int v = h.order();
    if (v > exhaust_limit)
        throw SizeLimitError("exhaustive search is exponential in v; order " +
                             std::to_string(v) + " exceeds limit " +
                             std::to_string(exhaust_limit));

    // rows bit-packed, bit j set iff H_ij = -1; then
    //   (H X)_i = v - 2*popcount(row_i ^ x)  for x with bit j = [X_j = -1]
    std::vector<std::uint32_t> rows(static_cast<size_t>(v), 0);
    for (int i = 0; i < v; ++i)
        for (int j = 0; j < v; ++j)
            if (h.at(i, j) < 0)
                rows[i] |= 1u << j;

    std::uint64_t total = 1ull << v;
    int nthreads = std::max(1, threads);
    std::vector<std::vector<std::uint32_t>> found(static_cast<size_t>(nthreads));

    auto worker = [&](int t) {
        std::uint64_t lo = total * t / nthreads;
        std::uint64_t hi = total * (t + 1) / nthreads;
        auto& out = found[static_cast<size_t>(t)];
        for (std::uint64_t x = lo; x < hi; ++x) {
            auto xm = static_cast<std::uint32_t>(x);
            bool ok = true;
            for (int i = 0; i < v; ++i) {
                int dot = v - 2 * std::popcount(rows[i] ^ xm);
                if (mode == SearchMode::self_dual) {
                    int want = (xm >> i) & 1 ? -2 * u : 2 * u;
                    if (dot != want) {
                        ok = false;
                        break;
                    }
                } else if (dot != 2 * u && dot != -2 * u) {
                    ok = false;
                    break;
                }
            }
            if (ok)
                out.push_back(xm);
        }
    };

    if (nthreads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back(worker, t);
        for (auto& th : pool)
            th.join();
    }

    SearchResult r;
    r.method = SearchMethod::exhaust;
    r.stats.k = v;
    r.stats.candidates = total;
    for (const auto& chunk : found)
        for (std::uint32_t xm : chunk) {
            std::vector<int> s(static_cast<size_t>(v));
            for (int j = 0; j < v; ++j)
                s[j] = (xm >> j) & 1 ? -1 : 1;
            r.sequences.emplace_back(std::move(s));
        }
    std::sort(r.sequences.begin(), r.sequences.end());
    r.sequences.erase(std::unique(r.sequences.begin(), r.sequences.end()),
                      r.sequences.end());
    for (const auto& x : r.sequences) {
        auto cls = dual(h, x).cls;
        bool ok = mode == SearchMode::self_dual ? cls == BentClass::self_dual
                                                : cls != BentClass::not_bent;
        if (!ok)
            throw VerificationFailureError("exhaustive search returned a non-solution");
    }
    r.stats.elapsed_ms = ms_since(t0);
    return r;
}

namespace {

// Integer form of the eigenspace enumeration: X = Z * (Bk^{-1} B) and
// Bk^{-1} B = N / scale with N integral, so the acceptance test becomes
// |(Z N)_j| == scale for every j. Walks Z in Gray-code order updating
// the running sums incrementally.
template <typename Int>
void enumerate_eigen(const std::vector<std::vector<Int>>& n, const Int& scale,
                     int k, int v, std::uint64_t lo, std::uint64_t hi,
                     std::vector<std::vector<int>>& out)
{
    std::vector<Int> w(static_cast<size_t>(v), Int(0));
    std::vector<int> z(static_cast<size_t>(k), 1);
    // initialize at Gray code of lo
    std::uint64_t g = lo ^ (lo >> 1);
    for (int t = 0; t < k - 1; ++t)
        if ((g >> t) & 1)
            z[t + 1] = -1;
    for (int j = 0; j < v; ++j) {
        Int acc(0);
        for (int t = 0; t < k; ++t)
            acc += z[t] > 0 ? n[t][j] : -n[t][j];
        w[j] = acc;
    }
    for (std::uint64_t i = lo;; ++i) {
        bool ok = true;
        for (int j = 0; j < v; ++j)
            if (w[j] != scale && w[j] != -scale) {
                ok = false;
                break;
            }
        if (ok) {
            std::vector<int> x(static_cast<size_t>(v));
            for (int j = 0; j < v; ++j)
                x[j] = w[j] > 0 ? 1 : -1;
            out.push_back(std::move(x));
        }
        if (i + 1 >= hi)
            break;
        int flip = std::countr_zero(i + 1) + 1; // Gray neighbor flips z[flip]
        z[flip] = -z[flip];
        const auto& nf = n[flip];
        if (z[flip] > 0)
            for (int j = 0; j < v; ++j) {
                w[j] += nf[j];
                w[j] += nf[j];
            }
        else
            for (int j = 0; j < v; ++j) {
                w[j] -= nf[j];
                w[j] -= nf[j];
            }
    }
}

} // namespace

SearchResult search_eigenspace(const HadamardMatrix& h, int k_limit, int threads)
{
    auto t0 = std::chrono::steady_clock::now();
    EigenBasis eb = eigenspace_basis(h);
    int v = h.order();
    int k = eb.k;
    if (k > k_limit)
        throw DimensionTooLargeError("eigenspace dimension " + std::to_string(k) +
                                     " exceeds limit " + std::to_string(k_limit));

    SearchResult r;
    r.method = SearchMethod::eigen;
    r.stats.k = k;

    bool hopeless = eb.zero_first_column;
    if (!hopeless) {
        // any identically-zero column rules out +-1 vectors just the same
        for (int j = 0; j < v && !hopeless; ++j) {
            bool zero = true;
            for (int i = 0; i < k; ++i)
                if (eb.b[i][j] != 0) {
                    zero = false;
                    break;
                }
            hopeless = zero;
        }
    }
    if (hopeless) {
        r.stats.elapsed_ms = ms_since(t0);
        return r;
    }

    RatMatrix m = matmul(eb.bk_inverse, eb.b); // k x v, identity on columns J
    BigInt scale = 1;
    for (const auto& row : m)
        for (const auto& x : row)
            scale = boost::multiprecision::lcm(scale, BigInt(denominator(x)));
    std::vector<std::vector<BigInt>> n(static_cast<size_t>(k),
                                       std::vector<BigInt>(static_cast<size_t>(v)));
    BigInt maxabs = 0;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < v; ++j) {
            Rat scaled = m[i][j] * Rat(scale);
            assert(denominator(scaled) == 1);
            n[i][j] = numerator(scaled);
            BigInt a = abs(n[i][j]);
            if (a > maxabs)
                maxabs = a;
        }

    std::uint64_t total = 1ull << (k - 1); // first selected sign fixed to +1
    r.stats.candidates = total;
    int nthreads = static_cast<int>(
        std::min<std::uint64_t>(static_cast<std::uint64_t>(std::max(1, threads)), total));
    std::vector<std::vector<std::vector<int>>> found(static_cast<size_t>(nthreads));

    // int64 fast path whenever running sums cannot overflow
    bool fits = maxabs * k < (BigInt(1) << 60) && scale < (BigInt(1) << 60);
    if (fits) {
        std::vector<std::vector<std::int64_t>> n64(
            static_cast<size_t>(k), std::vector<std::int64_t>(static_cast<size_t>(v)));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < v; ++j)
                n64[i][j] = static_cast<std::int64_t>(n[i][j]);
        auto scale64 = static_cast<std::int64_t>(scale);
        auto worker = [&](int t) {
            enumerate_eigen<std::int64_t>(n64, scale64, k, v, total * t / nthreads,
                                          total * (t + 1) / nthreads,
                                          found[static_cast<size_t>(t)]);
        };
        if (nthreads == 1) {
            worker(0);
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < nthreads; ++t)
                pool.emplace_back(worker, t);
            for (auto& th : pool)
                th.join();
        }
    } else {
        auto worker = [&](int t) {
            enumerate_eigen<BigInt>(n, scale, k, v, total * t / nthreads,
                                    total * (t + 1) / nthreads,
                                    found[static_cast<size_t>(t)]);
        };
        if (nthreads == 1) {
            worker(0);
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < nthreads; ++t)
                pool.emplace_back(worker, t);
            for (auto& th : pool)
                th.join();
        }
    }

    for (auto& chunk : found)
        for (auto& x : chunk) {
            SignVector sv(std::move(x));
            r.sequences.push_back(sv.negated()); // mirror: negation closure
            r.sequences.push_back(std::move(sv));
        }
    finalize(r, h);
    r.stats.elapsed_ms = ms_since(t0);
    return r;
}

SelfdualizeResult selfdualize(const HadamardMatrix& h, const SignVector& x)
{
    auto d = dual(h, x);
    if (d.cls == BentClass::not_bent)
        throw NotBentError("selfdualize: X is not bent for H");
    int v = h.order();
    std::vector<int> s(static_cast<size_t>(v));
    for (int i = 0; i < v; ++i)
        s[i] = x[i] * (*d.dual)[i];
    MonomialMatrix sm = MonomialMatrix::diagonal(std::move(s));
    HadamardMatrix hp = apply_monomial(sm, MonomialMatrix::identity(v), h);
    if (!is_self_dual_bent(hp, x))
        throw VerificationFailureError("selfdualize postcondition failed");
    return SelfdualizeResult{std::move(sm), std::move(hp)};
}

SignVector kron_seq(const HadamardMatrix& u, const SignVector& x,
                    const HadamardMatrix& v, const SignVector& y)
{
    if (!is_self_dual_bent(u, x))
        throw NotSelfDualError("kron_seq: X is not self-dual for U");
    if (!is_self_dual_bent(v, y))
        throw NotSelfDualError("kron_seq: Y is not self-dual for V");
    int w = v.order();
    std::vector<int> k(static_cast<size_t>(u.order()) * w);
    for (int i = 0; i < u.order(); ++i)
        for (int j = 0; j < w; ++j)
            k[static_cast<size_t>(i) * w + j] = x[i] * y[j];
    SignVector out(std::move(k));
    HadamardMatrix uv = HadamardMatrix::kronecker(u, v, u.order() * w);
    if (!is_self_dual_bent(uv, out))
        throw VerificationFailureError("kron_seq postcondition failed");
    return out;
}

} // namespace benthad
