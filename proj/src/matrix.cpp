#include "benthad/matrix.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "benthad/numeric.hpp"

namespace benthad {

// ---------------------------------------------------------------- SignVector

SignVector::SignVector(std::vector<int> signs) : signs_(std::move(signs))
{
    for (int s : signs_)
        if (s != 1 && s != -1)
            throw BadEntryError("sign vector entry must be +1 or -1");
}

SignVector SignVector::all_one(int v)
{
    return SignVector(std::vector<int>(static_cast<size_t>(v), 1));
}

SignVector SignVector::from_string(const std::string& s)
{
    std::vector<int> out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '+')
            out.push_back(1);
        else if (c == '-')
            out.push_back(-1);
        else
            throw BadEntryError("sign string must use only '+' and '-'");
    }
    return SignVector(std::move(out));
}

SignVector SignVector::negated() const
{
    std::vector<int> out(signs_);
    for (int& s : out)
        s = -s;
    return SignVector(std::move(out));
}

std::string SignVector::str() const
{
    std::string s;
    s.reserve(signs_.size());
    for (int x : signs_)
        s.push_back(x > 0 ? '+' : '-');
    return s;
}

bool SignVector::operator<(const SignVector& o) const
{
    // + sorts before -, then by position
    for (size_t i = 0; i < signs_.size() && i < o.signs_.size(); ++i)
        if (signs_[i] != o.signs_[i])
            return signs_[i] > o.signs_[i];
    return signs_.size() < o.signs_.size();
}

// ------------------------------------------------------------ MonomialMatrix

MonomialMatrix::MonomialMatrix(std::vector<int> perm, std::vector<int> signs)
    : perm_(std::move(perm)), signs_(std::move(signs))
{
    if (perm_.size() != signs_.size())
        throw DimensionMismatchError("monomial permutation/sign length mismatch");
    std::vector<char> seen(perm_.size(), 0);
    for (int p : perm_) {
        if (p < 0 || p >= static_cast<int>(perm_.size()) || seen[p])
            throw BadEntryError("monomial matrix: not a permutation");
        seen[p] = 1;
    }
    for (int s : signs_)
        if (s != 1 && s != -1)
            throw BadEntryError("monomial matrix: sign must be +1 or -1");
}

MonomialMatrix MonomialMatrix::identity(int v)
{
    std::vector<int> p(static_cast<size_t>(v));
    std::iota(p.begin(), p.end(), 0);
    return MonomialMatrix(std::move(p), std::vector<int>(static_cast<size_t>(v), 1));
}

MonomialMatrix MonomialMatrix::diagonal(std::vector<int> signs)
{
    std::vector<int> p(signs.size());
    std::iota(p.begin(), p.end(), 0);
    return MonomialMatrix(std::move(p), std::move(signs));
}

MonomialMatrix MonomialMatrix::permutation(std::vector<int> perm)
{
    auto n = perm.size();
    return MonomialMatrix(std::move(perm), std::vector<int>(n, 1));
}

int MonomialMatrix::entry(int row, int col) const
{
    return perm_[col] == row ? signs_[col] : 0;
}

bool MonomialMatrix::is_diagonal() const
{
    for (int i = 0; i < size(); ++i)
        if (perm_[i] != i)
            return false;
    return true;
}

bool MonomialMatrix::is_permutation() const
{
    return std::all_of(signs_.begin(), signs_.end(), [](int s) { return s == 1; });
}

bool MonomialMatrix::is_identity() const
{
    return is_diagonal() && is_permutation();
}

MonomialMatrix MonomialMatrix::transposed() const
{
    int n = size();
    std::vector<int> p(static_cast<size_t>(n)), s(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        p[perm_[i]] = i;
        s[perm_[i]] = signs_[i];
    }
    return MonomialMatrix(std::move(p), std::move(s));
}

MonomialMatrix MonomialMatrix::operator*(const MonomialMatrix& o) const
{
    if (size() != o.size())
        throw DimensionMismatchError("monomial product size mismatch");
    int n = size();
    // (this*o) e_i = o.signs[i] * this * e_{o.perm[i]}
    std::vector<int> p(static_cast<size_t>(n)), s(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        p[i] = perm_[o.perm_[i]];
        s[i] = signs_[o.perm_[i]] * o.signs_[i];
    }
    return MonomialMatrix(std::move(p), std::move(s));
}

SignVector MonomialMatrix::apply(const SignVector& x) const
{
    if (x.size() != size())
        throw DimensionMismatchError("monomial apply size mismatch");
    std::vector<int> out(static_cast<size_t>(size()));
    for (int i = 0; i < size(); ++i)
        out[perm_[i]] = signs_[i] * x[i];
    return SignVector(std::move(out));
}

// ----------------------------------------------------------- prime power GF

namespace {

// Small finite field GF(p^e) with elements encoded as base-p digit strings
// (coefficient vectors of polynomials over F_p). Only what the Paley
// construction needs: element enumeration, subtraction, quadratic character.
class GaloisField {
public:
    explicit GaloisField(int p, int e) : p_(p), e_(e)
    {
        q_ = 1;
        for (int i = 0; i < e_; ++i)
            q_ *= p_;
        if (e_ > 1)
            find_irreducible();
        build_square_table();
    }

    int q() const { return q_; }

    int sub(int a, int b) const
    {
        int out = 0, mul = 1;
        for (int i = 0; i < e_; ++i) {
            int da = a % p_, db = b % p_;
            out += ((da - db + p_) % p_) * mul;
            a /= p_;
            b /= p_;
            mul *= p_;
        }
        return out;
    }

    // chi(0)=0, chi(square)=1, chi(non-square)=-1
    int chi(int a) const
    {
        if (a == 0)
            return 0;
        return is_square_[a] ? 1 : -1;
    }

private:
    int mul(int a, int b) const
    {
        // polynomial product reduced modulo the irreducible polynomial
        std::vector<int> prod(2 * static_cast<size_t>(e_), 0);
        std::vector<int> da(static_cast<size_t>(e_)), db(static_cast<size_t>(e_));
        for (int i = 0; i < e_; ++i) {
            da[i] = a % p_;
            a /= p_;
            db[i] = b % p_;
            b /= p_;
        }
        for (int i = 0; i < e_; ++i)
            for (int j = 0; j < e_; ++j)
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        for (int d = 2 * e_ - 2; d >= e_; --d) {
            int c = prod[d];
            if (c == 0)
                continue;
            prod[d] = 0;
            // x^d = x^{d-e} * (-(irr mod x^e))
            for (int i = 0; i < e_; ++i)
                prod[d - e_ + i] = (prod[d - e_ + i] + c * (p_ - irr_[i])) % p_;
        }
        int out = 0, m = 1;
        for (int i = 0; i < e_; ++i) {
            out += prod[i] * m;
            m *= p_;
        }
        return out;
    }

    void find_irreducible()
    {
        // monic degree-e polynomial x^e + sum irr_[i] x^i with no proper
        // monic divisor; brute force is plenty at these sizes
        std::vector<int> c(static_cast<size_t>(e_), 0);
        for (;;) {
            irr_ = c;
            if (is_irreducible())
                return;
            int i = 0;
            while (i < e_ && ++c[i] == p_)
                c[i++] = 0;
            if (i == e_)
                throw NotPrimePowerError("no irreducible polynomial found");
        }
    }

    bool is_irreducible() const
    {
        // irreducible iff no monic divisor of degree 1..e/2; test by
        // polynomial trial division
        for (int d = 1; 2 * d <= e_; ++d) {
            int nd = 1;
            for (int i = 0; i < d; ++i)
                nd *= p_;
            for (int code = 0; code < nd; ++code) {
                std::vector<int> div(static_cast<size_t>(d) + 1, 0);
                int c0 = code;
                for (int i = 0; i < d; ++i) {
                    div[i] = c0 % p_;
                    c0 /= p_;
                }
                div[d] = 1;
                if (divides(div))
                    return false;
            }
        }
        return true;
    }

    bool divides(const std::vector<int>& div) const
    {
        std::vector<int> rem(static_cast<size_t>(e_) + 1, 0);
        for (int i = 0; i < e_; ++i)
            rem[i] = irr_[i];
        rem[e_] = 1;
        int dd = static_cast<int>(div.size()) - 1;
        for (int d = e_; d >= dd; --d) {
            int c = rem[d];
            if (c == 0)
                continue;
            for (int i = 0; i <= dd; ++i)
                rem[d - dd + i] = ((rem[d - dd + i] - c * div[i]) % p_ + p_) % p_;
        }
        return std::all_of(rem.begin(), rem.end(), [](int x) { return x == 0; });
    }

    void build_square_table()
    {
        is_square_.assign(static_cast<size_t>(q_), 0);
        if (e_ == 1) {
            for (int x = 1; x < q_; ++x)
                is_square_[static_cast<size_t>(x) * x % q_] = 1;
        } else {
            for (int x = 1; x < q_; ++x)
                is_square_[mul(x, x)] = 1;
        }
    }

    int p_, e_, q_;
    std::vector<int> irr_; // lower coefficients of the irreducible polynomial
    std::vector<char> is_square_;
};

// q = p^e with p prime, or nothing
std::optional<std::pair<int, int>> prime_power_split(int q)
{
    if (q < 2)
        return std::nullopt;
    int p = 0, m = q;
    for (int d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            p = d;
            break;
        }
    if (p == 0)
        p = m;
    int e = 0;
    while (m % p == 0) {
        m /= p;
        ++e;
    }
    if (m != 1)
        return std::nullopt;
    return std::make_pair(p, e);
}

} // namespace

// ------------------------------------------------------------ HadamardMatrix

HadamardMatrix::HadamardMatrix(int v, std::vector<int> entries)
    : v_(v), entries_(std::move(entries))
{
    classify();
}

void HadamardMatrix::classify()
{
    // orthogonality check; this is the only place matrices are accepted
    for (int i = 0; i < v_; ++i)
        for (int j = i; j < v_; ++j) {
            long long dot = 0;
            for (int k = 0; k < v_; ++k)
                dot += static_cast<long long>(at(i, k)) * at(j, k);
            long long want = i == j ? v_ : 0;
            if (dot != want)
                throw NotHadamardError("rows " + std::to_string(i) + "," +
                                       std::to_string(j) + " have inner product " +
                                       std::to_string(dot));
        }

    if (v_ % 2 == 0) {
        if (auto s = perfect_sqrt(v_); s && *s % 2 == 0)
            u_ = static_cast<int>(*s / 2);
    }

    symmetric_ = true;
    for (int i = 0; i < v_ && symmetric_; ++i)
        for (int j = i + 1; j < v_; ++j)
            if (at(i, j) != at(j, i)) {
                symmetric_ = false;
                break;
            }

    if (u_) {
        long long first = 0;
        for (int k = 0; k < v_; ++k)
            first += at(0, k);
        bool regular = true;
        for (int i = 0; i < v_ && regular; ++i) {
            long long rs = 0, cs = 0;
            for (int k = 0; k < v_; ++k) {
                rs += at(i, k);
                cs += at(k, i);
            }
            regular = rs == first && cs == first;
        }
        if (regular) {
            sigma_ = static_cast<int>(first);
            // forced by H j = sigma j and H H^t = v I
            if (*sigma_ != 2 * *u_ && *sigma_ != -2 * *u_)
                throw NotHadamardError("regular matrix with impossible row sum");
        }
    }
}

HadamardMatrix HadamardMatrix::from_grid(const std::vector<std::vector<int>>& grid)
{
    int v = static_cast<int>(grid.size());
    if (v == 0)
        throw BadEntryError("empty grid");
    std::vector<int> e;
    e.reserve(static_cast<size_t>(v) * v);
    for (const auto& row : grid) {
        if (static_cast<int>(row.size()) != v)
            throw BadEntryError("grid is not square");
        for (int x : row) {
            if (x != 1 && x != -1)
                throw BadEntryError("grid entry must be +1 or -1");
            e.push_back(x);
        }
    }
    return HadamardMatrix(v, std::move(e));
}

HadamardMatrix HadamardMatrix::sylvester(int h, int size_limit)
{
    if (h < 0)
        throw BadEntryError("sylvester: h must be >= 0");
    if (h >= 31 || (1LL << h) > size_limit)
        throw SizeLimitError("sylvester: order 2^" + std::to_string(h) +
                             " exceeds limit " + std::to_string(size_limit));
    int v = 1 << h;
    std::vector<int> e(static_cast<size_t>(v) * v);
    for (int x = 0; x < v; ++x)
        for (int y = 0; y < v; ++y)
            e[static_cast<size_t>(x) * v + y] =
                (std::popcount(static_cast<unsigned>(x & y)) & 1) ? -1 : 1;
    return HadamardMatrix(v, std::move(e));
}

HadamardMatrix HadamardMatrix::paley(int q, PaleyKind kind, int size_limit)
{
    int residue = ((q % 4) + 4) % 4;
    if (kind == PaleyKind::I && residue != 3)
        throw BadResidueClassError("paley I requires q = 3 (mod 4), got q=" +
                                   std::to_string(q));
    if (kind == PaleyKind::II && residue != 1)
        throw BadResidueClassError("paley II requires q = 1 (mod 4), got q=" +
                                   std::to_string(q));
    auto pe = prime_power_split(q);
    if (!pe)
        throw NotPrimePowerError("paley: q=" + std::to_string(q) +
                                 " is not a prime power");
    int order = kind == PaleyKind::I ? q + 1 : 2 * (q + 1);
    if (order > size_limit)
        throw SizeLimitError("paley: order " + std::to_string(order) +
                             " exceeds limit " + std::to_string(size_limit));

    GaloisField f(pe->first, pe->second);
    int n = q + 1;
    // conference core: index 0 is the point at infinity, 1..q the field
    // elements in their canonical (base-p digit) order
    std::vector<int> c(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            c[static_cast<size_t>(i + 1) * n + (j + 1)] = f.chi(f.sub(i, j));
    for (int i = 1; i < n; ++i) {
        c[static_cast<size_t>(0) * n + i] = 1;
        c[static_cast<size_t>(i) * n + 0] = kind == PaleyKind::I ? -1 : 1;
    }

    if (kind == PaleyKind::I) {
        // H = I + C with C skew (C^t = -C), so HH^t = I - C^2 = (q+1) I
        std::vector<int> e(c);
        for (int i = 0; i < n; ++i)
            e[static_cast<size_t>(i) * n + i] = 1;
        return HadamardMatrix(n, std::move(e));
    }

    // kind II: C symmetric; interleave 2x2 blocks
    //   H = C (x) [[1,1],[1,-1]] + I (x) [[1,-1],[-1,-1]]
    int v = 2 * n;
    std::vector<int> e(static_cast<size_t>(v) * v);
    static const int kOff[2][2] = {{1, 1}, {1, -1}};
    static const int kDiag[2][2] = {{1, -1}, {-1, -1}};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int cij = c[static_cast<size_t>(i) * n + j];
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    int val = cij * kOff[a][b] + (i == j ? kDiag[a][b] : 0);
                    e[static_cast<size_t>(2 * i + a) * v + (2 * j + b)] = val;
                }
        }
    return HadamardMatrix(v, std::move(e));
}

HadamardMatrix HadamardMatrix::kronecker(const HadamardMatrix& a,
                                         const HadamardMatrix& b, int size_limit)
{
    long long v = static_cast<long long>(a.order()) * b.order();
    if (v > size_limit)
        throw SizeLimitError("kronecker: order " + std::to_string(v) +
                             " exceeds limit " + std::to_string(size_limit));
    int va = a.order(), vb = b.order(), n = static_cast<int>(v);
    std::vector<int> e(static_cast<size_t>(n) * n);
    for (int i = 0; i < va; ++i)
        for (int k = 0; k < va; ++k)
            for (int j = 0; j < vb; ++j)
                for (int l = 0; l < vb; ++l)
                    e[static_cast<size_t>(i * vb + j) * n + (k * vb + l)] =
                        a.at(i, k) * b.at(j, l);
    return HadamardMatrix(n, std::move(e));
}

SignVector HadamardMatrix::row(int i) const
{
    std::vector<int> out(entries_.begin() + static_cast<long>(i) * v_,
                         entries_.begin() + static_cast<long>(i + 1) * v_);
    return SignVector(std::move(out));
}

SignVector HadamardMatrix::column(int j) const
{
    std::vector<int> out(static_cast<size_t>(v_));
    for (int i = 0; i < v_; ++i)
        out[i] = at(i, j);
    return SignVector(std::move(out));
}

HadamardMatrix HadamardMatrix::transposed() const
{
    std::vector<int> e(static_cast<size_t>(v_) * v_);
    for (int i = 0; i < v_; ++i)
        for (int j = 0; j < v_; ++j)
            e[static_cast<size_t>(j) * v_ + i] = at(i, j);
    return HadamardMatrix(v_, std::move(e));
}

HadamardMatrix HadamardMatrix::negated() const
{
    std::vector<int> e(entries_);
    for (int& x : e)
        x = -x;
    return HadamardMatrix(v_, std::move(e));
}

int HadamardMatrix::require_root_u() const
{
    if (!u_)
        throw NotSquareOrderError("order " + std::to_string(v_) +
                                  " is not an even perfect square");
    return *u_;
}

bool HadamardMatrix::bush_type() const
{
    int u = require_root_u();
    int s = 2 * u;      // block side
    int nb = v_ / s;    // 2u blocks per direction
    for (int bi = 0; bi < nb; ++bi)
        for (int bj = 0; bj < nb; ++bj) {
            if (bi == bj) {
                for (int a = 0; a < s; ++a)
                    for (int b = 0; b < s; ++b)
                        if (at(bi * s + a, bj * s + b) != 1)
                            return false;
            } else {
                for (int a = 0; a < s; ++a) {
                    int rs = 0, cs = 0;
                    for (int b = 0; b < s; ++b) {
                        rs += at(bi * s + a, bj * s + b);
                        cs += at(bi * s + b, bj * s + a);
                    }
                    if (rs != 0 || cs != 0)
                        return false;
                }
            }
        }
    return true;
}

NormalizedMatrix normalize(const HadamardMatrix& h)
{
    int v = h.order();
    // flip rows to make column 0 all-one, then columns for row 0
    std::vector<int> rs(static_cast<size_t>(v)), cs(static_cast<size_t>(v));
    for (int i = 0; i < v; ++i)
        rs[i] = h.at(i, 0);
    for (int j = 0; j < v; ++j)
        cs[j] = rs[0] * h.at(0, j);
    std::vector<std::vector<int>> grid(static_cast<size_t>(v),
                                       std::vector<int>(static_cast<size_t>(v)));
    for (int i = 0; i < v; ++i)
        for (int j = 0; j < v; ++j)
            grid[i][j] = rs[i] * h.at(i, j) * cs[j];
    return NormalizedMatrix{HadamardMatrix::from_grid(grid),
                            MonomialMatrix::diagonal(std::move(rs)),
                            MonomialMatrix::diagonal(std::move(cs))};
}

HadamardMatrix apply_monomial(const MonomialMatrix& p, const MonomialMatrix& q,
                              const HadamardMatrix& h)
{
    int v = h.order();
    if (p.size() != v || q.size() != v)
        throw DimensionMismatchError("apply_monomial: size mismatch");
    // (P H) row p.perm[i] = p.signs[i] * row i; (M Q) col j = q.signs[j] * col q.perm[j]
    std::vector<std::vector<int>> grid(static_cast<size_t>(v),
                                       std::vector<int>(static_cast<size_t>(v)));
    for (int i = 0; i < v; ++i)
        for (int j = 0; j < v; ++j)
            grid[p.perm()[i]][j] = p.signs()[i] * h.at(i, q.perm()[j]) * q.signs()[j];
    return HadamardMatrix::from_grid(grid);
}

} // namespace benthad
