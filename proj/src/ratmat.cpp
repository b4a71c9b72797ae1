#include "benthad/ratmat.hpp"

#include <cassert>

namespace benthad {

std::vector<int> rref(RatMatrix& m)
{
    std::vector<int> pivots;
    if (m.empty())
        return pivots;
    int rows = static_cast<int>(m.size());
    int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int sel = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                sel = i;
                break;
            }
        if (sel < 0)
            continue;
        std::swap(m[sel], m[r]);
        Rat inv = m[r][c];
        for (int j = c; j < cols; ++j)
            m[r][j] /= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0)
                continue;
            Rat f = m[i][c];
            for (int j = c; j < cols; ++j)
                m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank(RatMatrix m)
{
    return static_cast<int>(rref(m).size());
}

RatMatrix kernel_basis(const RatMatrix& m)
{
    if (m.empty())
        return {};
    int cols = static_cast<int>(m[0].size());
    RatMatrix r = m;
    std::vector<int> pivots = rref(r);
    std::vector<char> is_pivot(static_cast<size_t>(cols), 0);
    for (int p : pivots)
        is_pivot[p] = 1;
    RatMatrix basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        RatRow x(static_cast<size_t>(cols), Rat(0));
        x[f] = 1;
        for (size_t i = 0; i < pivots.size(); ++i)
            x[pivots[i]] = -r[i][f];
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<RatMatrix> inverse(const RatMatrix& m)
{
    int n = static_cast<int>(m.size());
    RatMatrix aug(m);
    for (int i = 0; i < n; ++i) {
        assert(static_cast<int>(m[i].size()) == n);
        aug[i].resize(static_cast<size_t>(2) * n, Rat(0));
        aug[i][static_cast<size_t>(n) + i] = 1;
    }
    auto pivots = rref(aug);
    if (static_cast<int>(pivots.size()) != n || pivots.back() >= n)
        return std::nullopt;
    RatMatrix inv(static_cast<size_t>(n), RatRow(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            inv[i][j] = aug[i][static_cast<size_t>(n) + j];
    return inv;
}

RatMatrix matmul(const RatMatrix& a, const RatMatrix& b)
{
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    RatMatrix out(n, RatRow(m, Rat(0)));
    for (size_t i = 0; i < n; ++i) {
        assert(a[i].size() == k);
        for (size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0)
                continue;
            const Rat& f = a[i][t];
            for (size_t j = 0; j < m; ++j)
                out[i][j] += f * b[t][j];
        }
    }
    return out;
}

bool row_space_contains(RatMatrix m, const RatRow& v)
{
    rref(m);
    RatRow w = v;
    size_t cols = v.size();
    for (const auto& row : m) {
        size_t lead = 0;
        while (lead < cols && row[lead] == 0)
            ++lead;
        if (lead == cols)
            continue;
        if (w[lead] != 0) {
            Rat f = w[lead] / row[lead];
            for (size_t j = lead; j < cols; ++j)
                w[j] -= f * row[j];
        }
    }
    for (const auto& x : w)
        if (x != 0)
            return false;
    return true;
}

} // namespace benthad
