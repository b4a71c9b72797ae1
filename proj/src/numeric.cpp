#include "benthad/numeric.hpp"

#include <cmath>

namespace benthad {

std::optional<std::int64_t> perfect_sqrt(std::int64_t n)
{
    if (n < 0)
        return std::nullopt;
    auto s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    for (std::int64_t c = s > 1 ? s - 1 : 0; c <= s + 1; ++c)
        if (c * c == n)
            return c;
    return std::nullopt;
}

std::string factored(const BigInt& n)
{
    if (n <= 0)
        return n.str();
    BigInt m = n;
    std::string out;
    auto emit = [&out](const BigInt& p, int e) {
        if (!out.empty())
            out += "*";
        out += p.str();
        if (e > 1)
            out += "^" + std::to_string(e);
    };
    for (BigInt p = 2; p * p <= m && p < 1000000; p += (p == 2 ? 1 : 2)) {
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            emit(p, e);
        }
    }
    if (m > 1)
        emit(m, 1);
    if (out.empty())
        out = "1";
    return out;
}

} // namespace benthad
