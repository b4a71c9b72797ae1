#include "benthad/perm.hpp"

#include <algorithm>
#include <cassert>

#include "benthad/errors.hpp"

namespace benthad {

Perm Perm::identity(int n)
{
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        img[i] = i;
    return Perm(std::move(img));
}

bool Perm::is_identity() const
{
    for (int i = 0; i < n(); ++i)
        if (img[i] != i)
            return false;
    return true;
}

Perm Perm::inverse() const
{
    std::vector<int> inv(img.size());
    for (int i = 0; i < n(); ++i)
        inv[img[i]] = i;
    return Perm(std::move(inv));
}

Perm compose(const Perm& a, const Perm& b)
{
    assert(a.n() == b.n());
    std::vector<int> out(a.img.size());
    for (int i = 0; i < a.n(); ++i)
        out[i] = a.img[b.img[i]];
    return Perm(std::move(out));
}

// ---------------------------------------------------------- PermutationGroup
//
// Deterministic Schreier-Sims. Generators live in one global list; the
// effective generating set of the i-th stabilizer is the subset fixing the
// first i base points. Verification runs bottom-up and drops back down
// whenever a Schreier generator fails to strip.

namespace {

bool fixes_prefix(const Perm& g, const std::vector<int>& base, int upto)
{
    for (int i = 0; i < upto; ++i)
        if (g[base[i]] != base[i])
            return false;
    return true;
}

} // namespace

PermutationGroup::PermutationGroup(int n, std::vector<Perm> generators) : n_(n)
{
    for (auto& g : generators) {
        if (g.n() != n_)
            throw DimensionMismatchError("generator degree mismatch");
        if (!g.is_identity() &&
            std::find(gens_.begin(), gens_.end(), g) == gens_.end())
            gens_.push_back(std::move(g));
    }
    if (gens_.empty())
        return;

    // every generator must move some base point
    for (const auto& g : gens_)
        if (fixes_prefix(g, base_, static_cast<int>(base_.size())))
            for (int x = 0; x < n_; ++x)
                if (g[x] != x) {
                    extend_base(x);
                    break;
                }

    for (int i = 0; i < static_cast<int>(levels_.size()); ++i)
        rebuild_orbit(i);

    int i = static_cast<int>(levels_.size()) - 1;
    while (i >= 0) {
        // refresh against the global generator list, then snapshot:
        // additions below may reallocate levels_
        rebuild_orbit(i);
        const std::vector<int> orbit = levels_[i].orbit;
        const std::vector<Perm> gens = levels_[i].gens;
        bool descended = false;
        for (size_t pi = 0; pi < orbit.size() && !descended; ++pi) {
            int p = orbit[pi];
            for (const auto& s : gens) {
                Perm sch = compose(levels_[i].transversal[s[p]].inverse(),
                                   compose(s, levels_[i].transversal[p]));
                if (sch.is_identity())
                    continue;
                auto [res, j] = strip(std::move(sch), i + 1);
                if (res.is_identity())
                    continue;
                add_generator_at(j, res);
                i = j;
                descended = true;
                break;
            }
        }
        if (!descended)
            --i;
    }

    order_ = 1;
    for (const auto& lv : levels_)
        order_ *= static_cast<unsigned>(lv.orbit.size());
}

void PermutationGroup::extend_base(int beta)
{
    base_.push_back(beta);
    Level lv;
    lv.beta = beta;
    levels_.push_back(std::move(lv));
    rebuild_orbit(static_cast<int>(levels_.size()) - 1);
}

void PermutationGroup::rebuild_orbit(int lev)
{
    Level& lv = levels_[lev];
    lv.gens.clear();
    for (const auto& g : gens_)
        if (fixes_prefix(g, base_, lev))
            lv.gens.push_back(g);
    lv.orbit.clear();
    lv.in_orbit.assign(static_cast<size_t>(n_), 0);
    lv.transversal.assign(static_cast<size_t>(n_), Perm());
    lv.orbit.push_back(lv.beta);
    lv.in_orbit[lv.beta] = 1;
    lv.transversal[lv.beta] = Perm::identity(n_);
    for (size_t q = 0; q < lv.orbit.size(); ++q) {
        int p = lv.orbit[q];
        for (const auto& g : lv.gens) {
            int t = g[p];
            if (!lv.in_orbit[t]) {
                lv.in_orbit[t] = 1;
                lv.orbit.push_back(t);
                lv.transversal[t] = compose(g, lv.transversal[p]);
            }
        }
    }
}

std::pair<Perm, int> PermutationGroup::strip(Perm g, int from) const
{
    int k = static_cast<int>(levels_.size());
    for (int l = from; l < k; ++l) {
        int p = g[levels_[l].beta];
        if (!levels_[l].in_orbit[p])
            return {std::move(g), l};
        g = compose(levels_[l].transversal[p].inverse(), g);
    }
    return {std::move(g), k};
}

void PermutationGroup::add_generator_at(int lev, const Perm& g)
{
    gens_.push_back(g);
    if (lev == static_cast<int>(levels_.size())) {
        int moved = -1;
        for (int x = 0; x < n_; ++x)
            if (g[x] != x) {
                moved = x;
                break;
            }
        assert(moved >= 0);
        extend_base(moved);
    } else {
        rebuild_orbit(lev);
    }
}

bool PermutationGroup::contains(const Perm& p) const
{
    if (p.n() != n_)
        return false;
    if (gens_.empty())
        return p.is_identity();
    auto [res, lev] = strip(p, 0);
    return lev == static_cast<int>(levels_.size()) && res.is_identity();
}

void PermutationGroup::for_each_element(const std::function<void(const Perm&)>& fn,
                                        const BigInt& max_elements) const
{
    if (order_ > max_elements)
        throw GroupTooLargeError("group of order " + order_.str() +
                                 " exceeds enumeration limit " +
                                 max_elements.str());
    enumerate_rec(0, Perm::identity(n_), fn);
}

void PermutationGroup::enumerate_rec(int lev, const Perm& acc,
                                     const std::function<void(const Perm&)>& fn) const
{
    if (lev == static_cast<int>(levels_.size())) {
        fn(acc);
        return;
    }
    for (int p : levels_[lev].orbit)
        enumerate_rec(lev + 1, compose(acc, levels_[lev].transversal[p]), fn);
}

} // namespace benthad
