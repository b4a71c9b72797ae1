#include "benthad/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace benthad {

namespace {

int shift_of(int i)
{
    return 4 * (15 - (i & 15));
}

std::uint64_t& word_of(Monomial& m, int i)
{
    return i < 16 ? m.hi : m.lo;
}

std::uint64_t word_of(const Monomial& m, int i)
{
    return i < 16 ? m.hi : m.lo;
}

int nibble_sum(std::uint64_t w)
{
    int s = 0;
    while (w) {
        s += static_cast<int>(w & 0xf);
        w >>= 4;
    }
    return s;
}

} // namespace

Monomial Monomial::var(int i, int exp)
{
    assert(i >= 0 && i < kMaxVars && exp >= 0 && exp <= 15);
    Monomial m;
    word_of(m, i) |= static_cast<std::uint64_t>(exp) << shift_of(i);
    return m;
}

int Monomial::exponent(int i) const
{
    return static_cast<int>((word_of(*this, i) >> shift_of(i)) & 0xf);
}

int Monomial::degree() const
{
    return nibble_sum(hi) + nibble_sum(lo);
}

bool Monomial::divides(const Monomial& o) const
{
    for (int i = 0; i < kMaxVars; ++i)
        if (exponent(i) > o.exponent(i))
            return false;
    return true;
}

Monomial Monomial::times(const Monomial& o) const
{
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
        int e = exponent(i) + o.exponent(i);
        if (e > 15)
            throw SizeLimitError("monomial exponent overflow");
        word_of(r, i) |= static_cast<std::uint64_t>(e) << shift_of(i);
    }
    return r;
}

Monomial Monomial::divided_by(const Monomial& o) const
{
    assert(o.divides(*this));
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
        int e = exponent(i) - o.exponent(i);
        word_of(r, i) |= static_cast<std::uint64_t>(e) << shift_of(i);
    }
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b)
{
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
        int e = std::max(a.exponent(i), b.exponent(i));
        word_of(r, i) |= static_cast<std::uint64_t>(e) << shift_of(i);
    }
    return r;
}

Monomial Monomial::without(int var) const
{
    Monomial r = *this;
    word_of(r, var) &= ~(static_cast<std::uint64_t>(0xf) << shift_of(var));
    return r;
}

bool mono_less(const Monomial& a, const Monomial& b, MonomialOrder ord)
{
    if (ord == MonomialOrder::lex)
        return a.hi != b.hi ? a.hi < b.hi : a.lo < b.lo;
    int da = a.degree(), db = b.degree();
    if (da != db)
        return da < db;
    for (int i = Monomial::kMaxVars - 1; i >= 0; --i) {
        int ea = a.exponent(i), eb = b.exponent(i);
        if (ea != eb)
            return ea > eb; // reversed on the last differing variable
    }
    return false;
}

// ------------------------------------------------------------------ Polynomial

Polynomial Polynomial::from_terms(std::vector<Term> terms, MonomialOrder ord)
{
    std::sort(terms.begin(), terms.end(), [ord](const Term& x, const Term& y) {
        return mono_less(y.m, x.m, ord);
    });
    Polynomial p;
    for (auto& t : terms) {
        if (t.c == 0)
            continue;
        if (!p.terms_.empty() && p.terms_.back().m == t.m)
            p.terms_.back().c += t.c;
        else
            p.terms_.push_back(std::move(t));
        if (!p.terms_.empty() && p.terms_.back().c == 0)
            p.terms_.pop_back();
    }
    return p;
}

Polynomial Polynomial::constant(const Rat& c)
{
    Polynomial p;
    if (c != 0)
        p.terms_.push_back(Term{Monomial::one(), c});
    return p;
}

bool Polynomial::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one());
}

Polynomial Polynomial::negated() const
{
    Polynomial p(*this);
    for (auto& t : p.terms_)
        t.c = -t.c;
    return p;
}

Polynomial Polynomial::monic() const
{
    if (is_zero())
        return *this;
    Polynomial p(*this);
    Rat lead = p.terms_.front().c;
    for (auto& t : p.terms_)
        t.c /= lead;
    return p;
}

bool Polynomial::operator==(const Polynomial& o) const
{
    if (terms_.size() != o.terms_.size())
        return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].m == o.terms_[i].m) || terms_[i].c != o.terms_[i].c)
            return false;
    return true;
}

std::string Polynomial::str() const
{
    if (is_zero())
        return "0";
    std::string s;
    for (size_t i = 0; i < terms_.size(); ++i) {
        const Term& t = terms_[i];
        Rat c = t.c;
        if (i == 0) {
            if (c < 0) {
                s += "-";
                c = -c;
            }
        } else {
            s += c < 0 ? " - " : " + ";
            if (c < 0)
                c = -c;
        }
        std::string mono;
        for (int v = 0; v < Monomial::kMaxVars; ++v) {
            int e = t.m.exponent(v);
            if (e == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += "x" + std::to_string(v);
            if (e > 1)
                mono += "^" + std::to_string(e);
        }
        if (mono.empty())
            s += c.str();
        else if (c == 1)
            s += mono;
        else
            s += c.str() + "*" + mono;
    }
    return s;
}

Polynomial add(const Polynomial& a, const Polynomial& b, MonomialOrder ord)
{
    Polynomial r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
        const Term& x = a.terms_[i];
        const Term& y = b.terms_[j];
        if (x.m == y.m) {
            Rat c = x.c + y.c;
            if (c != 0)
                r.terms_.push_back(Term{x.m, std::move(c)});
            ++i;
            ++j;
        } else if (mono_less(y.m, x.m, ord)) {
            r.terms_.push_back(x);
            ++i;
        } else {
            r.terms_.push_back(y);
            ++j;
        }
    }
    for (; i < a.terms_.size(); ++i)
        r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j)
        r.terms_.push_back(b.terms_[j]);
    return r;
}

Polynomial term_times(const Polynomial& p, const Monomial& m, const Rat& c,
                      MonomialOrder ord)
{
    (void)ord; // multiplying by one monomial keeps the term order
    Polynomial r;
    if (c == 0)
        return r;
    r.terms_.reserve(p.terms_.size());
    for (const auto& t : p.terms_)
        r.terms_.push_back(Term{t.m.times(m), t.c * c});
    return r;
}

Polynomial substitute_sign(const Polynomial& p, int var, int s, MonomialOrder ord)
{
    std::vector<Term> out;
    out.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
        int e = t.m.exponent(var);
        Rat c = (s < 0 && (e & 1)) ? -t.c : t.c;
        out.push_back(Term{t.m.without(var), std::move(c)});
    }
    return Polynomial::from_terms(std::move(out), ord);
}

Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& basis,
                  MonomialOrder ord)
{
    Polynomial rem;
    Polynomial cur = p;
    while (!cur.is_zero()) {
        const Term& lt = cur.leading();
        const Polynomial* div = nullptr;
        for (const auto& g : basis)
            if (!g.is_zero() && g.leading().m.divides(lt.m)) {
                div = &g;
                break;
            }
        if (div) {
            Monomial q = lt.m.divided_by(div->leading().m);
            Rat f = lt.c / div->leading().c;
            cur = add(cur, term_times(*div, q, -f, ord), ord);
        } else {
            rem = add(rem, Polynomial::from_terms({lt}, ord), ord);
            cur = add(cur, Polynomial::from_terms({Term{lt.m, -lt.c}}, ord), ord);
        }
    }
    return rem;
}

// ------------------------------------------------------------------ Buchberger

PolynomialIdeal build_system(const HadamardMatrix& h, MonomialOrder order)
{
    int u = h.require_root_u();
    int v = h.order();
    if (v > Monomial::kMaxVars)
        throw SizeLimitError("polynomial ring supports at most " +
                             std::to_string(Monomial::kMaxVars) + " variables");
    PolynomialIdeal ideal;
    ideal.order = order;
    ideal.nvars = v;
    for (int i = 0; i < v; ++i) {
        std::vector<Term> terms;
        for (int j = 0; j < v; ++j) {
            int c = h.at(i, j) - (i == j ? 2 * u : 0);
            if (c != 0)
                terms.push_back(Term{Monomial::var(j), Rat(c)});
        }
        ideal.generators.push_back(Polynomial::from_terms(std::move(terms), order));
    }
    for (int i = 0; i < v; ++i)
        ideal.generators.push_back(Polynomial::from_terms(
            {Term{Monomial::var(i, 2), Rat(1)}, Term{Monomial::one(), Rat(-1)}},
            order));
    return ideal;
}

std::vector<Polynomial> buchberger(const PolynomialIdeal& ideal, int groebner_limit)
{
    if (ideal.nvars > groebner_limit)
        throw SizeLimitError(
            "Groebner computation can be doubly exponential; " +
            std::to_string(ideal.nvars) + " variables exceeds limit " +
            std::to_string(groebner_limit));
    MonomialOrder ord = ideal.order;

    std::vector<Polynomial> basis;
    for (const auto& g : ideal.generators) {
        Polynomial r = reduce(g, basis, ord);
        if (!r.is_zero())
            basis.push_back(r.monic());
    }

    // pending S-pairs; "processed" pairs are the ones no longer pending
    struct Pair {
        Monomial l;
        int i, j;
    };
    auto pair_before = [ord](const Pair& a, const Pair& b) {
        if (!(a.l == b.l))
            return mono_less(a.l, b.l, ord);
        return std::pair(a.i, a.j) < std::pair(b.i, b.j);
    };
    std::vector<Pair> pending;
    std::set<std::pair<int, int>> pending_keys;
    auto push_pair = [&](int i, int j) {
        pending.push_back(
            Pair{Monomial::lcm(basis[i].leading().m, basis[j].leading().m), i, j});
        pending_keys.insert({i, j});
    };
    for (int j = 1; j < static_cast<int>(basis.size()); ++j)
        for (int i = 0; i < j; ++i)
            push_pair(i, j);

    while (!pending.empty()) {
        auto it = std::min_element(pending.begin(), pending.end(), pair_before);
        Pair pr = *it;
        *it = pending.back();
        pending.pop_back();
        pending_keys.erase({pr.i, pr.j});

        const Monomial& lmi = basis[pr.i].leading().m;
        const Monomial& lmj = basis[pr.j].leading().m;
        // product criterion: coprime leading monomials reduce to zero
        if (Monomial::lcm(lmi, lmj).degree() == lmi.degree() + lmj.degree())
            continue;
        // chain criterion
        bool skip = false;
        for (int k = 0; k < static_cast<int>(basis.size()) && !skip; ++k) {
            if (k == pr.i || k == pr.j)
                continue;
            if (!basis[k].leading().m.divides(pr.l))
                continue;
            auto key_ik = std::minmax(pr.i, k);
            auto key_jk = std::minmax(pr.j, k);
            if (!pending_keys.count({key_ik.first, key_ik.second}) &&
                !pending_keys.count({key_jk.first, key_jk.second}))
                skip = true;
        }
        if (skip)
            continue;

        Monomial ui = pr.l.divided_by(lmi), uj = pr.l.divided_by(lmj);
        Polynomial s =
            add(term_times(basis[pr.i], ui, Rat(1) / basis[pr.i].leading().c, ord),
                term_times(basis[pr.j], uj, Rat(-1) / basis[pr.j].leading().c, ord),
                ord);
        Polynomial r = reduce(s, basis, ord);
        if (r.is_zero())
            continue;
        basis.push_back(r.monic());
        int n = static_cast<int>(basis.size()) - 1;
        for (int i = 0; i < n; ++i)
            push_pair(i, n);
    }

    // minimalize: drop anything whose leading monomial another one divides
    std::vector<Polynomial> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j)
                continue;
            const Monomial& a = basis[j].leading().m;
            const Monomial& b = basis[i].leading().m;
            if (a.divides(b) && (!(a == b) || j < i))
                redundant = true;
        }
        if (!redundant)
            minimal.push_back(basis[i]);
    }
    // tail-reduce each against the others
    std::vector<Polynomial> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i)
                others.push_back(minimal[j]);
        Polynomial r = reduce(minimal[i], others, ord);
        if (!r.is_zero())
            reduced.push_back(r.monic());
    }
    std::sort(reduced.begin(), reduced.end(),
              [ord](const Polynomial& a, const Polynomial& b) {
                  return mono_less(b.leading().m, a.leading().m, ord);
              });
    return reduced;
}

// --------------------------------------------------------------- +-1 variety

namespace {

void solve_rec(const std::vector<Polynomial>& polys, int nvars, int depth,
               std::vector<int>& assign, MonomialOrder ord,
               std::vector<SignVector>& out)
{
    if (depth == nvars) {
        // every polynomial was eliminated en route, so this is a variety point
        assert(polys.empty());
        out.emplace_back(assign);
        return;
    }
    int var = nvars - 1 - depth; // trailing lex variables first
    for (int s : {1, -1}) {
        assign[var] = s;
        std::vector<Polynomial> next;
        next.reserve(polys.size());
        bool dead = false;
        for (const auto& p : polys) {
            Polynomial q = substitute_sign(p, var, s, ord);
            if (q.is_zero())
                continue;
            if (q.is_constant()) {
                dead = true;
                break;
            }
            next.push_back(std::move(q));
        }
        if (!dead)
            solve_rec(next, nvars, depth + 1, assign, ord, out);
    }
    assign[var] = 1;
}

} // namespace

std::vector<SignVector> solve_pm1(const std::vector<Polynomial>& basis, int nvars,
                                  MonomialOrder order)
{
    std::vector<Polynomial> live;
    for (const auto& p : basis) {
        if (p.is_zero())
            continue;
        if (p.is_constant())
            return {}; // inconsistent ideal: empty variety, a legal outcome
        live.push_back(p);
    }
    std::vector<SignVector> out;
    std::vector<int> assign(static_cast<size_t>(nvars), 1);
    solve_rec(live, nvars, 0, assign, order, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace benthad
