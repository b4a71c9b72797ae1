#ifndef BENTHAD_GROEBNER_HPP
#define BENTHAD_GROEBNER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "benthad/matrix.hpp"
#include "benthad/numeric.hpp"

namespace benthad {

constexpr int kDefaultGroebnerLimit = 16;

/// Exponent vector packed four bits per variable, variable 0 in the most
/// significant nibble, so plain integer comparison of (hi,lo) is lex order
/// over the natural variable order. Supports up to 32 variables of degree
/// at most 15, far beyond what the quadratic systems here produce.
struct Monomial {
    static constexpr int kMaxVars = 32;
    std::uint64_t hi = 0, lo = 0;

    static Monomial one() { return {}; }
    static Monomial var(int i, int exp = 1);

    int exponent(int i) const;
    int degree() const;
    bool is_one() const { return hi == 0 && lo == 0; }
    bool divides(const Monomial& o) const;
    Monomial times(const Monomial& o) const;
    Monomial divided_by(const Monomial& o) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);
    Monomial without(int var) const;

    bool operator==(const Monomial& o) const { return hi == o.hi && lo == o.lo; }
};

enum class MonomialOrder { lex, degrevlex };

/// a < b under the given order.
bool mono_less(const Monomial& a, const Monomial& b, MonomialOrder ord);

struct Term {
    Monomial m;
    Rat c;
};

/// Terms kept sorted in decreasing monomial order, no zero coefficients.
class Polynomial {
public:
    Polynomial() = default;
    static Polynomial from_terms(std::vector<Term> terms, MonomialOrder ord);
    static Polynomial constant(const Rat& c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const std::vector<Term>& terms() const { return terms_; }
    const Term& leading() const { return terms_.front(); }

    Polynomial negated() const;
    Polynomial monic() const;
    std::string str() const; // "x0*x1 - 2*x2 + 1" style, for tests and dumps

    bool operator==(const Polynomial& o) const;

private:
    friend Polynomial add(const Polynomial&, const Polynomial&, MonomialOrder);
    friend Polynomial term_times(const Polynomial&, const Monomial&, const Rat&,
                                 MonomialOrder);
    std::vector<Term> terms_;
};

Polynomial add(const Polynomial& a, const Polynomial& b, MonomialOrder ord);
Polynomial term_times(const Polynomial& p, const Monomial& m, const Rat& c,
                      MonomialOrder ord);
/// Evaluation at x = s (+-1), eliminating the variable.
Polynomial substitute_sign(const Polynomial& p, int var, int s, MonomialOrder ord);
/// Full normal form of p modulo the list.
Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& basis,
                  MonomialOrder ord);

struct PolynomialIdeal {
    std::vector<Polynomial> generators;
    MonomialOrder order = MonomialOrder::lex;
    int nvars = 0;
};

/// The 2v generators encoding H X = 2u X (integer-scaled) and X_i^2 = 1.
PolynomialIdeal build_system(const HadamardMatrix& h,
                             MonomialOrder order = MonomialOrder::lex);

/// Reduced Groebner basis by Buchberger's algorithm with the product and
/// chain criteria. Canonical for a fixed order: independent of generator
/// order. The ideal {1} comes back as the single polynomial 1.
std::vector<Polynomial> buchberger(const PolynomialIdeal& ideal,
                                   int groebner_limit = kDefaultGroebnerLimit);

/// +-1 points of the variety, by back-substitution through the basis
/// branching over {+1,-1} per variable. An inconsistent ideal (basis {1})
/// legitimately yields the empty list.
std::vector<SignVector> solve_pm1(const std::vector<Polynomial>& basis, int nvars,
                                  MonomialOrder order = MonomialOrder::lex);

} // namespace benthad

#endif
