#ifndef BENTHAD_SYMMETRY_HPP
#define BENTHAD_SYMMETRY_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "benthad/autom.hpp"
#include "benthad/bent.hpp"
#include "benthad/digraph.hpp"
#include "benthad/matrix.hpp"
#include "benthad/numeric.hpp"
#include "benthad/perm.hpp"

namespace benthad {

constexpr long kDefaultPolarityLimit = 1000000;

/// Strong automorphism group: monomial P with P H = H P. Computed from
/// Aut(G(H)) on the 2v-vertex strong graph; every decoded generator is
/// re-checked against the defining equation.
struct StrongAutGroup {
    BigInt order;
    std::vector<MonomialMatrix> generators;
};
StrongAutGroup saut(const HadamardMatrix& h, int graph_limit = kDefaultGraphLimit);

/// Permutation part C(H) = {P permutation : P H = H P}, as the
/// automorphism group of Gamma(H).
PermutationGroup c_group(const HadamardMatrix& h,
                         int graph_limit = kDefaultGraphLimit);

/// C2(H): identity and involutions of C(H), enumerated from the stabilizer
/// chain. Requires H symmetric; each returned P satisfies P = P^t and
/// P A = A^t P for the incidence matrix A of the Menon design.
std::vector<Perm> polarities(const HadamardMatrix& h,
                             long enumeration_limit = kDefaultPolarityLimit,
                             int graph_limit = kDefaultGraphLimit);

/// Full automorphism group: pairs (P,Q) with P H Q = H, counted over pairs
/// (the central pair (-I,-I) included), via the 4v-vertex pair graph.
struct FullAutGroup {
    BigInt order;
    std::vector<std::pair<MonomialMatrix, MonomialMatrix>> generator_pairs;
};
FullAutGroup full_aut(const HadamardMatrix& h, int graph_limit = kDefaultGraphLimit);

/// Witness P with P H P^t = K, if the strong graphs are isomorphic.
std::optional<MonomialMatrix> strong_equivalent(const HadamardMatrix& h,
                                                const HadamardMatrix& k,
                                                int graph_limit = kDefaultGraphLimit);

/// Rows of H against columns of H, incident where the entry is -1;
/// H = J - 2A for the incidence matrix A.
struct IncidenceSystem {
    int v = 0;
    std::vector<std::vector<int>> incidence; // A, 0/1
    static IncidenceSystem of(const HadamardMatrix& h);
};

// ----------------------------------------------------- extended affine maps

/// f(x) -> f(A^{-1} x + A^{-1} b) * (-1)^{<d,x>} * c on sign vectors of
/// length 2^m. Vectors over GF(2)^m are packed into the bits of an int.
struct ExtendedAffineTransform {
    int m = 0;
    std::vector<std::uint32_t> a; // row bitmasks of A
    std::uint32_t b = 0;
    std::uint32_t d = 0;
    int c = 1;
};

SignVector apply_eat(const ExtendedAffineTransform& t, const SignVector& f);

/// The transform as the monomial matrix acting on sign vectors.
MonomialMatrix eat_monomial(const ExtendedAffineTransform& t);

/// Membership in SAut(S_v): A^t = A^{-1}, b = d and wt(b) even. The
/// predicate is cross-checked against M(T) S_v = S_v M(T) directly.
bool eat_in_saut(const ExtendedAffineTransform& t);

/// All m x m matrices over GF(2) with A A^t = I, by brute force (m <= 5).
std::vector<std::vector<std::uint32_t>> orth_group(int m);

// GF(2) matrix helpers shared with tests.
std::optional<std::vector<std::uint32_t>> gf2_inverse(
    const std::vector<std::uint32_t>& rows, int m);
std::uint32_t gf2_matvec(const std::vector<std::uint32_t>& rows, int m,
                         std::uint32_t x);

} // namespace benthad

#endif
