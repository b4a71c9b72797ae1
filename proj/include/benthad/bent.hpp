#ifndef BENTHAD_BENT_HPP
#define BENTHAD_BENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "benthad/matrix.hpp"
#include "benthad/ratmat.hpp"

namespace benthad {

// A sequence X in {+-1}^v is bent for H when H X = 2u Y with Y again a
// +-1 vector (the integer form of the normalized eigenproblem), and
// self-dual when Y = X. Everything below works in that scaled form.

enum class BentClass { not_bent, bent, self_dual };

struct DualResult {
    BentClass cls = BentClass::not_bent;
    std::optional<SignVector> dual; // Y, present iff bent
};

/// Classifies X against H. When bent, the result is certified: Y is
/// re-checked to be a bent sequence attached to H^t.
DualResult dual(const HadamardMatrix& h, const SignVector& x);

bool is_bent(const HadamardMatrix& h, const SignVector& x);
bool is_self_dual_bent(const HadamardMatrix& h, const SignVector& x);

/// The 2v-word code made of the columns of H and their negations.
struct HadamardCode {
    std::vector<SignVector> codewords;
    static HadamardCode of(const HadamardMatrix& h);
};

/// Minimum Hamming distance from X to the Hadamard code of H. Equals
/// (v - sqrt(v))/2 exactly when X is bent.
int covering_distance(const HadamardMatrix& h, const SignVector& x);

/// Basis data for the eigenvalue-2u eigenspace of H, kept exact.
struct EigenBasis {
    RatMatrix b;           // k x v, rows span ker(H - 2u I)
    int k = 0;             // dimension
    std::vector<int> j;    // column indices of an invertible k x k minor
    RatMatrix bk_inverse;  // exact inverse of that minor
    bool zero_first_column = false; // column 0 of B vanished: no solutions
};

/// Exact kernel basis of H - 2u I with the greedy minor attached.
/// Throws NotSquareOrderError when v != 4u^2 and EmptyEigenspaceError
/// when the eigenvalue 2u does not occur.
EigenBasis eigenspace_basis(const HadamardMatrix& h);

/// Scans columns left to right, keeping those that raise the rank, until
/// rank(B) many are found. If column 0 is identically zero it is skipped
/// and *zero_first_column is set: no +-1 vector can lie in the row space.
std::vector<int> greedy_minor(const RatMatrix& b, bool* zero_first_column = nullptr);

enum class SearchMethod { exhaust, eigen, groebner };
enum class SearchMode { bent, self_dual };

struct SearchStats {
    int k = 0;                  // eigenspace dimension (eigen) or v
    std::uint64_t candidates = 0;
    double elapsed_ms = 0.0;
};

struct SearchResult {
    std::vector<SignVector> sequences; // sorted, unique
    SearchMethod method = SearchMethod::exhaust;
    SearchStats stats;
};

constexpr int kDefaultExhaustLimit = 24;
constexpr int kDefaultKLimit = 30;

/// Tries all 2^v sign vectors. Exponential in v, guarded by the limit.
SearchResult search_exhaustive(const HadamardMatrix& h,
                               SearchMode mode = SearchMode::self_dual,
                               int exhaust_limit = kDefaultExhaustLimit,
                               int threads = 1);

/// Eigenspace enumeration: fix the sign of the first selected coordinate,
/// walk Z in {+-1}^k in Gray-code order, accept when C B is a +-1 vector,
/// and mirror accepted vectors through negation.
SearchResult search_eigenspace(const HadamardMatrix& h,
                               int k_limit = kDefaultKLimit, int threads = 1);

struct SelfdualizeResult {
    MonomialMatrix s;      // diagonal
    HadamardMatrix hprime; // S*H, for which X is self-dual
};

/// For bent X, the equivalent matrix H' = S H making X self-dual.
SelfdualizeResult selfdualize(const HadamardMatrix& h, const SignVector& x);

/// Kronecker product of self-dual sequences, checked on both ends.
SignVector kron_seq(const HadamardMatrix& u, const SignVector& x,
                    const HadamardMatrix& v, const SignVector& y);

} // namespace benthad

#endif
