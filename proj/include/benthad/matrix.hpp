#ifndef BENTHAD_MATRIX_HPP
#define BENTHAD_MATRIX_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "benthad/errors.hpp"

namespace benthad {

constexpr int kDefaultSizeLimit = 1024;

/// A +-1 vector. Entries are validated on construction.
class SignVector {
public:
    SignVector() = default;
    explicit SignVector(std::vector<int> signs);

    static SignVector all_one(int v);
    /// Parses a string over {+,-}.
    static SignVector from_string(const std::string& s);

    int size() const { return static_cast<int>(signs_.size()); }
    int operator[](int i) const { return signs_[i]; }
    const std::vector<int>& signs() const { return signs_; }

    SignVector negated() const;
    std::string str() const;

    bool operator==(const SignVector& o) const { return signs_ == o.signs_; }
    /// Lexicographic with + before -.
    bool operator<(const SignVector& o) const;

private:
    std::vector<int> signs_;
};

/// P = D*Pi: exactly one +-1 entry per row and per column. Stored as the
/// permutation pi together with column signs, i.e. entry(perm[i], i) = sign[i].
class MonomialMatrix {
public:
    MonomialMatrix() = default;
    MonomialMatrix(std::vector<int> perm, std::vector<int> signs);

    static MonomialMatrix identity(int v);
    static MonomialMatrix diagonal(std::vector<int> signs);
    static MonomialMatrix permutation(std::vector<int> perm);

    int size() const { return static_cast<int>(perm_.size()); }
    const std::vector<int>& perm() const { return perm_; }
    const std::vector<int>& signs() const { return signs_; }
    int entry(int row, int col) const;

    bool is_diagonal() const;
    bool is_permutation() const;
    bool is_identity() const;

    /// Transpose equals inverse for monomial matrices.
    MonomialMatrix transposed() const;
    /// Matrix product.
    MonomialMatrix operator*(const MonomialMatrix& o) const;
    /// P*X as column-vector action.
    SignVector apply(const SignVector& x) const;

    bool operator==(const MonomialMatrix& o) const {
        return perm_ == o.perm_ && signs_ == o.signs_;
    }

private:
    std::vector<int> perm_;
    std::vector<int> signs_;
};

enum class PaleyKind { I, II };

/// A validated Hadamard matrix: H*H^t = v*I over the integers.
/// Order v, optional root u when v = 4u^2, symmetry flag and the constant
/// row/column sum sigma when the matrix is regular are computed once at
/// construction; instances are immutable afterwards.
class HadamardMatrix {
public:
    /// Validates an arbitrary sign grid.
    static HadamardMatrix from_grid(const std::vector<std::vector<int>>& grid);

    /// Sylvester matrix of order 2^h, H_{xy} = (-1)^{<x,y>} with rows and
    /// columns indexed by the binary expansion of the index.
    static HadamardMatrix sylvester(int h, int size_limit = kDefaultSizeLimit);

    /// Paley construction over GF(q) via the quadratic character.
    /// Kind I needs q = 3 (mod 4) and gives order q+1; kind II needs
    /// q = 1 (mod 4) and gives the symmetric matrix of order 2(q+1).
    static HadamardMatrix paley(int q, PaleyKind kind,
                                int size_limit = kDefaultSizeLimit);

    /// Kronecker product with row-major pair indexing (i,j) -> i*w + j.
    static HadamardMatrix kronecker(const HadamardMatrix& a,
                                    const HadamardMatrix& b,
                                    int size_limit = kDefaultSizeLimit);

    int order() const { return v_; }
    /// u with v = 4u^2, present iff v is an even perfect square.
    std::optional<int> root_u() const { return u_; }
    bool symmetric() const { return symmetric_; }
    /// sigma iff all 2v row and column sums agree (and then v=4u^2,
    /// |sigma|=2u). The trivial order 1 is reported non-regular.
    std::optional<int> row_sum_constant() const { return sigma_; }

    int at(int i, int j) const { return entries_[static_cast<size_t>(i) * v_ + j]; }
    const std::vector<int>& entries() const { return entries_; }

    SignVector row(int i) const;
    SignVector column(int j) const;

    HadamardMatrix transposed() const;
    HadamardMatrix negated() const;

    /// Bush-type test: v = 4u^2, the 2u diagonal blocks of side 2u are
    /// all-one and every off-diagonal block has zero row and column sums.
    bool bush_type() const;

    /// Requires v = 4u^2 (throws NotSquareOrderError otherwise).
    int require_root_u() const;

    bool operator==(const HadamardMatrix& o) const {
        return v_ == o.v_ && entries_ == o.entries_;
    }

private:
    HadamardMatrix(int v, std::vector<int> entries);
    void classify();

    int v_ = 0;
    std::vector<int> entries_; // row-major
    std::optional<int> u_;
    bool symmetric_ = false;
    std::optional<int> sigma_;
};

struct NormalizedMatrix {
    HadamardMatrix matrix;
    MonomialMatrix row_signs; // diagonal P with P*H*Q normalized
    MonomialMatrix col_signs; // diagonal Q
};

/// Negates rows and columns until first row and first column are all-one.
NormalizedMatrix normalize(const HadamardMatrix& h);

/// P*H*Q, validated.
HadamardMatrix apply_monomial(const MonomialMatrix& p, const MonomialMatrix& q,
                              const HadamardMatrix& h);

} // namespace benthad

#endif
