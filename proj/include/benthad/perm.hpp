#ifndef BENTHAD_PERM_HPP
#define BENTHAD_PERM_HPP

#include <functional>
#include <vector>

#include "benthad/numeric.hpp"

namespace benthad {

/// Permutation of {0..n-1} as an image table.
struct Perm {
    std::vector<int> img;

    Perm() = default;
    explicit Perm(std::vector<int> images) : img(std::move(images)) {}
    static Perm identity(int n);

    int n() const { return static_cast<int>(img.size()); }
    int operator[](int x) const { return img[x]; }
    bool is_identity() const;
    Perm inverse() const;

    bool operator==(const Perm& o) const { return img == o.img; }
    bool operator<(const Perm& o) const { return img < o.img; }
};

/// a then b read right to left: (a*b)(x) = a(b(x)).
Perm compose(const Perm& a, const Perm& b);

/// Permutation group given by generators, with a Schreier-Sims stabilizer
/// chain behind order and membership queries.
class PermutationGroup {
public:
    PermutationGroup(int n, std::vector<Perm> generators);

    int degree() const { return n_; }
    const std::vector<Perm>& generators() const { return gens_; }
    const BigInt& order() const { return order_; }
    bool contains(const Perm& p) const;
    const std::vector<int>& base() const { return base_; }

    /// Visits every element once (products over the chain transversals).
    /// Throws GroupTooLargeError when the order exceeds max_elements.
    void for_each_element(const std::function<void(const Perm&)>& fn,
                          const BigInt& max_elements) const;

private:
    struct Level {
        int beta = 0;
        std::vector<Perm> gens;        // generators fixing all earlier betas
        std::vector<int> orbit;        // points in discovery order
        std::vector<Perm> transversal; // by point; maps beta -> point
        std::vector<char> in_orbit;
    };

    void extend_base(int beta);
    void rebuild_orbit(int lev);
    // sift from the given level; returns the residue and the level reached
    std::pair<Perm, int> strip(Perm g, int from) const;
    void add_generator_at(int lev, const Perm& g);
    void enumerate_rec(int lev, const Perm& acc,
                       const std::function<void(const Perm&)>& fn) const;

    int n_;
    std::vector<Perm> gens_;
    std::vector<int> base_;
    std::vector<Level> levels_;
    BigInt order_ = 1;
};

} // namespace benthad

#endif
