#ifndef BENTHAD_AUTOM_HPP
#define BENTHAD_AUTOM_HPP

#include <utility>
#include <vector>

#include "benthad/digraph.hpp"
#include "benthad/perm.hpp"

namespace benthad {

constexpr int kDefaultGraphLimit = 1000;

/// Color- and arc-preserving relabeling of a digraph into a form that
/// depends only on its isomorphism class.
struct CanonicalForm {
    int n = 0;
    std::vector<int> labeling; // original vertex -> canonical position
    std::vector<std::pair<int, int>> arcs; // relabeled, sorted
    std::vector<int> colors;               // by canonical position

    bool operator==(const CanonicalForm& o) const
    {
        return n == o.n && colors == o.colors && arcs == o.arcs;
    }
};

struct AutomorphismResult {
    PermutationGroup group;
    CanonicalForm canonical;
};

/// Backtracking individualization-refinement over equitable partitions
/// (iterated in/out-degree refinement, first smallest non-singleton target
/// cell, orbit pruning by the automorphisms found so far). Returns
/// generators with exact order plus a canonical form.
AutomorphismResult automorphisms(const ColoredDigraph& g,
                                 int graph_limit = kDefaultGraphLimit);

} // namespace benthad

#endif
