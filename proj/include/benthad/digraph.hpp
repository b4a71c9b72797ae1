#ifndef BENTHAD_DIGRAPH_HPP
#define BENTHAD_DIGRAPH_HPP

#include <optional>
#include <utility>
#include <vector>

#include "benthad/matrix.hpp"

namespace benthad {

/// Vertex-colored digraph. Arcs are ordered pairs; an undirected edge is
/// stored as both arcs. blocks, when present, pairs vertices two by two
/// (value = block id).
struct ColoredDigraph {
    int n = 0;
    std::vector<std::pair<int, int>> arcs;
    std::vector<int> colors;
    std::optional<std::vector<int>> blocks;

    void add_arc(int a, int b) { arcs.emplace_back(a, b); }
    void add_edge(int a, int b)
    {
        arcs.emplace_back(a, b);
        arcs.emplace_back(b, a);
    }
    void sort_arcs();
};

/// 2v-vertex digraph G(H): entry +1 becomes an identity 2x2 block, entry
/// -1 a swap block. Matrix index i owns vertices 2i ("+") and 2i+1 ("-");
/// Aut(G(H)) is isomorphic to SAut(H). Always has exactly 2v^2 arcs.
ColoredDigraph strong_graph(const HadamardMatrix& h);

/// v-vertex digraph Gamma(H) with an arc (i,j) iff H_ij = -1; its
/// automorphisms are the permutations commuting with H.
ColoredDigraph gamma_graph(const HadamardMatrix& h);

/// 4v-vertex row/column incidence graph: vertices r_i^{+-} (color 0) and
/// c_j^{+-} (color 1), edge r_i^s ~ c_j^t iff s*t*H_ij = 1. Its
/// color-preserving automorphisms are the pairs (P,Q) with P H Q = H.
ColoredDigraph pair_graph(const HadamardMatrix& h);

/// Relabels vertices: vertex x becomes sigma[x].
ColoredDigraph relabel(const ColoredDigraph& g, const std::vector<int>& sigma);

} // namespace benthad

#endif
