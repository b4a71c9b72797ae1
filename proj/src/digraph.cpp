#include "benthad/digraph.hpp"

#include <algorithm>

namespace benthad {

void ColoredDigraph::sort_arcs()
{
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
}

ColoredDigraph strong_graph(const HadamardMatrix& h)
{
    int v = h.order();
    ColoredDigraph g;
    g.n = 2 * v;
    g.colors.assign(static_cast<size_t>(g.n), 0);
    std::vector<int> blocks(static_cast<size_t>(g.n));
    for (int i = 0; i < v; ++i)
        blocks[2 * i] = blocks[2 * i + 1] = i;
    g.blocks = std::move(blocks);
    g.arcs.reserve(static_cast<size_t>(2) * v * v);
    for (int i = 0; i < v; ++i)
        for (int j = 0; j < v; ++j) {
            if (h.at(i, j) > 0) {
                g.add_arc(2 * i, 2 * j);
                g.add_arc(2 * i + 1, 2 * j + 1);
            } else {
                g.add_arc(2 * i, 2 * j + 1);
                g.add_arc(2 * i + 1, 2 * j);
            }
        }
    g.sort_arcs();
    return g;
}

ColoredDigraph gamma_graph(const HadamardMatrix& h)
{
    int v = h.order();
    ColoredDigraph g;
    g.n = v;
    g.colors.assign(static_cast<size_t>(v), 0);
    for (int i = 0; i < v; ++i)
        for (int j = 0; j < v; ++j)
            if (h.at(i, j) < 0)
                g.add_arc(i, j);
    g.sort_arcs();
    return g;
}

ColoredDigraph pair_graph(const HadamardMatrix& h)
{
    int v = h.order();
    ColoredDigraph g;
    g.n = 4 * v;
    g.colors.assign(static_cast<size_t>(g.n), 0);
    std::vector<int> blocks(static_cast<size_t>(g.n));
    for (int j = 0; j < 2 * v; ++j)
        g.colors[2 * v + j] = 1;
    for (int i = 0; i < 2 * v; ++i)
        blocks[2 * i] = blocks[2 * i + 1] = i;
    g.blocks = std::move(blocks);
    // r_i^s at 2i + [s=-1], c_j^t at 2v + 2j + [t=-1]
    for (int i = 0; i < v; ++i)
        for (int j = 0; j < v; ++j) {
            int rplus = 2 * i, rminus = 2 * i + 1;
            int cplus = 2 * v + 2 * j, cminus = 2 * v + 2 * j + 1;
            if (h.at(i, j) > 0) {
                g.add_edge(rplus, cplus);
                g.add_edge(rminus, cminus);
            } else {
                g.add_edge(rplus, cminus);
                g.add_edge(rminus, cplus);
            }
        }
    g.sort_arcs();
    return g;
}

ColoredDigraph relabel(const ColoredDigraph& g, const std::vector<int>& sigma)
{
    ColoredDigraph out;
    out.n = g.n;
    out.colors.assign(static_cast<size_t>(g.n), 0);
    for (int x = 0; x < g.n; ++x)
        out.colors[sigma[x]] = g.colors[x];
    if (g.blocks) {
        std::vector<int> b(static_cast<size_t>(g.n));
        for (int x = 0; x < g.n; ++x)
            b[sigma[x]] = (*g.blocks)[x];
        out.blocks = std::move(b);
    }
    out.arcs.reserve(g.arcs.size());
    for (auto [a, b] : g.arcs)
        out.add_arc(sigma[a], sigma[b]);
    out.sort_arcs();
    return out;
}

} // namespace benthad
