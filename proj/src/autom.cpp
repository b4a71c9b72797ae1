#include "benthad/autom.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "benthad/errors.hpp"

namespace benthad {

namespace {

// Ordered partition as a list of cells; the cell sequence is the invariant
// that refinement and individualization keep isomorphism-independent.
using Partition = std::vector<std::vector<int>>;

struct Searcher {
    int n;
    std::vector<std::vector<int>> out_nbr, in_nbr;
    const ColoredDigraph* graph;

    // leaf anchors
    bool have_first = false;
    std::vector<int> first_order;
    std::vector<std::uint64_t> first_cert;
    std::vector<int> best_order;
    std::vector<std::uint64_t> best_cert;

    std::vector<Perm> gens;
    std::vector<int> prefix; // individualized vertices on the current path

    explicit Searcher(const ColoredDigraph& g) : n(g.n), graph(&g)
    {
        out_nbr.assign(static_cast<size_t>(n), {});
        in_nbr.assign(static_cast<size_t>(n), {});
        for (auto [a, b] : g.arcs) {
            out_nbr[a].push_back(b);
            in_nbr[b].push_back(a);
        }
    }

    // Splits cells by (out-degree, in-degree) towards splitter sets until
    // the partition is equitable. Fragment order follows the count pair,
    // so it is stable under relabeling.
    void refine(Partition& cells, std::vector<std::vector<int>> work) const
    {
        std::vector<int> outc(static_cast<size_t>(n), 0),
            inc(static_cast<size_t>(n), 0);
        while (!work.empty()) {
            if (static_cast<int>(cells.size()) == n)
                return; // discrete already, nothing left to split
            std::vector<int> splitter = std::move(work.back());
            work.pop_back();
            std::fill(outc.begin(), outc.end(), 0);
            std::fill(inc.begin(), inc.end(), 0);
            for (int s : splitter) {
                for (int t : out_nbr[s])
                    ++inc[t]; // arcs from splitter into t
                for (int t : in_nbr[s])
                    ++outc[t]; // arcs from t into splitter
            }
            auto splits = [&](const std::vector<int>& cell) {
                for (size_t i = 1; i < cell.size(); ++i)
                    if (outc[cell[i]] != outc[cell[0]] ||
                        inc[cell[i]] != inc[cell[0]])
                        return true;
                return false;
            };
            bool any = false;
            for (const auto& cell : cells)
                if (cell.size() > 1 && splits(cell)) {
                    any = true;
                    break;
                }
            if (!any)
                continue;
            Partition next;
            next.reserve(cells.size());
            for (auto& cell : cells) {
                if (cell.size() == 1 || !splits(cell)) {
                    next.push_back(std::move(cell));
                    continue;
                }
                std::map<std::pair<int, int>, std::vector<int>> split;
                for (int v : cell)
                    split[{outc[v], inc[v]}].push_back(v);
                for (auto& [key, frag] : split) {
                    work.push_back(frag);
                    next.push_back(std::move(frag));
                }
            }
            cells = std::move(next);
        }
    }

    bool discrete(const Partition& cells) const
    {
        return static_cast<int>(cells.size()) == n;
    }

    // index of the first smallest non-singleton cell, or -1
    int target_cell(const Partition& cells) const
    {
        int best = -1;
        size_t best_size = 0;
        for (size_t i = 0; i < cells.size(); ++i) {
            size_t s = cells[i].size();
            if (s > 1 && (best < 0 || s < best_size)) {
                best = static_cast<int>(i);
                best_size = s;
            }
        }
        return best;
    }

    // bit-packed adjacency of the relabeled graph, prefixed by the color
    // sequence; lexicographic comparison of these picks the canonical leaf
    std::vector<std::uint64_t> certificate(const std::vector<int>& order) const
    {
        std::vector<int> pos(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            pos[order[i]] = i;
        size_t words = (static_cast<size_t>(n) * n + 63) / 64;
        std::vector<std::uint64_t> cert(static_cast<size_t>(n) + words, 0);
        for (int i = 0; i < n; ++i)
            cert[i] = static_cast<std::uint64_t>(graph->colors[order[i]]);
        for (int a = 0; a < n; ++a)
            for (int b : out_nbr[a]) {
                size_t bit = static_cast<size_t>(pos[a]) * n + pos[b];
                cert[static_cast<size_t>(n) + bit / 64] |= 1ull << (bit % 64);
            }
        return cert;
    }

    void leaf(const Partition& cells)
    {
        std::vector<int> order(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            order[i] = cells[i][0];
        auto cert = certificate(order);
        if (!have_first) {
            have_first = true;
            first_order = order;
            first_cert = cert;
            best_order = std::move(order);
            best_cert = std::move(cert);
            return;
        }
        maybe_record_automorphism(order, cert, first_order, first_cert);
        if (cert > best_cert) {
            best_order = std::move(order);
            best_cert = std::move(cert);
        } else if (cert == best_cert) {
            maybe_record_automorphism(order, cert, best_order, best_cert);
        }
    }

    void maybe_record_automorphism(const std::vector<int>& order,
                                   const std::vector<std::uint64_t>& cert,
                                   const std::vector<int>& anchor_order,
                                   const std::vector<std::uint64_t>& anchor_cert)
    {
        if (cert != anchor_cert)
            return;
        // both leaves relabel to the same graph: map through the positions
        std::vector<int> img(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            img[order[i]] = anchor_order[i];
        Perm g(std::move(img));
        if (g.is_identity())
            return;
        if (std::find(gens.begin(), gens.end(), g) == gens.end())
            gens.push_back(std::move(g));
    }

    // orbit of the already-explored candidates under the automorphisms
    // found so far that fix the current prefix pointwise
    bool pruned(int w, const std::vector<int>& explored) const
    {
        if (explored.empty() || gens.empty())
            return false;
        std::vector<const Perm*> fixing;
        for (const auto& g : gens) {
            bool ok = true;
            for (int b : prefix)
                if (g[b] != b) {
                    ok = false;
                    break;
                }
            if (ok)
                fixing.push_back(&g);
        }
        if (fixing.empty())
            return false;
        std::vector<char> seen(static_cast<size_t>(n), 0);
        std::vector<int> queue(explored);
        for (int x : explored)
            seen[x] = 1;
        while (!queue.empty()) {
            int x = queue.back();
            queue.pop_back();
            if (x == w)
                return true;
            for (const Perm* g : fixing) {
                int y = (*g)[x];
                if (!seen[y]) {
                    seen[y] = 1;
                    queue.push_back(y);
                }
            }
        }
        return seen[w];
    }

    void search(const Partition& cells)
    {
        if (discrete(cells)) {
            leaf(cells);
            return;
        }
        int ti = target_cell(cells);
        const std::vector<int> target = cells[ti];
        std::vector<int> explored;
        for (int w : target) {
            if (pruned(w, explored))
                continue;
            Partition child;
            child.reserve(cells.size() + 1);
            for (size_t i = 0; i < cells.size(); ++i) {
                if (static_cast<int>(i) == ti) {
                    child.push_back({w});
                    std::vector<int> rest;
                    rest.reserve(target.size() - 1);
                    for (int x : target)
                        if (x != w)
                            rest.push_back(x);
                    child.push_back(std::move(rest));
                } else {
                    child.push_back(cells[i]);
                }
            }
            refine(child, {{w}});
            prefix.push_back(w);
            search(child);
            prefix.pop_back();
            explored.push_back(w);
        }
    }
};

} // namespace

AutomorphismResult automorphisms(const ColoredDigraph& g, int graph_limit)
{
    if (g.n > graph_limit)
        throw SizeLimitError("graph has " + std::to_string(g.n) +
                             " vertices, limit " + std::to_string(graph_limit));
    if (g.n == 0)
        return AutomorphismResult{PermutationGroup(0, {}), CanonicalForm{}};

    Searcher s(g);

    // initial partition: one cell per color, in color order
    std::map<int, std::vector<int>> by_color;
    for (int v = 0; v < g.n; ++v)
        by_color[g.colors[v]].push_back(v);
    Partition cells;
    std::vector<std::vector<int>> work;
    for (auto& [c, vs] : by_color) {
        work.push_back(vs);
        cells.push_back(std::move(vs));
    }
    s.refine(cells, std::move(work));
    s.search(cells);

    CanonicalForm cf;
    cf.n = g.n;
    cf.labeling.assign(static_cast<size_t>(g.n), 0);
    for (int i = 0; i < g.n; ++i)
        cf.labeling[s.best_order[i]] = i;
    cf.colors.resize(static_cast<size_t>(g.n));
    for (int v = 0; v < g.n; ++v)
        cf.colors[cf.labeling[v]] = g.colors[v];
    cf.arcs.reserve(g.arcs.size());
    for (auto [a, b] : g.arcs)
        cf.arcs.emplace_back(cf.labeling[a], cf.labeling[b]);
    std::sort(cf.arcs.begin(), cf.arcs.end());

    return AutomorphismResult{PermutationGroup(g.n, s.gens), std::move(cf)};
}

} // namespace benthad
