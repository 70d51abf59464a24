// Brute-force reference implementations used as test oracles. These avoid
// the library's cycle-space, Gray-code and chain-contraction paths: even
// subgraphs are found by filtering all 2^E subsets on the degree condition,
// probabilities by direct summation.
#ifndef ISINGREP_TEST_ORACLES_HPP
#define ISINGREP_TEST_ORACLES_HPP

#include <cmath>
#include <cstdint>
#include <vector>

#include "isingrep/dsu.hpp"
#include "isingrep/multigraph.hpp"
#include "isingrep/rng.hpp"

namespace oracles {

using isingrep::DisjointSets;
using isingrep::Multigraph;

inline bool mask_even(const Multigraph& g, std::uint64_t m) {
    std::vector<int> parity(g.vertex_count(), 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!((m >> e) & 1)) continue;
        const auto& ed = g.edge(e);
        if (ed.u == ed.v) continue;
        parity[ed.u] ^= 1;
        parity[ed.v] ^= 1;
    }
    for (int p : parity)
        if (p) return false;
    return true;
}

inline bool mask_connected(const Multigraph& g, std::uint64_t m, int u, int v) {
    if (u == v) return true;
    DisjointSets dsu(g.vertex_count());
    for (int e = 0; e < g.edge_count(); ++e)
        if ((m >> e) & 1) dsu.unite(g.edge(e).u, g.edge(e).v);
    return dsu.connected(u, v);
}

inline std::vector<std::uint64_t> even_masks(const Multigraph& g) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t m = 0; m < (std::uint64_t(1) << g.edge_count()); ++m)
        if (mask_even(g, m)) out.push_back(m);
    return out;
}

inline double loop_partition(const Multigraph& g, double x) {
    double z = 0;
    for (std::uint64_t m : even_masks(g)) z += std::pow(x, __builtin_popcountll(m));
    return z;
}

inline double loop_two_point(const Multigraph& g, double x, int u, int v) {
    double num = 0, den = 0;
    for (std::uint64_t m : even_masks(g)) {
        double w = std::pow(x, __builtin_popcountll(m));
        den += w;
        if (mask_connected(g, m, u, v)) num += w;
    }
    return num / den;
}

inline double bernoulli_two_point(const Multigraph& g, double p, int u, int v) {
    const int ne = g.edge_count();
    double total = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t(1) << ne); ++m) {
        double pr = 1;
        for (int e = 0; e < ne; ++e) pr *= ((m >> e) & 1) ? p : 1 - p;
        if (mask_connected(g, m, u, v)) total += pr;
    }
    return total;
}

/// Distribution of eta union S for eta ~ loop(x), S ~ Bernoulli(p), indexed
/// by edge bitmask.
inline std::vector<double> sprinkled_distribution(const Multigraph& g, double x, double p) {
    const int ne = g.edge_count();
    std::vector<double> dist(std::uint64_t(1) << ne, 0.0);
    auto evens = even_masks(g);
    double z = 0;
    for (auto m : evens) z += std::pow(x, __builtin_popcountll(m));
    for (auto em : evens) {
        double w = std::pow(x, __builtin_popcountll(em)) / z;
        for (std::uint64_t s = 0; s < (std::uint64_t(1) << ne); ++s) {
            double pr = 1;
            for (int e = 0; e < ne; ++e) pr *= ((s >> e) & 1) ? p : 1 - p;
            dist[em | s] += w * pr;
        }
    }
    return dist;
}

inline double sprinkled_two_point(const Multigraph& g, double x, double p, int u, int v) {
    auto dist = sprinkled_distribution(g, x, p);
    double total = 0;
    for (std::uint64_t m = 0; m < dist.size(); ++m)
        if (mask_connected(g, m, u, v)) total += dist[m];
    return total;
}

/// All simple cycles as edge masks: nonempty subsets in which every touched
/// vertex has degree exactly 2 (self-loops count 2) and the touched edges
/// form a single connected piece.
inline std::vector<std::uint64_t> simple_cycles(const Multigraph& g) {
    std::vector<std::uint64_t> out;
    const int ne = g.edge_count();
    for (std::uint64_t m = 1; m < (std::uint64_t(1) << ne); ++m) {
        std::vector<int> deg(g.vertex_count(), 0);
        DisjointSets dsu(g.vertex_count());
        for (int e = 0; e < ne; ++e) {
            if (!((m >> e) & 1)) continue;
            const auto& ed = g.edge(e);
            deg[ed.u] += 1;
            deg[ed.v] += 1;
            dsu.unite(ed.u, ed.v);
        }
        bool ok = true;
        int root = -1, touched = 0;
        for (int v = 0; v < g.vertex_count() && ok; ++v) {
            if (deg[v] == 0) continue;
            if (deg[v] != 2) ok = false;
            ++touched;
            if (root < 0) root = v;
            ok = ok && dsu.connected(root, v);
        }
        if (ok && touched > 0) out.push_back(m);
    }
    return out;
}

/// Survival at the root of the depth-truncated Galton-Watson recursion:
/// theta_{k+1} = 1 - (1 - p theta_k)^(d-1) from theta_0 = 1, root-adjusted.
inline double gw_truncated(int d, double p, int depth) {
    double theta = 1.0;
    for (int k = 0; k < depth; ++k) theta = 1.0 - std::pow(1.0 - p * theta, d - 1);
    return 1.0 - std::pow(1.0 - p * theta, d);
}

/// Seeded generator of small messy multigraphs (parallel edges, self-loops,
/// possibly disconnected) for property tests.
inline Multigraph random_multigraph(isingrep::Rng& rng, int max_vertices, int max_edges) {
    int nv = 2 + static_cast<int>(rng.below(max_vertices - 1));
    int ne = 1 + static_cast<int>(rng.below(max_edges));
    Multigraph g(nv);
    for (int e = 0; e < ne; ++e) {
        int u = static_cast<int>(rng.below(nv));
        int v = rng.bernoulli(0.15) ? u : static_cast<int>(rng.below(nv));
        g.add_edge(u, v);
    }
    return g;
}

} // namespace oracles

#endif
