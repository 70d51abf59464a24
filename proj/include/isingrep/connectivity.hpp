#ifndef ISINGREP_CONNECTIVITY_HPP
#define ISINGREP_CONNECTIVITY_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "isingrep/dsu.hpp"
#include "isingrep/edge_config.hpp"
#include "isingrep/multigraph.hpp"

namespace isingrep {

inline void check_config_size(const Multigraph& g, const EdgeConfig& config) {
    if (config.size() != g.edge_count())
        throw std::invalid_argument("config length does not match the edge count");
}

inline bool connected_in(const Multigraph& g, const EdgeConfig& open, int u, int v) {
    check_config_size(g, open);
    if (u == v) return true;
    DisjointSets dsu(g.vertex_count());
    for (int e = 0; e < g.edge_count(); ++e)
        if (open.test(e)) dsu.unite(g.edge(e).u, g.edge(e).v);
    return dsu.connected(u, v);
}

inline bool connected_in_mask(const Multigraph& g, std::uint64_t mask, int u, int v) {
    if (u == v) return true;
    DisjointSets dsu(g.vertex_count());
    for (int e = 0; e < g.edge_count(); ++e)
        if ((mask >> e) & 1) dsu.unite(g.edge(e).u, g.edge(e).v);
    return dsu.connected(u, v);
}

/// Component label per vertex under the open edge set.
inline std::vector<int> component_labels_in(const Multigraph& g, const EdgeConfig& open) {
    check_config_size(g, open);
    DisjointSets dsu(g.vertex_count());
    for (int e = 0; e < g.edge_count(); ++e)
        if (open.test(e)) dsu.unite(g.edge(e).u, g.edge(e).v);
    std::vector<int> label(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) label[v] = dsu.find(v);
    return label;
}

} // namespace isingrep

#endif
