#ifndef ISINGREP_BUILDERS_HPP
#define ISINGREP_BUILDERS_HPP

#include <utility>
#include <vector>

#include "isingrep/multigraph.hpp"

namespace isingrep {

/// Cycle of length 2n with antipodal terminals. n = 1 degenerates to a doubled
/// edge between the two terminals.
Multigraph cycle_graph(int n);

/// Theta gadget: two junction vertices joined by four internally disjoint
/// paths, two of length n and two of length m. The terminals sit in the
/// interior of the two m-paths (falling back to the n-paths when m = 1, and to
/// the junctions themselves when n = m = 1), so that of the eight even
/// subgraphs exactly two connect the terminals.
///
/// Vertices: 0, 1 are the junctions; interiors follow path by path. Edges run
/// path by path from junction 0 to junction 1: the two n-paths first, then the
/// two m-paths.
Multigraph theta_gadget(int n, int m);

/// Ball of radius `radius` in the d-regular tree, rooted at vertex 0, vertices
/// in BFS order. Boundary = vertices at distance exactly `radius`.
Multigraph tree_ball(int d, int radius);

/// Path -N..N (vertex id k maps to integer k-N) plus arc edges (-k, k) for
/// 1 <= k <= N. Path edges come first; arcs carry the label "arc".
Multigraph arc_chain(int N);

/// Replace every base edge by a fresh copy of the gadget, identifying the
/// gadget terminals (a, b) with the base endpoints (min, max by vertex id).
/// Base vertices keep their ids; the interiors of the copy for base edge e
/// occupy a contiguous id block in base-edge order. Edge ids are grouped per
/// copy, in base-edge order, labelled "<base edge id>:<gadget edge id>".
Multigraph substitute_edges(const Multigraph& base, const Multigraph& gadget);

/// Merge all boundary vertices into a single vertex (the last vertex id of the
/// result, also its boundary). Edge count, order and ids are preserved; edges
/// between two boundary vertices become self-loops.
Multigraph wired_quotient(const Multigraph& g);

struct HalvedGraph {
    Multigraph graph; ///< bipartite on V(base) + one midpoint per base edge
    int base_vertex_count = 0;
    /// halves[e] = ids of the two half-edges of base edge e.
    std::vector<std::pair<int, int>> halves;

    int midpoint(int base_edge) const { return base_vertex_count + base_edge; }
};

/// Subdivide every edge once: edge e = (v, w) becomes (v, x_e), (w, x_e) with
/// midpoint x_e = |V| + e. A self-loop halves into a doubled edge at its
/// midpoint. Half-edges of base edge e have ids 2e and 2e+1.
HalvedGraph halve_edges(const Multigraph& g);

struct BlockPartition {
    /// Disjoint edge-id sets, one per biconnected component; bridges and
    /// self-loops are singleton blocks. Union = all edges.
    std::vector<std::vector<int>> blocks;

    int block_of(int edge_id) const;
};

/// Biconnected-component partition of the edge set: the finest partition such
/// that no simple cycle contains edges from two distinct parts.
BlockPartition block_decomposition(const Multigraph& g);

} // namespace isingrep

#endif
