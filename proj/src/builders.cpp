#include "isingrep/builders.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace isingrep {

Multigraph cycle_graph(int n) {
    if (n < 1) throw std::invalid_argument("cycle_graph: n must be >= 1");
    Multigraph g(2 * n);
    for (int i = 0; i < 2 * n; ++i) g.add_edge(i, (i + 1) % (2 * n));
    g.set_terminals(0, n);
    return g;
}

Multigraph theta_gadget(int n, int m) {
    if (n < 1 || m < 1) throw std::invalid_argument("theta_gadget: path lengths must be >= 1");
    Multigraph g(2);
    const int j0 = 0, j1 = 1;
    // Appends a path of `len` edges from j0 to j1 and returns its interior ids.
    auto add_path = [&](int len) {
        std::vector<int> interior;
        int prev = j0;
        for (int k = 1; k < len; ++k) {
            int v = g.add_vertex();
            interior.push_back(v);
            g.add_edge(prev, v);
            prev = v;
        }
        g.add_edge(prev, j1);
        return interior;
    };
    auto outer1 = add_path(n);
    auto outer2 = add_path(n);
    auto inner1 = add_path(m);
    auto inner2 = add_path(m);
    if (m >= 2) {
        g.set_terminals(inner1[m / 2 - 1], inner2[m / 2 - 1]);
    } else if (n >= 2) {
        g.set_terminals(outer1[n / 2 - 1], outer2[n / 2 - 1]);
    } else {
        g.set_terminals(j0, j1); // four parallel edges
    }
    return g;
}

Multigraph tree_ball(int d, int radius) {
    if (d < 2) throw std::invalid_argument("tree_ball: d must be >= 2");
    if (radius < 0) throw std::invalid_argument("tree_ball: radius must be >= 0");
    Multigraph g(1);
    std::vector<int> frontier{0};
    for (int depth = 1; depth <= radius; ++depth) {
        std::vector<int> next;
        int children = (depth == 1) ? d : d - 1;
        for (int parent : frontier) {
            for (int c = 0; c < children; ++c) {
                int v = g.add_vertex();
                g.add_edge(parent, v);
                next.push_back(v);
            }
        }
        frontier = std::move(next);
    }
    g.set_boundary(frontier);
    return g;
}

Multigraph arc_chain(int N) {
    if (N < 1) throw std::invalid_argument("arc_chain: N must be >= 1");
    Multigraph g(2 * N + 1);
    auto id = [N](int k) { return k + N; }; // integer k in [-N, N]
    for (int k = -N; k < N; ++k) g.add_edge(id(k), id(k + 1));
    for (int k = 1; k <= N; ++k) g.add_edge(id(-k), id(k), "arc");
    return g;
}

Multigraph substitute_edges(const Multigraph& base, const Multigraph& gadget) {
    if (!gadget.terminals())
        throw std::invalid_argument("substitute_edges: gadget has no terminals");
    auto [a, b] = *gadget.terminals();
    if (a == b) throw std::invalid_argument("substitute_edges: gadget terminals coincide");
    for (const Edge& e : base.edges())
        if (e.u == e.v)
            throw std::invalid_argument("substitute_edges: base has a self-loop");

    const int vb = base.vertex_count();
    const int vg = gadget.vertex_count();
    Multigraph out(vb + base.edge_count() * (vg - 2));

    // Non-terminal gadget vertices, in id order, get a contiguous block per copy.
    std::vector<int> interior_index(vg, -1);
    int k = 0;
    for (int v = 0; v < vg; ++v)
        if (v != a && v != b) interior_index[v] = k++;

    for (int be = 0; be < base.edge_count(); ++be) {
        const Edge& e = base.edge(be);
        int src = std::min(e.u, e.v); // deterministic orientation
        int dst = std::max(e.u, e.v);
        int block = vb + be * (vg - 2);
        auto map_vertex = [&](int v) {
            if (v == a) return src;
            if (v == b) return dst;
            return block + interior_index[v];
        };
        for (int ge = 0; ge < gadget.edge_count(); ++ge) {
            const Edge& g2 = gadget.edge(ge);
            out.add_edge(map_vertex(g2.u), map_vertex(g2.v),
                         std::to_string(be) + ":" + std::to_string(ge));
        }
    }
    if (base.terminals()) out.set_terminals(base.terminals()->first, base.terminals()->second);
    if (!base.boundary().empty()) out.set_boundary(base.boundary());
    return out;
}

Multigraph wired_quotient(const Multigraph& g) {
    if (g.boundary().empty())
        throw std::invalid_argument("wired_quotient: boundary is empty");
    std::vector<int> map(g.vertex_count(), -1);
    int next = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!g.is_boundary(v)) map[v] = next++;
    const int ghost = next;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.is_boundary(v)) map[v] = ghost;

    Multigraph out(ghost + 1);
    for (int e = 0; e < g.edge_count(); ++e)
        out.add_edge(map[g.edge(e).u], map[g.edge(e).v], g.edge_label(e));
    if (g.terminals()) out.set_terminals(map[g.terminals()->first], map[g.terminals()->second]);
    out.set_boundary({ghost});
    return out;
}

HalvedGraph halve_edges(const Multigraph& g) {
    HalvedGraph h;
    h.base_vertex_count = g.vertex_count();
    h.graph = Multigraph(g.vertex_count() + g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        int mid = g.vertex_count() + e;
        int first = h.graph.add_edge(g.edge(e).u, mid);
        int second = h.graph.add_edge(g.edge(e).v, mid);
        h.halves.push_back({first, second});
    }
    if (g.terminals()) h.graph.set_terminals(g.terminals()->first, g.terminals()->second);
    if (!g.boundary().empty()) h.graph.set_boundary(g.boundary());
    return h;
}

int BlockPartition::block_of(int edge_id) const {
    for (int b = 0; b < static_cast<int>(blocks.size()); ++b)
        for (int e : blocks[b])
            if (e == edge_id) return b;
    return -1;
}

namespace {

// Iterative Hopcroft-Tarjan with an edge stack; parallel edges are genuine
// cycles (only the tree edge itself is skipped as a back edge), self-loops
// are emitted as singleton blocks directly.
struct BlockFinder {
    const Multigraph& g;
    std::vector<std::vector<std::pair<int, int>>> adj;
    std::vector<int> disc, low;
    std::vector<int> edge_stack;
    std::vector<char> edge_seen;
    BlockPartition result;
    int timer = 0;

    explicit BlockFinder(const Multigraph& graph)
        : g(graph), adj(graph.adjacency()), disc(graph.vertex_count(), -1),
          low(graph.vertex_count(), 0), edge_seen(graph.edge_count(), 0) {}

    void pop_block(int until_edge) {
        std::vector<int> block;
        while (true) {
            int e = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(e);
            if (e == until_edge) break;
        }
        std::sort(block.begin(), block.end());
        result.blocks.push_back(std::move(block));
    }

    void run() {
        for (int e = 0; e < g.edge_count(); ++e)
            if (g.edge(e).u == g.edge(e).v) {
                edge_seen[e] = 1;
                result.blocks.push_back({e});
            }
        for (int root = 0; root < g.vertex_count(); ++root) {
            if (disc[root] >= 0) continue;
            dfs(root);
        }
        std::sort(result.blocks.begin(), result.blocks.end(),
                  [](const auto& a, const auto& b) { return a.front() < b.front(); });
    }

    void dfs(int root) {
        struct Frame {
            int v;
            int parent_edge;
            size_t next = 0;
        };
        std::vector<Frame> stack{{root, -1}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next < adj[f.v].size()) {
                auto [e, w] = adj[f.v][f.next++];
                if (e == f.parent_edge || edge_seen[e]) continue;
                edge_seen[e] = 1;
                edge_stack.push_back(e);
                if (disc[w] < 0) {
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, e});
                } else {
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                int v = f.v;
                int pe = f.parent_edge;
                stack.pop_back();
                if (pe >= 0) {
                    int parent = stack.back().v;
                    low[parent] = std::min(low[parent], low[v]);
                    if (low[v] >= disc[parent]) pop_block(pe);
                }
            }
        }
    }
};

} // namespace

BlockPartition block_decomposition(const Multigraph& g) {
    BlockFinder finder(g);
    finder.run();
    return finder.result;
}

} // namespace isingrep
