#include "isingrep/cycle_space.hpp"

#include <bit>
#include <queue>
#include <stdexcept>
#include <string>

#include "isingrep/rng.hpp"

namespace isingrep {

namespace {

CycleBasis basis_impl(const Multigraph& g, const EdgeConfig* open) {
    const int nv = g.vertex_count();
    const int ne = g.edge_count();
    CycleBasis basis;
    basis.edge_count = ne;

    auto adj = g.adjacency();
    std::vector<int> parent_vertex(nv, -1);
    std::vector<int> parent_edge(nv, -1);
    std::vector<char> visited(nv, 0);
    std::vector<char> in_forest(ne, 0);

    for (int root = 0; root < nv; ++root) {
        if (visited[root]) continue;
        visited[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (auto [e, w] : adj[v]) {
                if (open && !open->test(e)) continue;
                if (visited[w]) continue;
                visited[w] = 1;
                parent_vertex[w] = v;
                parent_edge[w] = e;
                in_forest[e] = 1;
                q.push(w);
            }
        }
    }

    auto path_to_root = [&](int v, EdgeConfig& gen) {
        while (parent_edge[v] >= 0) {
            gen.flip(parent_edge[v]);
            v = parent_vertex[v];
        }
    };

    for (int e = 0; e < ne; ++e) {
        if (in_forest[e]) continue;
        if (open && !open->test(e)) continue;
        EdgeConfig gen(ne);
        gen.flip(e);
        if (g.edge(e).u != g.edge(e).v) {
            // Edges above the meeting point cancel mod 2.
            path_to_root(g.edge(e).u, gen);
            path_to_root(g.edge(e).v, gen);
        }
        basis.generators.push_back(std::move(gen));
    }
    return basis;
}

} // namespace

CycleBasis cycle_basis(const Multigraph& g) { return basis_impl(g, nullptr); }

CycleBasis cycle_basis(const Multigraph& g, const EdgeConfig& open_edges) {
    if (open_edges.size() != g.edge_count())
        throw std::invalid_argument("config length does not match the edge count");
    return basis_impl(g, &open_edges);
}

bool is_even(const Multigraph& g, const EdgeConfig& config) {
    if (config.size() != g.edge_count())
        throw std::invalid_argument("config length does not match the edge count");
    std::vector<int> deg(g.vertex_count(), 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!config.test(e)) continue;
        const Edge& ed = g.edge(e);
        if (ed.u == ed.v) continue; // contributes 2
        deg[ed.u] ^= 1;
        deg[ed.v] ^= 1;
    }
    for (int d : deg)
        if (d) return false;
    return true;
}

EvenSubgraphEnumerator::EvenSubgraphEnumerator(const Multigraph& g, int rank_cap)
    : EvenSubgraphEnumerator(cycle_basis(g), rank_cap) {}

EvenSubgraphEnumerator::EvenSubgraphEnumerator(CycleBasis basis, int rank_cap)
    : basis_(std::move(basis)), config_(basis_.edge_count) {
    if (basis_.rank() > rank_cap)
        throw std::domain_error("cycle rank " + std::to_string(basis_.rank()) +
                                " exceeds enumeration cap " + std::to_string(rank_cap));
}

bool EvenSubgraphEnumerator::advance() {
    index_ = (index_ + 1) & (total() - 1);
    if (index_ == 0) {
        config_.clear();
        open_count_ = 0;
        return false;
    }
    // Binary-reflected Gray code: step k flips generator countr_zero(k).
    const EdgeConfig& gen = basis_.generators[std::countr_zero(index_)];
    open_count_ += gen.count() - 2 * config_.overlap(gen);
    config_ ^= gen;
    return true;
}

void EvenSubgraphEnumerator::seek(std::uint64_t index) {
    if (index >= total()) throw std::out_of_range("enumerator index out of range");
    index_ = index;
    config_.clear();
    std::uint64_t gray = index ^ (index >> 1);
    for (int i = 0; gray; ++i, gray >>= 1)
        if (gray & 1) config_ ^= basis_.generators[i];
    open_count_ = config_.count();
}

EdgeConfig sample_ueg(const Multigraph& g, Rng& rng) {
    CycleBasis basis = cycle_basis(g);
    EdgeConfig out(g.edge_count());
    for (const EdgeConfig& gen : basis.generators)
        if (rng.coin()) out ^= gen;
    return out;
}

EdgeConfig ueg_of_config(const Multigraph& g, const EdgeConfig& omega, Rng& rng) {
    CycleBasis basis = cycle_basis(g, omega);
    EdgeConfig out(g.edge_count());
    for (const EdgeConfig& gen : basis.generators)
        if (rng.coin()) out ^= gen;
    return out;
}

EdgeConfig halving_project(const HalvedGraph& h, const EdgeConfig& eta_half) {
    if (!is_even(h.graph, eta_half))
        throw std::domain_error("halving_project: configuration is not even");
    const int ne = static_cast<int>(h.halves.size());
    EdgeConfig out(ne);
    for (int e = 0; e < ne; ++e) {
        bool first = eta_half.test(h.halves[e].first);
        // Evenness at the midpoint forces the two halves to agree.
        if (first) out.set(e, true);
    }
    return out;
}

EdgeConfig halving_lift(const HalvedGraph& h, const EdgeConfig& eta_base) {
    const int ne = static_cast<int>(h.halves.size());
    if (eta_base.size() != ne)
        throw std::invalid_argument("config length does not match the base edge count");
    EdgeConfig out(h.graph.edge_count());
    for (int e = 0; e < ne; ++e) {
        if (!eta_base.test(e)) continue;
        out.set(h.halves[e].first, true);
        out.set(h.halves[e].second, true);
    }
    return out;
}

} // namespace isingrep
