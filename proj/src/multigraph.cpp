#include "isingrep/multigraph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "isingrep/dsu.hpp"

namespace isingrep {

Multigraph::Multigraph(int vertex_count) : vertex_count_(vertex_count) {
    if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
}

int Multigraph::add_vertex() { return vertex_count_++; }

int Multigraph::add_edge(int u, int v, std::string label) {
    if (u < 0 || u >= vertex_count_ || v < 0 || v >= vertex_count_)
        throw std::invalid_argument("edge endpoint out of range");
    edges_.push_back({u, v});
    labels_.push_back(std::move(label));
    return static_cast<int>(edges_.size()) - 1;
}

void Multigraph::set_terminals(int a, int b) {
    if (a < 0 || a >= vertex_count_ || b < 0 || b >= vertex_count_)
        throw std::invalid_argument("terminal out of range");
    terminals_ = {a, b};
}

void Multigraph::set_boundary(std::vector<int> boundary) {
    for (int v : boundary)
        if (v < 0 || v >= vertex_count_)
            throw std::invalid_argument("boundary vertex out of range");
    std::sort(boundary.begin(), boundary.end());
    boundary.erase(std::unique(boundary.begin(), boundary.end()), boundary.end());
    boundary_ = std::move(boundary);
}

bool Multigraph::is_boundary(int v) const {
    return std::binary_search(boundary_.begin(), boundary_.end(), v);
}

std::vector<int> Multigraph::degrees() const {
    std::vector<int> deg(vertex_count_, 0);
    for (const Edge& e : edges_) {
        deg[e.u] += 1;
        deg[e.v] += 1; // self-loop: u == v adds 2 in total
    }
    return deg;
}

std::vector<std::vector<std::pair<int, int>>> Multigraph::adjacency() const {
    std::vector<std::vector<std::pair<int, int>>> adj(vertex_count_);
    for (int e = 0; e < edge_count(); ++e) {
        const Edge& ed = edges_[e];
        adj[ed.u].push_back({e, ed.v});
        if (ed.u != ed.v) adj[ed.v].push_back({e, ed.u});
    }
    return adj;
}

std::vector<int> Multigraph::component_labels() const {
    DisjointSets dsu(vertex_count_);
    for (const Edge& e : edges_) dsu.unite(e.u, e.v);
    std::vector<int> label(vertex_count_, -1);
    int next = 0;
    for (int v = 0; v < vertex_count_; ++v) {
        int r = dsu.find(v);
        if (label[r] < 0) label[r] = next++;
        label[v] = label[r];
    }
    return label;
}

int Multigraph::component_count() const {
    if (vertex_count_ == 0) return 0;
    DisjointSets dsu(vertex_count_);
    for (const Edge& e : edges_) dsu.unite(e.u, e.v);
    return dsu.component_count();
}

int Multigraph::cycle_rank() const {
    return edge_count() - vertex_count() + component_count();
}

Multigraph read_graph(std::istream& in) {
    Multigraph g;
    bool have_vertices = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key) || key[0] == '#') continue;
        auto fail = [&](const std::string& what) {
            throw std::runtime_error("graph file line " + std::to_string(lineno) + ": " + what);
        };
        if (key == "vertices") {
            if (have_vertices) fail("duplicate 'vertices' line");
            int n;
            if (!(ls >> n) || n < 0) fail("bad vertex count");
            g = Multigraph(n);
            have_vertices = true;
        } else if (key == "terminals") {
            if (!have_vertices) fail("terminals before vertices");
            int a, b;
            if (!(ls >> a >> b)) fail("bad terminals");
            g.set_terminals(a, b);
        } else if (key == "boundary") {
            if (!have_vertices) fail("boundary before vertices");
            std::vector<int> bd;
            int v;
            while (ls >> v) bd.push_back(v);
            g.set_boundary(std::move(bd));
        } else if (key == "edge") {
            if (!have_vertices) fail("edge before vertices");
            int u, v;
            if (!(ls >> u >> v)) fail("bad edge endpoints");
            std::string label;
            ls >> label;
            if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
                fail("edge endpoint out of range");
            g.add_edge(u, v, std::move(label));
        } else {
            fail("unknown directive '" + key + "'");
        }
    }
    if (!have_vertices) throw std::runtime_error("graph file: missing 'vertices' line");
    return g;
}

Multigraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const Multigraph& g) {
    out << "vertices " << g.vertex_count() << "\n";
    if (g.terminals())
        out << "terminals " << g.terminals()->first << " " << g.terminals()->second << "\n";
    if (!g.boundary().empty()) {
        out << "boundary";
        for (int v : g.boundary()) out << " " << v;
        out << "\n";
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        out << "edge " << g.edge(e).u << " " << g.edge(e).v;
        if (!g.edge_label(e).empty()) out << " " << g.edge_label(e);
        out << "\n";
    }
}

void write_graph_file(const std::string& path, const Multigraph& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    write_graph(out, g);
}

} // namespace isingrep
