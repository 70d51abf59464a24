#ifndef ISINGREP_MULTIGRAPH_HPP
#define ISINGREP_MULTIGRAPH_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace isingrep {

struct Edge {
    int u;
    int v;
};

/// Finite undirected multigraph. Parallel edges and self-loops are first-class;
/// a self-loop contributes 2 to the degree of its vertex. Edge ids are stable:
/// the i-th edge added has id i. Instances are treated as immutable once a
/// constructor/transform has returned them.
class Multigraph {
public:
    Multigraph() = default;
    explicit Multigraph(int vertex_count);

    int add_vertex();
    /// Returns the id of the new edge. Self-loops (u == v) are allowed.
    int add_edge(int u, int v, std::string label = {});

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(int e) const { return edges_[e]; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::string& edge_label(int e) const { return labels_[e]; }

    void set_terminals(int a, int b);
    const std::optional<std::pair<int, int>>& terminals() const { return terminals_; }

    void set_boundary(std::vector<int> boundary);
    const std::vector<int>& boundary() const { return boundary_; }
    bool is_boundary(int v) const;

    /// Self-loops count 2.
    std::vector<int> degrees() const;

    /// adjacency()[v] lists (edge id, other endpoint); a self-loop appears once.
    std::vector<std::vector<std::pair<int, int>>> adjacency() const;

    std::vector<int> component_labels() const;
    int component_count() const;

    /// Cycle-space rank |E| - |V| + #components.
    int cycle_rank() const;

private:
    int vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::string> labels_;
    std::optional<std::pair<int, int>> terminals_;
    std::vector<int> boundary_;
};

/// Plain-text graph format:
///   vertices <n>
///   terminals <a> <b>          (optional)
///   boundary <v1> <v2> ...     (optional)
///   edge <u> <v> [label]       (one per edge; file order defines edge ids)
/// Lines starting with '#' and blank lines are ignored.
Multigraph read_graph(std::istream& in);
Multigraph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Multigraph& g);
void write_graph_file(const std::string& path, const Multigraph& g);

} // namespace isingrep

#endif
