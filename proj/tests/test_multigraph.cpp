#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "isingrep/builders.hpp"
#include "isingrep/cycle_space.hpp"
#include "isingrep/multigraph.hpp"
#include "oracles.hpp"

using namespace isingrep;

namespace {

Multigraph two_triangles_shared_vertex() {
    Multigraph g(5);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.add_edge(0, 3);
    g.add_edge(3, 4);
    g.add_edge(4, 0);
    return g;
}

// Finest partition such that no simple cycle spans two parts, by direct
// cycle search.
std::set<std::vector<int>> brute_blocks(const Multigraph& g) {
    DisjointSets dsu(g.edge_count());
    for (std::uint64_t cyc : oracles::simple_cycles(g)) {
        int first = -1;
        for (int e = 0; e < g.edge_count(); ++e)
            if ((cyc >> e) & 1) {
                if (first < 0) first = e;
                dsu.unite(first, e);
            }
    }
    std::vector<std::vector<int>> grouped(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) grouped[dsu.find(e)].push_back(e);
    std::set<std::vector<int>> out;
    for (auto& b : grouped)
        if (!b.empty()) out.insert(b);
    return out;
}

std::set<std::vector<int>> as_set(const BlockPartition& p) {
    std::set<std::vector<int>> out;
    for (auto b : p.blocks) {
        std::sort(b.begin(), b.end());
        out.insert(b);
    }
    return out;
}

} // namespace

TEST_CASE("cycle_graph") {
    Multigraph c2 = cycle_graph(1);
    CHECK(c2.vertex_count() == 2);
    CHECK(c2.edge_count() == 2);
    CHECK(c2.terminals() == std::pair{0, 1});

    Multigraph c4 = cycle_graph(2);
    CHECK(c4.vertex_count() == 4);
    CHECK(c4.terminals() == std::pair{0, 2});

    Multigraph c24 = cycle_graph(12);
    CHECK(c24.vertex_count() == 24);
    CHECK(c24.edge_count() == 24);
    auto deg = c24.degrees();
    CHECK(std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; }));

    CHECK_THROWS_AS(cycle_graph(0), std::invalid_argument);
}

TEST_CASE("theta_gadget shapes") {
    Multigraph g = theta_gadget(12, 2);
    CHECK(g.vertex_count() == 26);
    CHECK(g.edge_count() == 28);
    auto [a, b] = *g.terminals();
    auto deg = g.degrees();
    CHECK(deg[a] == 2);
    CHECK(deg[b] == 2);
    CHECK(deg[0] == 4);
    CHECK(deg[1] == 4);

    Multigraph tiny = theta_gadget(1, 1);
    CHECK(tiny.vertex_count() == 2);
    CHECK(tiny.edge_count() == 4);
    CHECK(tiny.terminals() == std::pair{0, 1});

    Multigraph mid = theta_gadget(2, 2);
    CHECK(mid.vertex_count() == 6);
    CHECK(mid.edge_count() == 8);

    CHECK_THROWS_AS(theta_gadget(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(theta_gadget(2, 0), std::invalid_argument);
}

TEST_CASE("tree_ball") {
    Multigraph b1 = tree_ball(3, 1);
    CHECK(b1.vertex_count() == 4);
    CHECK(b1.edge_count() == 3);
    CHECK(b1.boundary().size() == 3);

    Multigraph b2 = tree_ball(3, 2);
    CHECK(b2.vertex_count() == 10);
    CHECK(b2.edge_count() == 9);
    CHECK(b2.boundary().size() == 6);

    Multigraph path = tree_ball(2, 5);
    CHECK(path.vertex_count() == 11);
    CHECK(path.edge_count() == 10);
    CHECK(path.boundary().size() == 2);
    auto deg = path.degrees();
    CHECK(std::count(deg.begin(), deg.end(), 1) == 2);
    CHECK(std::count(deg.begin(), deg.end(), 2) == 9);

    CHECK(tree_ball(3, 0).vertex_count() == 1);
}

TEST_CASE("arc_chain") {
    Multigraph a1 = arc_chain(1);
    CHECK(a1.vertex_count() == 3);
    CHECK(a1.edge_count() == 3);

    Multigraph a3 = arc_chain(3);
    CHECK(a3.vertex_count() == 7);
    int arcs = 0;
    for (int e = 0; e < a3.edge_count(); ++e)
        if (a3.edge_label(e) == "arc") ++arcs;
    CHECK(arcs == 3);
    CHECK(a3.edge_count() == 9);

    // every arc lies on a simple cycle together with path edges
    Multigraph a2 = arc_chain(2);
    auto cycles = oracles::simple_cycles(a2);
    for (int e = 0; e < a2.edge_count(); ++e) {
        if (a2.edge_label(e) != "arc") continue;
        bool on_cycle_with_path = false;
        for (auto c : cycles)
            if (((c >> e) & 1) && __builtin_popcountll(c) > 1) on_cycle_with_path = true;
        CHECK(on_cycle_with_path);
    }
}

TEST_CASE("substitute_edges") {
    // single edge base reproduces the gadget
    Multigraph base(2);
    base.add_edge(0, 1);
    Multigraph gadget = theta_gadget(2, 2);
    Multigraph sub = substitute_edges(base, gadget);
    CHECK(sub.vertex_count() == gadget.vertex_count());
    CHECK(sub.edge_count() == gadget.edge_count());
    auto dg = gadget.degrees();
    auto ds = sub.degrees();
    std::sort(dg.begin(), dg.end());
    std::sort(ds.begin(), ds.end());
    CHECK(dg == ds);
    CHECK(oracles::even_masks(sub).size() == oracles::even_masks(gadget).size());

    // monster truncation: counts and labels
    Multigraph ball = tree_ball(5, 2);
    Multigraph monster = substitute_edges(ball, theta_gadget(12, 2));
    CHECK(ball.edge_count() == 25);
    CHECK(monster.vertex_count() == ball.vertex_count() + 25 * (26 - 2));
    CHECK(monster.edge_count() == 25 * 28);
    CHECK(monster.edge_label(0) == "0:0");
    CHECK(monster.edge_label(28) == "1:0");
    CHECK(monster.boundary() == ball.boundary());

    // cycle substitution builds the ball of the cycle tree
    Multigraph cball = substitute_edges(tree_ball(3, 1), cycle_graph(2));
    CHECK(cball.vertex_count() == 4 + 3 * 2);
    CHECK(cball.edge_count() == 3 * 4);

    Multigraph no_terms(3);
    no_terms.add_edge(0, 1);
    CHECK_THROWS_AS(substitute_edges(base, no_terms), std::invalid_argument);
    Multigraph loopy(2);
    loopy.add_edge(0, 0);
    CHECK_THROWS_AS(substitute_edges(loopy, gadget), std::invalid_argument);
}

TEST_CASE("wired_quotient") {
    Multigraph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    path.set_boundary({0, 2});
    Multigraph w = wired_quotient(path);
    CHECK(w.vertex_count() == 2);
    CHECK(w.edge_count() == 2);
    CHECK(w.edge(0).u != w.edge(0).v); // parallel pair, not loops
    CHECK(w.boundary().size() == 1);

    Multigraph wb = wired_quotient(tree_ball(3, 1));
    CHECK(wb.vertex_count() == 2);
    CHECK(wb.edge_count() == 3);

    Multigraph single(2);
    single.add_edge(0, 1, "tag");
    single.set_boundary({0, 1});
    Multigraph ws = wired_quotient(single);
    CHECK(ws.vertex_count() == 1);
    CHECK(ws.edge(0).u == ws.edge(0).v);
    CHECK(ws.edge_label(0) == "tag"); // edge ids and labels preserved

    Multigraph no_bd(2);
    no_bd.add_edge(0, 1);
    CHECK_THROWS_AS(wired_quotient(no_bd), std::invalid_argument);
}

TEST_CASE("halve_edges") {
    Multigraph tri(3);
    tri.add_edge(0, 1);
    tri.add_edge(1, 2);
    tri.add_edge(2, 0);
    HalvedGraph h = halve_edges(tri);
    CHECK(h.graph.vertex_count() == 6);
    CHECK(h.graph.edge_count() == 6);
    auto deg = h.graph.degrees();
    CHECK(std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; }));

    // bipartite with parts V and E: every edge joins a base vertex to a midpoint
    for (const Edge& e : h.graph.edges()) {
        bool u_mid = e.u >= h.base_vertex_count;
        bool v_mid = e.v >= h.base_vertex_count;
        CHECK(u_mid != v_mid);
    }

    Multigraph single(2);
    single.add_edge(0, 1);
    HalvedGraph hs = halve_edges(single);
    CHECK(hs.graph.vertex_count() == 3);
    CHECK(hs.graph.edge_count() == 2);

    // halving the theta gadget doubles every path length
    HalvedGraph ht = halve_edges(theta_gadget(2, 2));
    Multigraph t44 = theta_gadget(4, 4);
    CHECK(ht.graph.vertex_count() == t44.vertex_count());
    CHECK(ht.graph.edge_count() == t44.edge_count());
    CHECK(oracles::even_masks(ht.graph).size() == 8);

    // self-loop becomes a doubled edge at the midpoint
    Multigraph loopy(1);
    loopy.add_edge(0, 0);
    HalvedGraph hl = halve_edges(loopy);
    CHECK(hl.graph.vertex_count() == 2);
    CHECK(hl.graph.edge_count() == 2);
    CHECK(oracles::even_masks(hl.graph).size() == 2);
}

TEST_CASE("block_decomposition") {
    Multigraph g = two_triangles_shared_vertex();
    BlockPartition p = block_decomposition(g);
    CHECK(p.blocks.size() == 2);
    CHECK(p.blocks[0].size() == 3);
    CHECK(p.blocks[1].size() == 3);

    Multigraph tree = tree_ball(3, 2);
    BlockPartition pt = block_decomposition(tree);
    CHECK(pt.blocks.size() == static_cast<size_t>(tree.edge_count()));

    // against the brute-force simple-cycle partition
    Multigraph mg(3);
    mg.add_edge(0, 1);
    mg.add_edge(0, 1);
    mg.add_edge(1, 2);
    mg.add_edge(2, 2);
    for (const Multigraph& h :
         {g, mg, theta_gadget(2, 1), arc_chain(2), substitute_edges(tree_ball(2, 1), theta_gadget(2, 1))}) {
        CHECK(as_set(block_decomposition(h)) == brute_blocks(h));
    }

    // gadget copies never share a block
    Multigraph sub = substitute_edges(tree_ball(2, 1), theta_gadget(2, 1));
    for (const auto& block : block_decomposition(sub).blocks) {
        std::set<std::string> bases;
        for (int e : block) {
            const std::string& label = sub.edge_label(e);
            bases.insert(label.substr(0, label.find(':')));
        }
        CHECK(bases.size() == 1);
    }
}

TEST_CASE("block decomposition on random multigraphs") {
    Rng rng(20240810, 0);
    for (int it = 0; it < 40; ++it) {
        Multigraph g = oracles::random_multigraph(rng, 6, 9);
        CAPTURE(it);
        BlockPartition p = block_decomposition(g);
        CHECK(as_set(p) == brute_blocks(g));
        // blocks partition the edge set
        std::vector<char> seen(g.edge_count(), 0);
        for (const auto& b : p.blocks)
            for (int e : b) {
                CHECK(!seen[e]);
                seen[e] = 1;
            }
        for (char s : seen) CHECK(s == 1);
    }
}

TEST_CASE("euler rank matches basis rank") {
    for (const Multigraph& g :
         {cycle_graph(3), theta_gadget(3, 2), tree_ball(3, 2), arc_chain(3),
          wired_quotient(tree_ball(3, 2)), halve_edges(theta_gadget(2, 1)).graph,
          two_triangles_shared_vertex()}) {
        CHECK(cycle_basis(g).rank() == g.cycle_rank());
    }
}

TEST_CASE("graph text round trip") {
    Multigraph g = theta_gadget(2, 1);
    g.set_boundary({0, 1});
    std::ostringstream os;
    write_graph(os, g);
    std::istringstream is(os.str());
    Multigraph back = read_graph(is);
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edge_count() == g.edge_count());
    CHECK(back.terminals() == g.terminals());
    CHECK(back.boundary() == g.boundary());
    for (int e = 0; e < g.edge_count(); ++e) {
        CHECK(back.edge(e).u == g.edge(e).u);
        CHECK(back.edge(e).v == g.edge(e).v);
        CHECK(back.edge_label(e) == g.edge_label(e));
    }

    std::istringstream labelled("vertices 3\nedge 0 1 arc\n# comment\nedge 1 2\n");
    Multigraph lg = read_graph(labelled);
    CHECK(lg.edge_label(0) == "arc");
    CHECK(lg.edge_label(1).empty());

    std::istringstream bad1("edge 0 1\n");
    CHECK_THROWS(read_graph(bad1));
    std::istringstream bad2("vertices 2\nedge 0 7\n");
    CHECK_THROWS(read_graph(bad2));
    std::istringstream bad3("vertices 2\nfrobnicate\n");
    CHECK_THROWS(read_graph(bad3));
}
