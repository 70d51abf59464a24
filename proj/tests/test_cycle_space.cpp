#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "isingrep/builders.hpp"
#include "isingrep/connectivity.hpp"
#include "isingrep/cycle_space.hpp"
#include "isingrep/mcmc.hpp"
#include "isingrep/rng.hpp"
#include "oracles.hpp"

using namespace isingrep;

namespace {

Multigraph complete4() {
    Multigraph g(4);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) g.add_edge(i, j);
    return g;
}

Multigraph loopy_multigraph() {
    Multigraph g(3);
    g.add_edge(0, 1);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 2);
    g.add_edge(2, 0);
    return g;
}

std::set<std::uint64_t> enumerated_masks(const Multigraph& g) {
    EvenSubgraphEnumerator en(g);
    std::set<std::uint64_t> out;
    do {
        out.insert(en.config().to_mask());
    } while (en.advance());
    return out;
}

} // namespace

TEST_CASE("edge config hex serialization") {
    Rng rng(31337, 0);
    for (int n : {1, 3, 4, 17, 64, 70}) {
        for (int it = 0; it < 20; ++it) {
            EdgeConfig c(n);
            for (int e = 0; e < n; ++e) c.set(e, rng.coin());
            CHECK(EdgeConfig::from_hex(n, c.to_hex()) == c);
        }
    }
    EdgeConfig six(6);
    six.set(0, true);
    six.set(5, true);
    CHECK(six.to_hex() == "12"); // low edges in the first digit
    CHECK_THROWS_AS(EdgeConfig::from_hex(6, "123"), std::invalid_argument);
    CHECK_THROWS_AS(EdgeConfig::from_hex(6, "1z"), std::invalid_argument);
    CHECK_THROWS_AS(EdgeConfig::from_hex(6, "1f"), std::invalid_argument); // bit past the end
}

TEST_CASE("basis shapes") {
    CHECK(cycle_basis(tree_ball(3, 2)).rank() == 0);

    CycleBasis c4 = cycle_basis(cycle_graph(2));
    REQUIRE(c4.rank() == 1);
    CHECK(c4.generators[0].count() == 4); // the whole cycle

    CHECK(cycle_basis(theta_gadget(3, 2)).rank() == 3);
    CHECK(cycle_basis(loopy_multigraph()).rank() == 3);
    for (const EdgeConfig& gen : cycle_basis(loopy_multigraph()).generators)
        CHECK(is_even(loopy_multigraph(), gen));
}

TEST_CASE("enumeration equals brute force") {
    Multigraph tri(3);
    tri.add_edge(0, 1);
    tri.add_edge(1, 2);
    tri.add_edge(2, 0);
    for (const Multigraph& g : {tri, cycle_graph(3), theta_gadget(2, 1), theta_gadget(3, 2),
                                complete4(), loopy_multigraph(), arc_chain(2)}) {
        auto brute = oracles::even_masks(g);
        auto mine = enumerated_masks(g);
        CHECK(mine == std::set<std::uint64_t>(brute.begin(), brute.end()));
        CHECK(mine.size() == (std::uint64_t(1) << g.cycle_rank()));
    }
}

TEST_CASE("random multigraphs enumerate the brute-force even set") {
    Rng rng(424242, 0);
    for (int it = 0; it < 60; ++it) {
        Multigraph g = oracles::random_multigraph(rng, 6, 9);
        CAPTURE(it);
        auto brute = oracles::even_masks(g);
        auto mine = enumerated_masks(g);
        CHECK(mine == std::set<std::uint64_t>(brute.begin(), brute.end()));
        CHECK(cycle_basis(g).rank() == g.cycle_rank());
        Rng sampler(it, 7);
        for (int k = 0; k < 10; ++k) CHECK(is_even(g, sample_ueg(g, sampler)));
    }
}

TEST_CASE("theta gadget even-subgraph table") {
    for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 1}, {3, 2}}) {
        Multigraph g = theta_gadget(n, m);
        auto [a, b] = *g.terminals();
        EvenSubgraphEnumerator en(g);
        std::multiset<int> sizes;
        int connecting = 0;
        do {
            sizes.insert(en.open_count());
            if (connected_in(g, en.config(), a, b)) ++connecting;
        } while (en.advance());
        std::multiset<int> want{0, 2 * n, 2 * m, n + m, n + m, n + m, n + m, 2 * n + 2 * m};
        CHECK(sizes == want);
        CHECK(connecting == 2);
    }
}

TEST_CASE("xor is a group operation") {
    Multigraph g = complete4();
    auto masks = enumerated_masks(g);
    std::vector<EdgeConfig> evens;
    for (auto m : masks) evens.push_back(EdgeConfig::from_mask(g.edge_count(), m));
    for (const auto& a : evens) {
        CHECK((a ^ a).none());
        CHECK((a ^ EdgeConfig(g.edge_count())) == a);
        for (const auto& b : evens) {
            EdgeConfig c = a ^ b;
            CHECK(is_even(g, c));
            CHECK(masks.count(c.to_mask()) == 1);
        }
    }
    EdgeConfig wrong(3);
    CHECK_THROWS_AS(wrong ^ evens[0], std::invalid_argument);
}

TEST_CASE("gray code steps flip one generator") {
    Multigraph g = theta_gadget(2, 2);
    CycleBasis basis = cycle_basis(g);
    EvenSubgraphEnumerator en(g);
    EdgeConfig prev = en.config();
    std::set<std::uint64_t> gens;
    for (const auto& gen : basis.generators) gens.insert(gen.to_mask());
    while (en.advance()) {
        EdgeConfig diff = en.config() ^ prev;
        CHECK(gens.count(diff.to_mask()) == 1);
        CHECK(en.open_count() == en.config().count());
        prev = en.config();
    }
}

TEST_CASE("enumerator seek and cap") {
    Multigraph g = complete4();
    EvenSubgraphEnumerator walk(g);
    for (std::uint64_t k = 0; k < walk.total(); ++k) {
        EvenSubgraphEnumerator jump(g);
        jump.seek(k);
        CHECK(jump.config() == walk.config());
        CHECK(jump.open_count() == walk.open_count());
        walk.advance();
    }

    Multigraph bouquet(1);
    for (int i = 0; i < 25; ++i) bouquet.add_edge(0, 0);
    try {
        EvenSubgraphEnumerator en(bouquet);
        FAIL("cap not enforced");
    } catch (const std::domain_error& e) {
        CHECK(std::string(e.what()).find("25") != std::string::npos);
    }
    CHECK_NOTHROW(EvenSubgraphEnumerator(bouquet, 25));
}

TEST_CASE("sample_ueg") {
    Rng rng(11, 0);
    Multigraph tree = tree_ball(3, 2);
    for (int i = 0; i < 200; ++i) CHECK(sample_ueg(tree, rng).none());

    // C4: empty and full, each about half the time
    Multigraph c4 = cycle_graph(2);
    int full = 0;
    const int draws = 4096;
    for (int i = 0; i < draws; ++i) {
        auto s = sample_ueg(c4, rng);
        CHECK((s.none() || s.count() == 4));
        if (s.count() == 4) ++full;
    }
    CHECK(full > draws / 2 - 300);
    CHECK(full < draws / 2 + 300);

    // uniformity over the 8 even subgraphs of K4 at significance 1e-3
    Multigraph k4 = complete4();
    auto masks = enumerated_masks(k4);
    std::map<std::uint64_t, long> counts;
    const int n = 100000;
    for (int i = 0; i < n; ++i) ++counts[sample_ueg(k4, rng).to_mask()];
    CHECK(counts.size() == 8);
    double chi2 = 0, expect = n / 8.0;
    for (auto m : masks) chi2 += (counts[m] - expect) * (counts[m] - expect) / expect;
    CHECK(chi2 < chi_square_quantile(7, 3.090232306167814));

    // determinism
    Rng r1(5, 1), r2(5, 1);
    for (int i = 0; i < 50; ++i) CHECK(sample_ueg(k4, r1) == sample_ueg(k4, r2));
}

TEST_CASE("bridges never open") {
    Multigraph g(4); // triangle + bridge (edge 3)
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.add_edge(2, 3);
    for (const auto& gen : cycle_basis(g).generators) CHECK(!gen.test(3));
    Rng rng(13, 0);
    for (int i = 0; i < 5000; ++i) CHECK(!sample_ueg(g, rng).test(3));
}

TEST_CASE("ueg_of_config") {
    Multigraph c4 = cycle_graph(2);
    Rng rng(17, 0);
    EdgeConfig all(c4.edge_count());
    for (int e = 0; e < 4; ++e) all.set(e, true);
    for (int i = 0; i < 100; ++i) {
        auto s = ueg_of_config(c4, all, rng);
        CHECK((s.none() || s.count() == 4));
    }

    EdgeConfig forest(c4.edge_count());
    forest.set(0, true);
    forest.set(1, true);
    for (int i = 0; i < 100; ++i) CHECK(ueg_of_config(c4, forest, rng).none());

    // an edge on a cycle of omega is open with probability exactly 1/2
    Multigraph tri(3);
    tri.add_edge(0, 1);
    tri.add_edge(1, 2);
    tri.add_edge(2, 0);
    EdgeConfig full(3);
    for (int e = 0; e < 3; ++e) full.set(e, true);
    long open = 0;
    const int n = 100000;
    for (int i = 0; i < n; ++i)
        if (ueg_of_config(tri, full, rng).test(0)) ++open;
    auto est = wilson_estimate(open, n);
    CHECK(std::abs(est.mean - 0.5) < 4 * est.standard_error());
}

TEST_CASE("halving isomorphism") {
    Multigraph tri(3);
    tri.add_edge(0, 1);
    tri.add_edge(1, 2);
    tri.add_edge(2, 0);
    HalvedGraph h = halve_edges(tri);

    CHECK(halving_project(h, EdgeConfig(h.graph.edge_count())).none());

    EdgeConfig c6(h.graph.edge_count());
    for (int e = 0; e < 6; ++e) c6.set(e, true);
    EdgeConfig back = halving_project(h, c6);
    CHECK(back.count() == 3);

    // exhaustive on halved K4: round trip, homomorphism, bijection, connectivity
    Multigraph k4 = complete4();
    HalvedGraph hk = halve_edges(k4);
    std::set<std::uint64_t> image;
    EvenSubgraphEnumerator en(hk.graph);
    do {
        EdgeConfig eta = halving_project(hk, en.config());
        CHECK(is_even(k4, eta));
        CHECK(halving_lift(hk, eta) == en.config());
        image.insert(eta.to_mask());
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v)
                CHECK(connected_in(k4, eta, u, v) == connected_in(hk.graph, en.config(), u, v));
    } while (en.advance());
    CHECK(image.size() == 8);

    // homomorphism on all pairs of basis elements
    CycleBasis hb = cycle_basis(hk.graph);
    for (const auto& g1 : hb.generators)
        for (const auto& g2 : hb.generators)
            CHECK(halving_project(hk, g1 ^ g2) ==
                  (halving_project(hk, g1) ^ halving_project(hk, g2)));

    EdgeConfig odd(hk.graph.edge_count());
    odd.set(0, true);
    CHECK_THROWS_AS(halving_project(hk, odd), std::domain_error);
}
