#include "isingrep/mcmc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "isingrep/builders.hpp"
#include "isingrep/connectivity.hpp"
#include "isingrep/cycle_space.hpp"

namespace isingrep {

namespace {

constexpr double kZ95 = 1.959963984540054;

void check_mc_config(const McConfig& cfg) {
    if (cfg.samples < 1) throw std::invalid_argument("McConfig: samples must be >= 1");
    if (cfg.burn_in < 0 || cfg.thinning < 0)
        throw std::invalid_argument("McConfig: burn-in and thinning must be >= 0");
}

void check_open_unit(double x) {
    if (!(x > 0.0 && x < 1.0)) throw std::invalid_argument("x must lie in (0, 1)");
}

} // namespace

double Estimate::standard_error() const { return half_width_95 / kZ95; }

Estimate wilson_estimate(long successes, long trials) {
    if (trials <= 0) throw std::invalid_argument("wilson_estimate: no trials");
    double n = static_cast<double>(trials);
    double ph = static_cast<double>(successes) / n;
    double z2 = kZ95 * kZ95;
    double hw = kZ95 * std::sqrt(ph * (1.0 - ph) / n + z2 / (4.0 * n * n)) / (1.0 + z2 / n);
    return {ph, hw, trials};
}

FkHeatBath::FkHeatBath(const Multigraph& g, double x, Rng rng)
    : g_(g), adj_(g.adjacency()), p_(2.0 * x / (1.0 + x)), rng_(rng),
      state_(g.edge_count()), bfs_seen_(g.vertex_count(), 0) {
    check_open_unit(x);
    bfs_stack_.reserve(g.vertex_count());
}

bool FkHeatBath::connected_off(int skip_edge) {
    const Edge& ed = g_.edge(skip_edge);
    if (ed.u == ed.v) return true;
    std::fill(bfs_seen_.begin(), bfs_seen_.end(), 0);
    bfs_stack_.clear();
    bfs_stack_.push_back(ed.u);
    bfs_seen_[ed.u] = 1;
    while (!bfs_stack_.empty()) {
        int v = bfs_stack_.back();
        bfs_stack_.pop_back();
        for (auto [e, w] : adj_[v]) {
            if (e == skip_edge || !state_.test(e) || bfs_seen_[w]) continue;
            if (w == ed.v) return true;
            bfs_seen_[w] = 1;
            bfs_stack_.push_back(w);
        }
    }
    return false;
}

void FkHeatBath::update_edge(int e) {
    double open_prob = connected_off(e) ? p_ : p_ / (p_ + 2.0 * (1.0 - p_));
    state_.set(e, rng_.bernoulli(open_prob));
}

void FkHeatBath::sweep() {
    const int ne = g_.edge_count();
    for (int k = 0; k < ne; ++k) update_edge(static_cast<int>(rng_.below(ne)));
}

std::vector<EdgeConfig> sample_fk(const Multigraph& g, double x, const McConfig& cfg) {
    check_mc_config(cfg);
    FkHeatBath chain(g, x, Rng(cfg.seed, cfg.stream));
    for (int s = 0; s < cfg.burn_in; ++s) chain.sweep();
    std::vector<EdgeConfig> out;
    out.reserve(cfg.samples);
    for (int i = 0; i < cfg.samples; ++i) {
        for (int s = 0; s < cfg.thinning; ++s) chain.sweep();
        out.push_back(chain.state());
    }
    return out;
}

std::vector<EdgeConfig> sample_loop(const Multigraph& g, double x, const McConfig& cfg) {
    check_mc_config(cfg);
    FkHeatBath chain(g, x, Rng(cfg.seed, cfg.stream));
    for (int s = 0; s < cfg.burn_in; ++s) chain.sweep();
    std::vector<EdgeConfig> out;
    out.reserve(cfg.samples);
    for (int i = 0; i < cfg.samples; ++i) {
        for (int s = 0; s < cfg.thinning; ++s) chain.sweep();
        out.push_back(ueg_of_config(g, chain.state(), chain.rng()));
    }
    return out;
}

BoundCheck wired_tree_bound_check(int d, int radius, double x, const McConfig& cfg) {
    if (d < 3) throw std::invalid_argument("wired_tree_bound_check: d must be >= 3");
    if (radius < 3) throw std::invalid_argument("wired_tree_bound_check: radius must be >= 3");
    check_open_unit(x);
    check_mc_config(cfg);

    Multigraph wired = wired_quotient(tree_ball(d, radius));
    const int root = 0;
    const int child = 1;       // first depth-1 vertex
    const int parent_edge = 0; // edge (root, child)
    const int ghost = wired.boundary().front();

    FkHeatBath chain(wired, x, Rng(cfg.seed, cfg.stream));
    for (int s = 0; s < cfg.burn_in; ++s) chain.sweep();

    long theta_hits = 0, lambda_hits = 0;
    for (int i = 0; i < cfg.samples; ++i) {
        for (int s = 0; s < cfg.thinning; ++s) chain.sweep();
        EdgeConfig omega = chain.state();
        omega.set(parent_edge, false);
        if (connected_in(wired, omega, child, ghost)) ++theta_hits;
        EdgeConfig eta = ueg_of_config(wired, chain.state(), chain.rng());
        if (connected_in(wired, eta, root, ghost)) ++lambda_hits;
    }

    BoundCheck result;
    result.theta = wilson_estimate(theta_hits, cfg.samples);
    result.lambda = wilson_estimate(lambda_hits, cfg.samples);
    double se_theta = result.theta.standard_error();
    double se_lambda = result.lambda.standard_error();
    double combined =
        std::sqrt(se_lambda * se_lambda + std::pow(x * result.theta.mean * se_theta, 2));
    result.lhs = result.lambda.mean;
    result.rhs = 0.5 * x * result.theta.mean * result.theta.mean - 3.0 * combined;
    result.margin = result.lhs - result.rhs;
    if (result.theta.mean <= 2.0 * se_theta)
        result.verdict = BoundCheck::Verdict::Inconclusive;
    else
        result.verdict =
            result.lhs >= result.rhs ? BoundCheck::Verdict::Pass : BoundCheck::Verdict::Fail;
    return result;
}

CouplingCheck halving_coupling_check(const Multigraph& g, double p, const McConfig& cfg) {
    for (const Edge& e : g.edges())
        if (e.u == e.v)
            throw std::invalid_argument("halving_coupling_check: graph has a self-loop");
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("halving_coupling_check: p must lie in [0, 1]");
    check_mc_config(cfg);

    HalvedGraph h = halve_edges(g);
    Rng rng(cfg.seed, cfg.stream);
    CouplingCheck result;
    result.samples = cfg.samples;
    for (int i = 0; i < cfg.samples; ++i) {
        EdgeConfig half(h.graph.edge_count());
        EdgeConfig base(g.edge_count());
        for (int e = 0; e < g.edge_count(); ++e) {
            bool first = rng.bernoulli(p);
            bool second = rng.bernoulli(p);
            half.set(h.halves[e].first, first);
            half.set(h.halves[e].second, second);
            base.set(e, first && second);
        }
        auto labels_half = component_labels_in(h.graph, half);
        auto labels_base = component_labels_in(g, base);
        bool violated = false;
        for (int u = 0; u < g.vertex_count() && !violated; ++u)
            for (int v = u + 1; v < g.vertex_count(); ++v)
                if ((labels_half[u] == labels_half[v]) != (labels_base[u] == labels_base[v])) {
                    violated = true;
                    break;
                }
        if (violated) ++result.violations;
    }
    return result;
}

double chi_square_quantile(int dof, double z) {
    double k = static_cast<double>(dof);
    double t = 1.0 - 2.0 / (9.0 * k) + z * std::sqrt(2.0 / (9.0 * k));
    return k * t * t * t;
}

ArcChainCheck arc_chain_marginal_check(int N, const McConfig& cfg) {
    if (N < 2) throw std::invalid_argument("arc_chain_marginal_check: N must be >= 2");
    if (N > 20) throw std::invalid_argument("arc_chain_marginal_check: N too large to tabulate");
    check_mc_config(cfg);

    Multigraph g = arc_chain(N);
    std::vector<int> arc_edges;
    for (int e = 0; e < g.edge_count(); ++e)
        if (g.edge_label(e) == "arc") arc_edges.push_back(e);

    ArcChainCheck result;
    result.arcs = static_cast<int>(arc_edges.size());

    CycleBasis basis = cycle_basis(g);
    std::vector<std::uint64_t> rows;
    EdgeConfig covered(g.edge_count());
    for (const EdgeConfig& gen : basis.generators) {
        covered |= gen;
        std::uint64_t row = 0;
        for (size_t i = 0; i < arc_edges.size(); ++i)
            if (gen.test(arc_edges[i])) row |= std::uint64_t(1) << i;
        if (row) rows.push_back(row);
    }
    int rank = 0;
    std::vector<std::uint64_t> pivot(64, 0);
    for (std::uint64_t row : rows) {
        for (int b = 63; b >= 0 && row; --b) {
            if (!((row >> b) & 1)) continue;
            if (!pivot[b]) {
                pivot[b] = row;
                ++rank;
                break;
            }
            row ^= pivot[b];
        }
    }
    result.projected_rank = rank;
    result.all_edges_covered = covered.count() == g.edge_count();

    // Sampled corroboration: arc patterns of exact UEG draws vs uniform.
    Rng rng(cfg.seed, cfg.stream);
    std::vector<long> counts(std::size_t(1) << N, 0);
    for (int i = 0; i < cfg.samples; ++i) {
        EdgeConfig eta = sample_ueg(g, rng);
        std::uint64_t pattern = 0;
        for (size_t j = 0; j < arc_edges.size(); ++j)
            if (eta.test(arc_edges[j])) pattern |= std::uint64_t(1) << j;
        ++counts[pattern];
    }
    double expected = static_cast<double>(cfg.samples) / static_cast<double>(counts.size());
    double chi2 = 0.0;
    for (long c : counts) {
        double diff = c - expected;
        chi2 += diff * diff / expected;
    }
    result.chi_square = chi2;
    // z for the 1 - 10^-3 normal quantile
    result.chi_square_threshold =
        chi_square_quantile(static_cast<int>(counts.size()) - 1, 3.090232306167814);
    result.samples = cfg.samples;
    return result;
}

} // namespace isingrep
