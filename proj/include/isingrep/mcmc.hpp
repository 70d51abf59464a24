#ifndef ISINGREP_MCMC_HPP
#define ISINGREP_MCMC_HPP

#include <cstdint>
#include <vector>

#include "isingrep/edge_config.hpp"
#include "isingrep/multigraph.hpp"
#include "isingrep/rng.hpp"

namespace isingrep {

/// Chain parameters. Identical (graph, McConfig) pairs reproduce identical
/// sample streams byte-for-byte; independent chains use distinct streams.
/// Burn-in and thinning are sweep counts and are heuristics with no mixing
/// guarantee attached.
struct McConfig {
    std::uint64_t seed = 1;
    std::uint64_t stream = 0;
    int burn_in = 1000;
    int thinning = 10;
    int samples = 1;
};

/// Binomial proportion with a Wilson 95% half-width. Thinned samples are
/// treated as independent.
struct Estimate {
    double mean = 0.0;
    double half_width_95 = 0.0;
    long n = 0;

    double standard_error() const;
};

Estimate wilson_estimate(long successes, long trials);

/// Single-bond heat-bath dynamics for the random-cluster model with q = 2 at
/// p = 2x/(1+x): an edge whose endpoints are connected off it opens with
/// probability p, otherwise with probability p/(p + 2(1-p)). A self-loop is
/// trivially connected off itself. One sweep = |E| uniformly random edge
/// updates. Wired measures are sampled by passing the wired quotient graph.
class FkHeatBath {
public:
    FkHeatBath(const Multigraph& g, double x, Rng rng);

    void sweep();
    const EdgeConfig& state() const { return state_; }
    Rng& rng() { return rng_; }
    double edge_probability() const { return p_; }

private:
    bool connected_off(int skip_edge);
    void update_edge(int e);

    Multigraph g_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
    double p_;
    Rng rng_;
    EdgeConfig state_;
    std::vector<int> bfs_stack_;
    std::vector<char> bfs_seen_;
};

/// FK samples after burn-in, one per thinning stride.
std::vector<EdgeConfig> sample_fk(const Multigraph& g, double x, const McConfig& cfg);

/// Loop O(1) samples: the uniform even subgraph of each FK sample, with the
/// UEG coins drawn from the same stream.
std::vector<EdgeConfig> sample_loop(const Multigraph& g, double x, const McConfig& cfg);

/// Finite-volume analogue of the wired-tree comparison: on the wired ball of
/// the d-regular tree, the loop model's root-to-ghost connection probability
/// must be at least (x/2) * theta^2 up to Monte Carlo error, where theta is
/// the FK probability that a depth-1 vertex reaches the ghost off its parent
/// edge. Failure indicates an implementation bug, not new mathematics.
struct BoundCheck {
    enum class Verdict { Pass, Fail, Inconclusive };
    Verdict verdict = Verdict::Inconclusive;
    double lhs = 0.0;    ///< estimated loop root-to-ghost connection
    double rhs = 0.0;    ///< (x/2) theta^2 - 3 combined standard errors
    double margin = 0.0; ///< lhs - rhs
    Estimate theta;
    Estimate lambda;
};

BoundCheck wired_tree_bound_check(int d, int radius, double x, const McConfig& cfg);

/// Per-sample exact check of the halving coupling: open each half-edge of
/// G^{1/2} independently at p, declare a base edge open iff both halves are,
/// and require the connectivity relations on the original vertices to agree
/// exactly. Any violating sample is a hard failure.
struct CouplingCheck {
    long violations = 0;
    long samples = 0;

    bool pass() const { return violations == 0; }
};

CouplingCheck halving_coupling_check(const Multigraph& g, double p, const McConfig& cfg);

/// Exact and sampled checks that the uniform even subgraph of the arc chain
/// restricts to independent fair coins on the arcs: the projection of the
/// cycle basis onto the arc coordinates must have full rank N (Gaussian
/// elimination over GF(2)), every edge must lie in some generator (marginal
/// exactly 1/2), and a chi-square test over the 2^N sampled arc patterns must
/// pass at significance 10^-3.
struct ArcChainCheck {
    int arcs = 0;
    int projected_rank = 0;
    bool all_edges_covered = false;
    double chi_square = 0.0;
    double chi_square_threshold = 0.0;
    long samples = 0;

    bool exact_pass() const { return projected_rank == arcs && all_edges_covered; }
    bool sampled_pass() const { return chi_square < chi_square_threshold; }
};

ArcChainCheck arc_chain_marginal_check(int N, const McConfig& cfg);

/// Upper chi-square quantile via the Wilson-Hilferty cube approximation;
/// z is the standard normal quantile of the target level.
double chi_square_quantile(int dof, double z);

} // namespace isingrep

#endif
