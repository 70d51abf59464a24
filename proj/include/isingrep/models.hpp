#ifndef ISINGREP_MODELS_HPP
#define ISINGREP_MODELS_HPP

#include <memory>
#include <string>
#include <vector>

#include "isingrep/cycle_space.hpp"
#include "isingrep/edge_config.hpp"
#include "isingrep/multigraph.hpp"

namespace isingrep {

/// Edge count above which full subset enumeration refuses to run.
inline constexpr int kDefaultEdgeCap = 22;
/// Rank cap for double-current pair enumeration (cost 4^rank).
inline constexpr int kDefaultPairRankCap = 12;

enum class ModelKind {
    Loop,          ///< even subgraphs weighted x^{|eta|}
    RandomCluster, ///< loop union Bernoulli(x); FK-Ising with q = 2
    SingleCurrent, ///< loop union Bernoulli(1 - sqrt(1 - x^2)); traced sourceless current
    DoubleCurrent, ///< two loop layers union Bernoulli(x^2)
    Bernoulli,     ///< independent edges at p
    ArborealGas,   ///< Bernoulli(beta/(1+beta)) conditioned on no cycles
    Sprinkled,     ///< base model union independent Bernoulli(p)
};

/// Tagged description of a percolation measure. The x-family parameters are
/// accepted on the closed interval [0, 1]: the finite-graph measures are
/// well-defined at the endpoints and the endpoint values are used by the
/// phase-diagram code. MCMC operations enforce the open interval themselves.
struct ModelSpec {
    ModelKind kind = ModelKind::Loop;
    double param = 0.0;
    std::shared_ptr<const ModelSpec> base; ///< Sprinkled only

    static ModelSpec loop(double x);
    static ModelSpec random_cluster(double x);
    static ModelSpec single_current(double x);
    static ModelSpec double_current(double x);
    static ModelSpec bernoulli(double p);
    static ModelSpec arboreal_gas(double beta);
    static ModelSpec sprinkled(ModelSpec base, double p);

    /// Same family at a different parameter (a Sprinkled spec re-parameterizes
    /// its base and keeps its own p).
    ModelSpec with_parameter(double value) const;

    /// Derived sprinkle density: x for RandomCluster, 1 - sqrt(1-x^2) for
    /// SingleCurrent, x^2 for DoubleCurrent, p for Sprinkled.
    double sprinkle_probability() const;

    std::string name() const;
};

/// Exact probability vector over all 2^E edge configurations of a host graph,
/// indexed by edge bitmask.
class ExactDistribution {
public:
    explicit ExactDistribution(int n_edges);

    int edge_count() const { return n_; }
    std::uint64_t config_count() const { return std::uint64_t(1) << n_; }
    double operator[](std::uint64_t mask) const { return p_[mask]; }
    double& operator[](std::uint64_t mask) { return p_[mask]; }
    double total() const;
    void normalize();

    std::vector<std::pair<EdgeConfig, double>> support(double eps = 0.0) const;

private:
    int n_;
    std::vector<double> p_;
};

/// Partition function Z = sum over even subgraphs of x^{|eta|}, computed by
/// Gray-code enumeration with incremental weights.
double loop_partition(const Multigraph& g, double x, int rank_cap = kDefaultRankCap);

/// Loop O(1) two-point: probability that u and v are connected by open edges.
double loop_two_point(const Multigraph& g, double x, int u, int v,
                      int rank_cap = kDefaultRankCap);

/// Edge-count profile of the even subgraphs: coefficient k counts the even
/// subgraphs with k edges (and among them, those connecting u and v). One
/// enumeration pass supports evaluating the two-point at any x.
struct ConnectionPolynomial {
    std::vector<double> connected;
    std::vector<double> all;

    double eval(double x) const;
};
ConnectionPolynomial loop_connection_polynomial(const Multigraph& g, int u, int v,
                                                int rank_cap = kDefaultRankCap);

/// Exact two-point of loop(x) union Bernoulli(p). Degree-2 chains are
/// contracted before the sprinkle enumeration, so the effective cost is
/// 2^rank * 2^{chain-contracted edge count}; the edge cap applies to the
/// contracted count (a plain cycle contracts to two edges).
double sprinkled_two_point(const Multigraph& g, double x, double p, int u, int v,
                           int rank_cap = kDefaultRankCap, int edge_cap = kDefaultEdgeCap);

/// Exact two-point under any ModelSpec.
double model_two_point(const Multigraph& g, const ModelSpec& spec, int u, int v,
                       int rank_cap = kDefaultRankCap, int edge_cap = kDefaultEdgeCap);

/// Closed forms on the cycle of length 2n with antipodal terminals.
double cycle_sprinkled_two_point(int n, double x, double p);
double cycle_double_current_two_point(int n, double x, double p);

/// Standard-definition random-cluster distribution with q = 2 at raw edge
/// parameter p: weights p^{|w|} (1-p)^{|E|-|w|} 2^{kappa(w)}, kappa counting
/// components including isolated vertices. Kept independent of the
/// coupling-based code paths.
ExactDistribution fk_standard_distribution(const Multigraph& g, double p_edge,
                                           int edge_cap = kDefaultEdgeCap);

/// FK oracle at loop parameter x, i.e. fk_standard_distribution at
/// p = 2x/(1+x).
double rc_oracle_two_point(const Multigraph& g, double x, int u, int v,
                           int edge_cap = kDefaultEdgeCap);
ExactDistribution rc_oracle_distribution(const Multigraph& g, double x,
                                         int edge_cap = kDefaultEdgeCap);

/// Bernoulli(beta/(1+beta)) conditioned to contain no cycle, i.e. weights
/// beta^{|w|} restricted to forests.
double arboreal_two_point(const Multigraph& g, double beta, int u, int v,
                          int edge_cap = kDefaultEdgeCap);
ExactDistribution arboreal_distribution(const Multigraph& g, double beta,
                                        int edge_cap = kDefaultEdgeCap);

/// Full exact distribution of any ModelSpec over {0,1}^E.
ExactDistribution exact_distribution(const Multigraph& g, const ModelSpec& spec,
                                     int edge_cap = kDefaultEdgeCap,
                                     int rank_cap = kDefaultRankCap);

/// Connection probability of u and v under an exact distribution.
double two_point_of(const ExactDistribution& dist, const Multigraph& g, int u, int v);

/// Max absolute deviation between the joint distribution and the product of
/// its biconnected-block marginals. Requires at least two blocks.
double factorisation_check(const Multigraph& g, const ModelSpec& spec,
                           int edge_cap = kDefaultEdgeCap, int rank_cap = kDefaultRankCap);

double tv_distance(const ExactDistribution& a, const ExactDistribution& b);

/// The standard-FK edge parameter whose distribution is closest in total
/// variation to the coupled distribution loop(x) union Bernoulli(x), located
/// by a coarse grid plus golden-section refinement. Recovers the parameter
/// map p = 2x/(1+x) without assuming it.
double tv_minimizing_fk_edge(const Multigraph& g, double x, int edge_cap = kDefaultEdgeCap);

} // namespace isingrep

#endif
