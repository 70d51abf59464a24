#ifndef ISINGREP_TREE_ANALYSIS_HPP
#define ISINGREP_TREE_ANALYSIS_HPP

#include <functional>
#include <utility>
#include <vector>

#include "isingrep/models.hpp"
#include "isingrep/multigraph.hpp"

namespace isingrep {

/// Survival probability of the cluster of the root under Bernoulli(p) bond
/// percolation on the d-regular tree, via the Galton-Watson fixed point
/// e = (1 - p + p e)^(d-1) iterated monotonically from 0, with the root
/// correction survival = 1 - (1 - p + p e)^d. Subcritical and critical means
/// (p(d-1) <= 1) die out, so survival is exactly 0 there.
struct GWResult {
    double survival = 0.0;
    int iterations = 0;
    bool converged = false;
};

GWResult gw_survival(int d, double p);

/// Terminal-to-terminal connection probability of the gadget under the given
/// model family evaluated at parameter x: the effective Bernoulli parameter of
/// the substituted tree.
double effective_param(const Multigraph& gadget, const ModelSpec& family, double x,
                       int rank_cap = kDefaultRankCap, int edge_cap = kDefaultEdgeCap);

/// Reusable evaluator for effective_param; the Loop family precomputes the
/// even-subgraph edge-count profile so grid scans cost one enumeration total.
std::function<double(double)> make_effective_param(const Multigraph& gadget,
                                                   const ModelSpec& family,
                                                   int rank_cap = kDefaultRankCap,
                                                   int edge_cap = kDefaultEdgeCap);

/// Which tree percolation threshold to compare the effective parameter
/// against: p_c(T^d) = 1/(d-1); the d+1 variant is exposed for comparison
/// only.
enum class ThresholdConvention { DMinus1, DPlus1 };

struct RegimeReport {
    /// Maximal open subintervals of (0,1) where the effective parameter
    /// strictly exceeds the threshold, in increasing order.
    std::vector<std::pair<double, double>> intervals;
    double threshold = 0.0;
    double boundary_tolerance = 0.0;

    int complement_components() const;
    bool unique_transition() const;
};

/// Grid scan of x in (0,1) with bisection refinement of each boundary.
/// Threshold = 1/(dilution * (d-1)) (or d+1 under the other convention); ties
/// f(x) = threshold count as non-percolating (a critical Galton-Watson
/// process dies).
RegimeReport regime_scan(const Multigraph& gadget, const ModelSpec& family, int d,
                         double dilution = 1.0, int grid = 10000, double tol = 1e-9,
                         ThresholdConvention convention = ThresholdConvention::DMinus1,
                         int rank_cap = kDefaultRankCap, int edge_cap = kDefaultEdgeCap);

/// Closed-form critical points on the tree with every edge replaced by a
/// cycle of length 2n (free boundary), solving f(x_c) = 1/(d-1) for the
/// cycle-gadget two-point f of each model:
///   loop            (d-2)^(-1/(2n))                        for d >= 4
///   random cluster  ((d-1) - sqrt((d-1)^2-1))^(1/n)        for d >= 3
///   double current  ((2d-3) - sqrt((2d-3)^2-1))^(1/(2n))   for d >= 3
/// Degenerate (model, d) pairs throw std::domain_error naming the case.
double cnd_critical_closed(ModelKind model, int d, int n);

/// Critical point by bisection of the cycle-gadget two-point against
/// 1/(d-1); covers the single current, which has no closed form.
double cnd_critical_numeric(ModelKind model, int d, int n, double tol = 1e-12);

/// Bernoulli critical point of the edge-halved graph.
double halving_pc(double pc_base);
/// j-fold iterate: p0^(2^-j).
double halving_pc_iterate(double p0, int j);

} // namespace isingrep

#endif
