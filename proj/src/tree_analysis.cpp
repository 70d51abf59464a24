#include "isingrep/tree_analysis.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>

namespace isingrep {

GWResult gw_survival(int d, double p) {
    if (d < 2) throw std::invalid_argument("gw_survival: d must be >= 2");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gw_survival: p must lie in [0, 1]");
    if (p * (d - 1) <= 1.0) return {0.0, 0, true}; // (sub)critical offspring mean
    double e = 0.0;
    int it = 0;
    bool converged = false;
    const int max_iterations = 1000000;
    while (it < max_iterations) {
        double next = std::pow(1.0 - p + p * e, d - 1);
        ++it;
        if (std::abs(next - e) < 1e-14) {
            e = next;
            converged = true;
            break;
        }
        e = next;
    }
    double survival = 1.0 - std::pow(1.0 - p + p * e, d);
    return {survival, it, converged};
}

double effective_param(const Multigraph& gadget, const ModelSpec& family, double x, int rank_cap,
                       int edge_cap) {
    if (!gadget.terminals())
        throw std::invalid_argument("effective_param: gadget has no terminals");
    auto [a, b] = *gadget.terminals();
    return model_two_point(gadget, family.with_parameter(x), a, b, rank_cap, edge_cap);
}

std::function<double(double)> make_effective_param(const Multigraph& gadget,
                                                   const ModelSpec& family, int rank_cap,
                                                   int edge_cap) {
    if (!gadget.terminals())
        throw std::invalid_argument("effective_param: gadget has no terminals");
    auto [a, b] = *gadget.terminals();
    if (family.kind == ModelKind::Loop) {
        auto poly = std::make_shared<ConnectionPolynomial>(
            loop_connection_polynomial(gadget, a, b, rank_cap));
        return [poly](double x) { return poly->eval(x); };
    }
    auto g = std::make_shared<Multigraph>(gadget);
    return [g, family, a, b, rank_cap, edge_cap](double x) {
        return model_two_point(*g, family.with_parameter(x), a, b, rank_cap, edge_cap);
    };
}

int RegimeReport::complement_components() const {
    if (intervals.empty()) return 1;
    int n = static_cast<int>(intervals.size()) - 1;
    if (intervals.front().first > 0.0) ++n;
    if (intervals.back().second < 1.0) ++n;
    return n;
}

bool RegimeReport::unique_transition() const {
    return intervals.size() <= 1 && complement_components() <= 1;
}

RegimeReport regime_scan(const Multigraph& gadget, const ModelSpec& family, int d,
                         double dilution, int grid, double tol, ThresholdConvention convention,
                         int rank_cap, int edge_cap) {
    if (d < 2) throw std::invalid_argument("regime_scan: d must be >= 2");
    if (!(dilution > 0.0 && dilution <= 1.0))
        throw std::invalid_argument("regime_scan: dilution must lie in (0, 1]");
    if (grid < 2) throw std::invalid_argument("regime_scan: grid too small");
    if (!(tol > 0.0)) throw std::invalid_argument("regime_scan: tolerance must be positive");

    const int denom = convention == ThresholdConvention::DMinus1 ? d - 1 : d + 1;
    RegimeReport report;
    report.threshold = 1.0 / (dilution * denom);
    report.boundary_tolerance = tol;

    auto f = make_effective_param(gadget, family, rank_cap, edge_cap);
    auto percolates = [&](double x) { return f(x) > report.threshold; };
    auto refine = [&](double lo, double hi, bool lo_state) {
        while (hi - lo > tol) {
            double mid = 0.5 * (lo + hi);
            if (percolates(mid) == lo_state)
                lo = mid;
            else
                hi = mid;
        }
        return 0.5 * (lo + hi);
    };

    double open_lo = -1.0;
    bool prev = percolates(0.0);
    double prev_x = 0.0;
    for (int i = 1; i <= grid + 1; ++i) {
        double x = static_cast<double>(i) / (grid + 1);
        bool cur = percolates(x);
        if (cur != prev) {
            double boundary = refine(prev_x, x, prev);
            if (cur)
                open_lo = boundary;
            else
                report.intervals.push_back({open_lo, boundary});
        }
        prev = cur;
        prev_x = x;
    }
    if (prev) report.intervals.push_back({open_lo, 1.0});
    return report;
}

double cnd_critical_closed(ModelKind model, int d, int n) {
    if (n < 1) throw std::invalid_argument("cnd_critical_closed: n must be >= 1");
    switch (model) {
        case ModelKind::Loop:
            if (d < 4)
                throw std::domain_error(
                    "loop critical point on the cycle tree requires d >= 4 "
                    "(d = 3 gives x_c = 1; d = 2 leaves the formula undefined)");
            return std::pow(static_cast<double>(d - 2), -1.0 / (2 * n));
        case ModelKind::RandomCluster: {
            if (d < 3)
                throw std::domain_error(
                    "random-cluster critical point on the cycle tree requires d >= 3 "
                    "(d = 2 gives x_c = 1)");
            double t = d - 1.0;
            return std::pow(t - std::sqrt(t * t - 1.0), 1.0 / n);
        }
        case ModelKind::DoubleCurrent: {
            if (d < 3)
                throw std::domain_error(
                    "double-current critical point on the cycle tree requires d >= 3 "
                    "(d = 2 gives x_c = 1)");
            // Root of 1/(d-1) = 4 x^{2n} / (1 + x^{2n})^2 in z = x^{2n}.
            double t = 2.0 * d - 3.0;
            return std::pow(t - std::sqrt(t * t - 1.0), 1.0 / (2 * n));
        }
        default:
            throw std::invalid_argument(
                "closed-form critical points exist for loop, rc and current2 only");
    }
}

double cnd_critical_numeric(ModelKind model, int d, int n, double tol) {
    if (n < 1) throw std::invalid_argument("cnd_critical_numeric: n must be >= 1");
    if (d < 2) throw std::invalid_argument("cnd_critical_numeric: d must be >= 2");
    if (!(tol > 0.0)) throw std::invalid_argument("cnd_critical_numeric: bad tolerance");

    auto f = [&](double x) {
        switch (model) {
            case ModelKind::Loop: return cycle_sprinkled_two_point(n, x, 0.0);
            case ModelKind::RandomCluster: return cycle_sprinkled_two_point(n, x, x);
            case ModelKind::SingleCurrent:
                return cycle_sprinkled_two_point(n, x, 1.0 - std::sqrt(1.0 - x * x));
            case ModelKind::DoubleCurrent:
                return cycle_double_current_two_point(n, x, x * x);
            default:
                throw std::invalid_argument(
                    "critical-point solver covers loop, rc, current and current2");
        }
    };

    const double threshold = 1.0 / (d - 1);
    if (!(f(1.0) > threshold))
        throw std::domain_error("cnd_critical_numeric: 1/(d-1) is not bracketed; "
                                "the model does not percolate below x = 1 for d = " +
                                std::to_string(d));
    // The cycle-gadget two-point is increasing in x for every model here.
    double lo = 0.0, hi = 1.0;
    int iterations = 0;
    while (hi - lo > tol && iterations++ < 200) {
        double mid = 0.5 * (lo + hi);
        if (f(mid) < threshold)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double halving_pc(double pc_base) {
    if (!(pc_base >= 0.0 && pc_base <= 1.0))
        throw std::invalid_argument("halving_pc: p must lie in [0, 1]");
    return std::sqrt(pc_base);
}

double halving_pc_iterate(double p0, int j) {
    if (!(p0 >= 0.0 && p0 <= 1.0))
        throw std::invalid_argument("halving_pc_iterate: p must lie in [0, 1]");
    if (j < 0) throw std::invalid_argument("halving_pc_iterate: j must be >= 0");
    return std::pow(p0, std::ldexp(1.0, -j));
}

} // namespace isingrep
