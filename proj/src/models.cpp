#include "isingrep/models.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "isingrep/connectivity.hpp"
#include "isingrep/dsu.hpp"

namespace isingrep {

namespace {

std::vector<double> power_table(double x, int max_k) {
    std::vector<double> p(max_k + 1);
    p[0] = 1.0;
    for (int k = 1; k <= max_k; ++k) p[k] = p[k - 1] * x;
    return p;
}

// Fixed-size blocks combined by a pairwise tree, so partial sums over index
// ranges recombine to the identical floating-point total.
class BlockedSum {
public:
    void add(double v) {
        acc_ += v;
        if (++n_ == kBlock) {
            partials_.push_back(acc_);
            acc_ = 0.0;
            n_ = 0;
        }
    }

    double total() const {
        std::vector<double> level = partials_;
        if (n_ > 0) level.push_back(acc_);
        if (level.empty()) return 0.0;
        while (level.size() > 1) {
            std::vector<double> up;
            for (size_t i = 0; i + 1 < level.size(); i += 2) up.push_back(level[i] + level[i + 1]);
            if (level.size() % 2) up.push_back(level.back());
            level = std::move(up);
        }
        return level[0];
    }

private:
    static constexpr std::uint64_t kBlock = 1u << 16;
    double acc_ = 0.0;
    std::uint64_t n_ = 0;
    std::vector<double> partials_;
};

void check_unit_interval(double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0))
        throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
}

void check_vertex(const Multigraph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("vertex id out of range");
}

void check_edge_cap(int n_edges, int cap, const char* what) {
    if (n_edges > cap)
        throw std::domain_error(std::string(what) + ": edge count " + std::to_string(n_edges) +
                                " exceeds the subset-enumeration cap " + std::to_string(cap));
}

} // namespace

ModelSpec ModelSpec::loop(double x) {
    check_unit_interval(x, "loop parameter x");
    return {ModelKind::Loop, x, nullptr};
}

ModelSpec ModelSpec::random_cluster(double x) {
    check_unit_interval(x, "random-cluster parameter x");
    return {ModelKind::RandomCluster, x, nullptr};
}

ModelSpec ModelSpec::single_current(double x) {
    check_unit_interval(x, "single-current parameter x");
    return {ModelKind::SingleCurrent, x, nullptr};
}

ModelSpec ModelSpec::double_current(double x) {
    check_unit_interval(x, "double-current parameter x");
    return {ModelKind::DoubleCurrent, x, nullptr};
}

ModelSpec ModelSpec::bernoulli(double p) {
    check_unit_interval(p, "Bernoulli parameter p");
    return {ModelKind::Bernoulli, p, nullptr};
}

ModelSpec ModelSpec::arboreal_gas(double beta) {
    if (!(beta >= 0.0)) throw std::invalid_argument("arboreal-gas parameter beta must be >= 0");
    return {ModelKind::ArborealGas, beta, nullptr};
}

ModelSpec ModelSpec::sprinkled(ModelSpec base, double p) {
    check_unit_interval(p, "sprinkle parameter p");
    ModelSpec s{ModelKind::Sprinkled, p, nullptr};
    s.base = std::make_shared<const ModelSpec>(std::move(base));
    return s;
}

ModelSpec ModelSpec::with_parameter(double value) const {
    switch (kind) {
        case ModelKind::Loop: return loop(value);
        case ModelKind::RandomCluster: return random_cluster(value);
        case ModelKind::SingleCurrent: return single_current(value);
        case ModelKind::DoubleCurrent: return double_current(value);
        case ModelKind::Bernoulli: return bernoulli(value);
        case ModelKind::ArborealGas: return arboreal_gas(value);
        case ModelKind::Sprinkled: return sprinkled(base->with_parameter(value), param);
    }
    throw std::logic_error("unreachable");
}

double ModelSpec::sprinkle_probability() const {
    switch (kind) {
        case ModelKind::Loop: return 0.0;
        case ModelKind::RandomCluster: return param;
        case ModelKind::SingleCurrent: return 1.0 - std::sqrt(1.0 - param * param);
        case ModelKind::DoubleCurrent: return param * param;
        case ModelKind::Bernoulli: return param;
        case ModelKind::ArborealGas: return 0.0;
        case ModelKind::Sprinkled: return param;
    }
    throw std::logic_error("unreachable");
}

std::string ModelSpec::name() const {
    auto num = [](double v) {
        std::string s = std::to_string(v);
        return s;
    };
    switch (kind) {
        case ModelKind::Loop: return "loop(" + num(param) + ")";
        case ModelKind::RandomCluster: return "rc(" + num(param) + ")";
        case ModelKind::SingleCurrent: return "current(" + num(param) + ")";
        case ModelKind::DoubleCurrent: return "current2(" + num(param) + ")";
        case ModelKind::Bernoulli: return "bern(" + num(param) + ")";
        case ModelKind::ArborealGas: return "forest(" + num(param) + ")";
        case ModelKind::Sprinkled: return "sprinkled(" + base->name() + "," + num(param) + ")";
    }
    throw std::logic_error("unreachable");
}

ExactDistribution::ExactDistribution(int n_edges) : n_(n_edges) {
    if (n_edges < 0 || n_edges > 24)
        throw std::domain_error("distribution over " + std::to_string(n_edges) +
                                " edges is too large to store");
    p_.assign(std::uint64_t(1) << n_edges, 0.0);
}

double ExactDistribution::total() const {
    BlockedSum s;
    for (double v : p_) s.add(v);
    return s.total();
}

void ExactDistribution::normalize() {
    double t = total();
    if (t <= 0.0) throw std::domain_error("cannot normalize a zero distribution");
    for (double& v : p_) v /= t;
}

std::vector<std::pair<EdgeConfig, double>> ExactDistribution::support(double eps) const {
    std::vector<std::pair<EdgeConfig, double>> out;
    for (std::uint64_t m = 0; m < config_count(); ++m)
        if (p_[m] > eps) out.push_back({EdgeConfig::from_mask(n_, m), p_[m]});
    return out;
}

double loop_partition(const Multigraph& g, double x, int rank_cap) {
    check_unit_interval(x, "x");
    EvenSubgraphEnumerator en(g, rank_cap);
    auto pw = power_table(x, g.edge_count());
    BlockedSum z;
    do {
        z.add(pw[en.open_count()]);
    } while (en.advance());
    return z.total();
}

double ConnectionPolynomial::eval(double x) const {
    double num = 0.0, den = 0.0, pw = 1.0;
    for (size_t k = 0; k < all.size(); ++k) {
        num += connected[k] * pw;
        den += all[k] * pw;
        pw *= x;
    }
    return num / den;
}

ConnectionPolynomial loop_connection_polynomial(const Multigraph& g, int u, int v, int rank_cap) {
    check_vertex(g, u);
    check_vertex(g, v);
    EvenSubgraphEnumerator en(g, rank_cap);
    ConnectionPolynomial poly;
    poly.connected.assign(g.edge_count() + 1, 0.0);
    poly.all.assign(g.edge_count() + 1, 0.0);
    do {
        int k = en.open_count();
        poly.all[k] += 1.0;
        if (connected_in(g, en.config(), u, v)) poly.connected[k] += 1.0;
    } while (en.advance());
    return poly;
}

double loop_two_point(const Multigraph& g, double x, int u, int v, int rank_cap) {
    check_unit_interval(x, "x");
    if (u == v) {
        check_vertex(g, u);
        return 1.0;
    }
    return loop_connection_polynomial(g, u, v, rank_cap).eval(x);
}

namespace {

// Quotient of a graph under contraction of its maximal degree-2 chains.
// Even subgraphs of the host correspond one-to-one to even subgraphs of the
// quotient (interior vertices force each chain to open or close as a whole),
// and for sprinkling a closed chain conducts fully with probability p^length.
struct ChainQuotient {
    Multigraph q;
    std::vector<int> seg_length; // per quotient edge
    int qu = -1, qv = -1;        // images of the query vertices
};

ChainQuotient contract_chains(const Multigraph& g, int u, int v) {
    auto deg = g.degrees();
    std::vector<char> super(g.vertex_count(), 0);
    for (int w = 0; w < g.vertex_count(); ++w) super[w] = deg[w] != 2;
    super[u] = super[v] = 1;

    // Components that are bare cycles need an anchor vertex.
    auto comp = g.component_labels();
    int n_comp = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<int> anchor(n_comp, -1);
    std::vector<char> has_super(n_comp, 0);
    for (int w = 0; w < g.vertex_count(); ++w) {
        if (super[w]) has_super[comp[w]] = 1;
        if (anchor[comp[w]] < 0) anchor[comp[w]] = w;
    }
    for (int c = 0; c < n_comp; ++c)
        if (!has_super[c]) super[anchor[c]] = 1;

    std::vector<int> qid(g.vertex_count(), -1);
    int nq = 0;
    for (int w = 0; w < g.vertex_count(); ++w)
        if (super[w]) qid[w] = nq++;

    ChainQuotient cq;
    cq.q = Multigraph(nq);
    auto adj = g.adjacency();
    std::vector<char> used(g.edge_count(), 0);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (!super[s]) continue;
        for (auto [e0, w0] : adj[s]) {
            if (used[e0]) continue;
            used[e0] = 1;
            int length = 1;
            int prev_edge = e0;
            int cur = w0;
            while (!super[cur]) {
                int next_edge = -1, next_v = -1;
                for (auto [e2, w2] : adj[cur])
                    if (e2 != prev_edge) {
                        next_edge = e2;
                        next_v = w2;
                    }
                used[next_edge] = 1;
                ++length;
                prev_edge = next_edge;
                cur = next_v;
            }
            cq.q.add_edge(qid[s], qid[cur]);
            cq.seg_length.push_back(length);
        }
    }
    cq.qu = qid[u];
    cq.qv = qid[v];
    return cq;
}

// Probability that qu and qv are connected once each closed quotient edge is
// opened independently with its conduct probability.
double sprinkle_reliability(const Multigraph& q, const EdgeConfig& open,
                            const std::vector<double>& conduct, int qu, int qv) {
    if (qu == qv) return 1.0;
    DisjointSets base(q.vertex_count());
    for (int e = 0; e < q.edge_count(); ++e)
        if (open.test(e)) base.unite(q.edge(e).u, q.edge(e).v);
    if (base.connected(qu, qv)) return 1.0;

    std::vector<int> closed;
    for (int e = 0; e < q.edge_count(); ++e)
        if (!open.test(e)) closed.push_back(e);
    const int k = static_cast<int>(closed.size());

    double total = 0.0;
    for (std::uint64_t s = 0; s < (std::uint64_t(1) << k); ++s) {
        double pr = 1.0;
        DisjointSets dsu = base;
        for (int i = 0; i < k; ++i) {
            if ((s >> i) & 1) {
                pr *= conduct[closed[i]];
                dsu.unite(q.edge(closed[i]).u, q.edge(closed[i]).v);
            } else {
                pr *= 1.0 - conduct[closed[i]];
            }
        }
        if (dsu.connected(qu, qv)) total += pr;
    }
    return total;
}

// Two-point of `layers` independent loop O(1) layers at parameter x, unioned
// with an independent Bernoulli(p) sprinkle, evaluated on the chain quotient.
double quotient_two_point(const ChainQuotient& cq, double x, double p, int layers, int rank_cap,
                          int edge_cap) {
    const Multigraph& q = cq.q;
    check_edge_cap(q.edge_count(), edge_cap, "sprinkled two-point (after chain contraction)");
    if (cq.qu == cq.qv) return 1.0;

    std::vector<double> conduct(q.edge_count());
    for (int e = 0; e < q.edge_count(); ++e) conduct[e] = std::pow(p, cq.seg_length[e]);

    int total_length = 0;
    for (int len : cq.seg_length) total_length += len;
    auto pw = power_table(x, std::max(total_length, 1) * std::max(layers, 1));

    auto base_length = [&](const EdgeConfig& c) {
        int len = 0;
        for (int e = 0; e < q.edge_count(); ++e)
            if (c.test(e)) len += cq.seg_length[e];
        return len;
    };

    CycleBasis basis = cycle_basis(q);
    if (layers == 2 && basis.rank() > std::min(rank_cap, kDefaultPairRankCap))
        throw std::domain_error("double-current pair enumeration: cycle rank " +
                                std::to_string(basis.rank()) + " exceeds the pair cap " +
                                std::to_string(std::min(rank_cap, kDefaultPairRankCap)));

    BlockedSum num, den;
    if (layers == 0) {
        EdgeConfig empty(q.edge_count());
        return sprinkle_reliability(q, empty, conduct, cq.qu, cq.qv);
    }
    if (layers == 1) {
        EvenSubgraphEnumerator en(basis, rank_cap);
        do {
            double w = pw[base_length(en.config())];
            den.add(w);
            num.add(w * sprinkle_reliability(q, en.config(), conduct, cq.qu, cq.qv));
        } while (en.advance());
        return num.total() / den.total();
    }
    // layers == 2
    EvenSubgraphEnumerator outer(basis, rank_cap);
    do {
        double w1 = pw[base_length(outer.config())];
        EvenSubgraphEnumerator inner(basis, rank_cap);
        do {
            double w = w1 * pw[base_length(inner.config())];
            den.add(w);
            EdgeConfig both = outer.config() | inner.config();
            num.add(w * sprinkle_reliability(q, both, conduct, cq.qu, cq.qv));
        } while (inner.advance());
    } while (outer.advance());
    return num.total() / den.total();
}

} // namespace

double sprinkled_two_point(const Multigraph& g, double x, double p, int u, int v, int rank_cap,
                           int edge_cap) {
    check_unit_interval(x, "x");
    check_unit_interval(p, "p");
    check_vertex(g, u);
    check_vertex(g, v);
    ChainQuotient cq = contract_chains(g, u, v);
    return quotient_two_point(cq, x, p, 1, rank_cap, edge_cap);
}

double model_two_point(const Multigraph& g, const ModelSpec& spec, int u, int v, int rank_cap,
                       int edge_cap) {
    check_vertex(g, u);
    check_vertex(g, v);
    if (u == v) return 1.0;
    switch (spec.kind) {
        case ModelKind::Loop:
            return loop_two_point(g, spec.param, u, v, rank_cap);
        case ModelKind::Bernoulli: {
            ChainQuotient cq = contract_chains(g, u, v);
            return quotient_two_point(cq, 0.0, spec.param, 0, rank_cap, edge_cap);
        }
        case ModelKind::RandomCluster:
        case ModelKind::SingleCurrent: {
            ChainQuotient cq = contract_chains(g, u, v);
            return quotient_two_point(cq, spec.param, spec.sprinkle_probability(), 1, rank_cap,
                                      edge_cap);
        }
        case ModelKind::DoubleCurrent: {
            ChainQuotient cq = contract_chains(g, u, v);
            return quotient_two_point(cq, spec.param, spec.sprinkle_probability(), 2, rank_cap,
                                      edge_cap);
        }
        case ModelKind::ArborealGas:
            return arboreal_two_point(g, spec.param, u, v, edge_cap);
        case ModelKind::Sprinkled: {
            if (spec.base->kind == ModelKind::Loop) {
                ChainQuotient cq = contract_chains(g, u, v);
                return quotient_two_point(cq, spec.base->param, spec.param, 1, rank_cap, edge_cap);
            }
            return two_point_of(exact_distribution(g, spec, edge_cap, rank_cap), g, u, v);
        }
    }
    throw std::logic_error("unreachable");
}

double cycle_sprinkled_two_point(int n, double x, double p) {
    if (n < 1) throw std::invalid_argument("cycle length parameter n must be >= 1");
    double xn = std::pow(x, n);
    double pn = std::pow(p, n);
    return (xn * xn + 2.0 * pn - pn * pn) / (1.0 + xn * xn);
}

double cycle_double_current_two_point(int n, double x, double p) {
    if (n < 1) throw std::invalid_argument("cycle length parameter n must be >= 1");
    double x2n = std::pow(x, 2 * n);
    double pn = std::pow(p, n);
    double denom = (1.0 + x2n) * (1.0 + x2n);
    return (2.0 * x2n + x2n * x2n + 2.0 * pn - pn * pn) / denom;
}

namespace {

// Adds `weight` spread over all Bernoulli(p) sprinkles of the complement of
// `mask`: result[mask | t] += weight * p^{|t|} (1-p)^{E - |mask| - |t|}.
void sprinkle_mass(ExactDistribution& out, std::uint64_t mask, double weight,
                   const std::vector<double>& ppow, const std::vector<double>& qpow, int n_edges) {
    const std::uint64_t full =
        n_edges == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n_edges) - 1;
    const std::uint64_t comp = full ^ mask;
    const int base_open = std::popcount(mask);
    std::uint64_t t = comp;
    while (true) {
        int extra = std::popcount(t);
        out[mask | t] += weight * ppow[extra] * qpow[n_edges - base_open - extra];
        if (t == 0) break;
        t = (t - 1) & comp;
    }
}

struct WeightedMask {
    std::uint64_t mask;
    double weight;
};

// All even subgraphs with their loop weights x^{|eta|}, plus the partition sum.
std::pair<std::vector<WeightedMask>, double> even_support(const Multigraph& g, double x,
                                                          int rank_cap) {
    auto pw = power_table(x, g.edge_count());
    EvenSubgraphEnumerator en(g, rank_cap);
    std::vector<WeightedMask> evens;
    BlockedSum z;
    do {
        double w = pw[en.open_count()];
        evens.push_back({en.config().to_mask(), w});
        z.add(w);
    } while (en.advance());
    return {std::move(evens), z.total()};
}

} // namespace

ExactDistribution exact_distribution(const Multigraph& g, const ModelSpec& spec, int edge_cap,
                                     int rank_cap) {
    const int ne = g.edge_count();
    check_edge_cap(ne, edge_cap, "exact_distribution");
    ExactDistribution out(ne);

    switch (spec.kind) {
        case ModelKind::Loop: {
            auto [evens, z] = even_support(g, spec.param, rank_cap);
            for (const auto& wm : evens) out[wm.mask] += wm.weight / z;
            break;
        }
        case ModelKind::Bernoulli: {
            auto ppow = power_table(spec.param, ne);
            auto qpow = power_table(1.0 - spec.param, ne);
            for (std::uint64_t m = 0; m < out.config_count(); ++m) {
                int k = std::popcount(m);
                out[m] = ppow[k] * qpow[ne - k];
            }
            break;
        }
        case ModelKind::ArborealGas: {
            auto bpow = power_table(spec.param, ne);
            for (std::uint64_t m = 0; m < out.config_count(); ++m) {
                DisjointSets dsu(g.vertex_count());
                bool forest = true;
                for (int e = 0; e < ne && forest; ++e)
                    if ((m >> e) & 1) forest = dsu.unite(g.edge(e).u, g.edge(e).v);
                if (forest) out[m] = bpow[std::popcount(m)];
            }
            out.normalize();
            break;
        }
        case ModelKind::RandomCluster:
        case ModelKind::SingleCurrent: {
            double p = spec.sprinkle_probability();
            auto ppow = power_table(p, ne);
            auto qpow = power_table(1.0 - p, ne);
            auto [evens, z] = even_support(g, spec.param, rank_cap);
            for (const auto& wm : evens)
                sprinkle_mass(out, wm.mask, wm.weight / z, ppow, qpow, ne);
            break;
        }
        case ModelKind::DoubleCurrent: {
            auto [evens, z] = even_support(g, spec.param, rank_cap);
            if (evens.size() > (std::uint64_t(1) << kDefaultPairRankCap))
                throw std::domain_error("double-current pair enumeration exceeds the pair cap");
            double p = spec.sprinkle_probability();
            auto ppow = power_table(p, ne);
            auto qpow = power_table(1.0 - p, ne);
            std::vector<double> pair_mass(out.config_count(), 0.0);
            for (const auto& a : evens)
                for (const auto& b : evens)
                    pair_mass[a.mask | b.mask] += (a.weight / z) * (b.weight / z);
            for (std::uint64_t m = 0; m < out.config_count(); ++m)
                if (pair_mass[m] > 0.0) sprinkle_mass(out, m, pair_mass[m], ppow, qpow, ne);
            break;
        }
        case ModelKind::Sprinkled: {
            ExactDistribution inner = exact_distribution(g, *spec.base, edge_cap, rank_cap);
            auto ppow = power_table(spec.param, ne);
            auto qpow = power_table(1.0 - spec.param, ne);
            for (std::uint64_t m = 0; m < inner.config_count(); ++m)
                if (inner[m] != 0.0) sprinkle_mass(out, m, inner[m], ppow, qpow, ne);
            break;
        }
    }
    return out;
}

double two_point_of(const ExactDistribution& dist, const Multigraph& g, int u, int v) {
    if (dist.edge_count() != g.edge_count())
        throw std::invalid_argument("distribution does not match the graph");
    check_vertex(g, u);
    check_vertex(g, v);
    BlockedSum s;
    for (std::uint64_t m = 0; m < dist.config_count(); ++m)
        if (dist[m] != 0.0 && connected_in_mask(g, m, u, v)) s.add(dist[m]);
    return s.total();
}

double rc_oracle_two_point(const Multigraph& g, double x, int u, int v, int edge_cap) {
    ExactDistribution dist = rc_oracle_distribution(g, x, edge_cap);
    return two_point_of(dist, g, u, v);
}

ExactDistribution fk_standard_distribution(const Multigraph& g, double p_edge, int edge_cap) {
    check_unit_interval(p_edge, "p");
    const int ne = g.edge_count();
    check_edge_cap(ne, edge_cap, "fk_standard_distribution");
    auto ppow = power_table(p_edge, ne);
    auto qpow = power_table(1.0 - p_edge, ne);
    ExactDistribution out(ne);
    for (std::uint64_t m = 0; m < out.config_count(); ++m) {
        DisjointSets dsu(g.vertex_count());
        for (int e = 0; e < ne; ++e)
            if ((m >> e) & 1) dsu.unite(g.edge(e).u, g.edge(e).v);
        int kappa = dsu.component_count();
        out[m] = ppow[std::popcount(m)] * qpow[ne - std::popcount(m)] * std::ldexp(1.0, kappa);
    }
    out.normalize();
    return out;
}

ExactDistribution rc_oracle_distribution(const Multigraph& g, double x, int edge_cap) {
    check_unit_interval(x, "x");
    return fk_standard_distribution(g, 2.0 * x / (1.0 + x), edge_cap);
}

ExactDistribution arboreal_distribution(const Multigraph& g, double beta, int edge_cap) {
    return exact_distribution(g, ModelSpec::arboreal_gas(beta), edge_cap);
}

double arboreal_two_point(const Multigraph& g, double beta, int u, int v, int edge_cap) {
    return two_point_of(arboreal_distribution(g, beta, edge_cap), g, u, v);
}

double factorisation_check(const Multigraph& g, const ModelSpec& spec, int edge_cap,
                           int rank_cap) {
    auto blocks = block_decomposition(g).blocks;
    if (blocks.size() < 2)
        throw std::invalid_argument("factorisation_check: graph has fewer than two blocks");
    ExactDistribution joint = exact_distribution(g, spec, edge_cap, rank_cap);

    auto extract = [](std::uint64_t m, const std::vector<int>& edges) {
        std::uint64_t key = 0;
        for (size_t i = 0; i < edges.size(); ++i)
            if ((m >> edges[i]) & 1) key |= std::uint64_t(1) << i;
        return key;
    };

    std::vector<std::vector<double>> marginals;
    for (const auto& b : blocks) marginals.emplace_back(std::uint64_t(1) << b.size(), 0.0);
    for (std::uint64_t m = 0; m < joint.config_count(); ++m)
        for (size_t i = 0; i < blocks.size(); ++i) marginals[i][extract(m, blocks[i])] += joint[m];

    double deviation = 0.0;
    for (std::uint64_t m = 0; m < joint.config_count(); ++m) {
        double prod = 1.0;
        for (size_t i = 0; i < blocks.size(); ++i) prod *= marginals[i][extract(m, blocks[i])];
        deviation = std::max(deviation, std::abs(joint[m] - prod));
    }
    return deviation;
}

double tv_distance(const ExactDistribution& a, const ExactDistribution& b) {
    if (a.edge_count() != b.edge_count())
        throw std::invalid_argument("total variation: edge counts differ");
    BlockedSum s;
    for (std::uint64_t m = 0; m < a.config_count(); ++m) s.add(std::abs(a[m] - b[m]));
    return 0.5 * s.total();
}

double tv_minimizing_fk_edge(const Multigraph& g, double x, int edge_cap) {
    const int ne = g.edge_count();
    check_edge_cap(ne, edge_cap, "tv_minimizing_fk_edge");
    ExactDistribution coupled = exact_distribution(g, ModelSpec::random_cluster(x), edge_cap);

    auto tv_at = [&](double p) { return tv_distance(fk_standard_distribution(g, p, edge_cap), coupled); };

    int best_k = 1;
    double best_v = std::numeric_limits<double>::infinity();
    for (int k = 1; k < 200; ++k) {
        double v = tv_at(k / 200.0);
        if (v < best_v) {
            best_v = v;
            best_k = k;
        }
    }
    double lo = std::max((best_k - 1) / 200.0, 1e-9);
    double hi = std::min((best_k + 1) / 200.0, 1.0 - 1e-9);

    const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = hi - inv_phi * (hi - lo), b = lo + inv_phi * (hi - lo);
    double fa = tv_at(a), fb = tv_at(b);
    while (hi - lo > 1e-10) {
        if (fa < fb) {
            hi = b;
            b = a;
            fb = fa;
            a = hi - inv_phi * (hi - lo);
            fa = tv_at(a);
        } else {
            lo = a;
            a = b;
            fa = fb;
            b = lo + inv_phi * (hi - lo);
            fb = tv_at(b);
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace isingrep
