// Command-line front end: builds the graphs, runs curves / regime scans /
// critical-point tables / verification suites, and emits CSV with a
// reproducible manifest header.
//
// Exit codes: 0 success (and unique transition where applicable),
//             1 non-unique transition (regime-scan),
//             2 verification failure,
//             3 usage error.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "isingrep/builders.hpp"
#include "isingrep/connectivity.hpp"
#include "isingrep/cycle_space.hpp"
#include "isingrep/mcmc.hpp"
#include "isingrep/models.hpp"
#include "isingrep/multigraph.hpp"
#include "isingrep/tree_analysis.hpp"

namespace {

using namespace isingrep;

constexpr const char* kVersion = "0.1.0";

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string graph_digest(const Multigraph& g) {
    std::ostringstream os;
    write_graph(os, g);
    return "fnv1a:" + fnv1a_hex(os.str());
}

struct Manifest {
    std::string command;
    std::vector<std::pair<std::string, std::string>> flags;
    std::string digest;
    std::string out_path;

    void add(const std::string& key, const std::string& value) { flags.push_back({key, value}); }
    void add(const std::string& key, double value) { add(key, fmt(value)); }
    void add(const std::string& key, long long value) { add(key, std::to_string(value)); }

    void write(std::ostream& os) const {
        os << "# isingrep " << kVersion << "\n";
        os << "# command: " << command << "\n";
        os << "# flags:";
        for (const auto& [k, v] : flags) os << " " << k << "=" << v;
        os << "\n";
        if (!digest.empty()) os << "# graph-digest: " << digest << "\n";
        os << "# out: " << out_path << "\n";
    }
};

std::string default_out_path(const std::string& command) {
    const char* dir = std::getenv("ISINGREP_OUT_DIR");
    std::string base = dir && *dir ? dir : ".";
    return base + "/" + command + ".csv";
}

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw CLI::ValidationError("--out", "cannot open output file: " + path);
    return os;
}

struct GadgetOptions {
    std::string gadget = "theta:12,2";
    std::string graph_file;
};

Multigraph resolve_gadget(const GadgetOptions& opt, bool need_terminals = true) {
    if (!opt.graph_file.empty()) {
        Multigraph g = read_graph_file(opt.graph_file);
        if (need_terminals && !g.terminals())
            throw CLI::ValidationError("--graph", "graph file must declare terminals");
        return g;
    }
    const std::string& s = opt.gadget;
    if (s == "edge") {
        Multigraph g(2);
        g.add_edge(0, 1);
        g.set_terminals(0, 1);
        return g;
    }
    auto parse_ints = [&](const std::string& body, int want) {
        std::vector<int> vals;
        std::stringstream ss(body);
        std::string tok;
        while (std::getline(ss, tok, ',')) vals.push_back(std::stoi(tok));
        if (static_cast<int>(vals.size()) != want)
            throw CLI::ValidationError("--gadget", "bad gadget spec: " + s);
        return vals;
    };
    if (s.rfind("theta:", 0) == 0) {
        auto v = parse_ints(s.substr(6), 2);
        return theta_gadget(v[0], v[1]);
    }
    if (s.rfind("cycle:", 0) == 0) {
        auto v = parse_ints(s.substr(6), 1);
        return cycle_graph(v[0]);
    }
    throw CLI::ValidationError("--gadget", "expected theta:n,m | cycle:n | edge, got " + s);
}

ModelSpec resolve_model(const std::string& name, double x, double p) {
    if (name == "loop") return ModelSpec::loop(x);
    if (name == "rc") return ModelSpec::random_cluster(x);
    if (name == "current") return ModelSpec::single_current(x);
    if (name == "current2") return ModelSpec::double_current(x);
    if (name == "bern") return ModelSpec::bernoulli(p);
    if (name == "forest") return ModelSpec::arboreal_gas(p);
    throw CLI::ValidationError("--model",
                               "expected loop|rc|current|current2|bern|forest, got " + name);
}

// ----------------------------------------------------------------- commands

struct CurveArgs {
    GadgetOptions gadget;
    std::string model = "loop";
    int grid = 501;
    double p = 0.5;
    std::string out;
};

int run_gadget_curve(const CurveArgs& a) {
    Multigraph gadget = resolve_gadget(a.gadget);
    ModelSpec family = resolve_model(a.model, 0.5, a.p);
    auto f = make_effective_param(gadget, family);

    std::string path = a.out.empty() ? default_out_path("gadget-curve") : a.out;
    Manifest man;
    man.command = "gadget-curve";
    man.add("gadget", a.gadget.graph_file.empty() ? a.gadget.gadget : a.gadget.graph_file);
    man.add("model", a.model);
    if (a.model == "bern" || a.model == "forest") man.add("p", a.p);
    man.add("grid", static_cast<long long>(a.grid));
    man.digest = graph_digest(gadget);
    man.out_path = path;

    auto os = open_out(path);
    man.write(os);
    os << "x,value\n";
    for (int k = 0; k < a.grid; ++k) {
        double x = static_cast<double>(k) / (a.grid - 1);
        os << fmt(x) << "," << fmt(f(x)) << "\n";
    }
    std::cout << "wrote " << path << "\n";
    return 0;
}

struct RegimeArgs {
    GadgetOptions gadget;
    std::string model = "loop";
    int d = 5;
    double dilution = 1.0;
    int grid = 10000;
    double tol = 1e-9;
    std::string convention = "dminus1";
    std::string out;
};

int run_regime_scan(const RegimeArgs& a) {
    Multigraph gadget = resolve_gadget(a.gadget);
    ModelSpec family = resolve_model(a.model, 0.5, 0.5);
    if (a.convention != "dminus1" && a.convention != "dplus1")
        throw CLI::ValidationError("--threshold-convention", "expected dminus1|dplus1");
    ThresholdConvention conv =
        a.convention == "dplus1" ? ThresholdConvention::DPlus1 : ThresholdConvention::DMinus1;

    RegimeReport report = regime_scan(gadget, family, a.d, a.dilution, a.grid, a.tol, conv);

    std::string path = a.out.empty() ? default_out_path("regime-scan") : a.out;
    Manifest man;
    man.command = "regime-scan";
    man.add("gadget", a.gadget.graph_file.empty() ? a.gadget.gadget : a.gadget.graph_file);
    man.add("model", a.model);
    man.add("d", static_cast<long long>(a.d));
    man.add("dilution", a.dilution);
    man.add("grid", static_cast<long long>(a.grid));
    man.add("tol", a.tol);
    man.add("threshold-convention", a.convention);
    man.digest = graph_digest(gadget);
    man.out_path = path;

    auto os = open_out(path);
    man.write(os);
    os << "# threshold: " << fmt(report.threshold) << "\n";
    os << "# complement-components: " << report.complement_components() << "\n";
    os << "# transition: " << (report.unique_transition() ? "unique" : "non-unique") << "\n";
    os << "lo,hi\n";
    for (auto [lo, hi] : report.intervals) os << fmt(lo) << "," << fmt(hi) << "\n";

    std::cout << (report.unique_transition() ? "unique" : "non-unique")
              << " transition; threshold " << fmt(report.threshold) << "; "
              << report.intervals.size() << " interval(s); wrote " << path << "\n";
    return report.unique_transition() ? 0 : 1;
}

struct CriticalArgs {
    std::string d_range = "4..8";
    std::string n_range = "1..4";
    double tol = 1e-12;
    std::string out;
};

std::pair<int, int> parse_range(const std::string& s, const char* flag) {
    auto pos = s.find("..");
    try {
        if (pos == std::string::npos) {
            int v = std::stoi(s);
            return {v, v};
        }
        return {std::stoi(s.substr(0, pos)), std::stoi(s.substr(pos + 2))};
    } catch (const std::exception&) {
        throw CLI::ValidationError(flag, "expected an integer or lo..hi, got " + s);
    }
}

int run_critical_points(const CriticalArgs& a) {
    auto [d_lo, d_hi] = parse_range(a.d_range, "--d");
    auto [n_lo, n_hi] = parse_range(a.n_range, "--n");
    if (d_lo > d_hi || n_lo > n_hi) throw CLI::ValidationError("--d/--n", "empty range");

    std::string path = a.out.empty() ? default_out_path("critical-points") : a.out;
    Manifest man;
    man.command = "critical-points";
    man.add("d", a.d_range);
    man.add("n", a.n_range);
    man.add("tol", a.tol);
    man.out_path = path;

    auto os = open_out(path);
    man.write(os);
    os << "model,d,n,x_c_closed,x_c_numeric,abs_diff,note\n";

    struct Row {
        const char* name;
        ModelKind kind;
        bool has_closed;
    };
    const Row rows[] = {{"loop", ModelKind::Loop, true},
                        {"current", ModelKind::SingleCurrent, false},
                        {"current2", ModelKind::DoubleCurrent, true},
                        {"rc", ModelKind::RandomCluster, true}};

    for (int d = d_lo; d <= d_hi; ++d) {
        for (int n = n_lo; n <= n_hi; ++n) {
            std::vector<std::optional<double>> numeric(4);
            for (int i = 0; i < 4; ++i) {
                const Row& r = rows[i];
                std::string closed_s = "NA", numeric_s = "NA", diff_s = "NA", note;
                std::optional<double> closed;
                if (r.has_closed) {
                    try {
                        closed = cnd_critical_closed(r.kind, d, n);
                        closed_s = fmt(*closed);
                    } catch (const std::domain_error& err) {
                        note = err.what();
                    }
                } else {
                    note = "no closed form";
                }
                try {
                    double num = cnd_critical_numeric(r.kind, d, n, a.tol);
                    numeric[i] = num;
                    numeric_s = fmt(num);
                    if (closed) diff_s = fmt(std::abs(num - *closed));
                } catch (const std::domain_error& err) {
                    if (note.empty()) note = err.what();
                }
                os << r.name << "," << d << "," << n << "," << closed_s << "," << numeric_s << ","
                   << diff_s << "," << (note.empty() ? "" : "\"" + note + "\"") << "\n";
            }
            std::string verdict = "NA";
            if (numeric[0] && numeric[1] && numeric[2] && numeric[3])
                verdict = (*numeric[0] > *numeric[1] && *numeric[1] > *numeric[2] &&
                           *numeric[2] > *numeric[3])
                              ? "strict"
                              : "violated";
            os << "ordering," << d << "," << n << ",NA,NA,NA," << verdict << "\n";
        }
    }
    std::cout << "wrote " << path << "\n";
    return 0;
}

struct SampleArgs {
    GadgetOptions gadget;
    std::string model = "ueg";
    double x = 0.5;
    std::uint64_t seed = 1;
    std::uint64_t stream = 0;
    int burnin = 1000;
    int thin = 10;
    int samples = 100;
    std::string out;
};

int run_sample(const SampleArgs& a) {
    Multigraph g = resolve_gadget(a.gadget, false);
    McConfig cfg{a.seed, a.stream, a.burnin, a.thin, a.samples};

    std::vector<EdgeConfig> configs;
    if (a.model == "ueg") {
        Rng rng(cfg.seed, cfg.stream);
        configs.reserve(cfg.samples);
        for (int i = 0; i < cfg.samples; ++i) configs.push_back(sample_ueg(g, rng));
    } else if (a.model == "loop") {
        configs = sample_loop(g, a.x, cfg);
    } else if (a.model == "rc") {
        configs = sample_fk(g, a.x, cfg);
    } else {
        throw CLI::ValidationError("--model", "sample supports ueg|loop|rc, got " + a.model);
    }

    std::string path = a.out.empty() ? default_out_path("sample") : a.out;
    Manifest man;
    man.command = "sample";
    man.add("gadget", a.gadget.graph_file.empty() ? a.gadget.gadget : a.gadget.graph_file);
    man.add("model", a.model);
    if (a.model != "ueg") man.add("x", a.x);
    man.add("seed", static_cast<long long>(a.seed));
    man.add("stream", static_cast<long long>(a.stream));
    man.add("burnin", static_cast<long long>(a.burnin));
    man.add("thin", static_cast<long long>(a.thin));
    man.add("samples", static_cast<long long>(a.samples));
    man.digest = graph_digest(g);
    man.out_path = path;

    auto os = open_out(path);
    man.write(os);
    os << "index,config_hex\n";
    for (size_t i = 0; i < configs.size(); ++i) os << i << "," << configs[i].to_hex() << "\n";
    std::cout << "wrote " << path << "\n";
    return 0;
}

// ------------------------------------------------------------ verify suites

struct Reporter {
    int failures = 0;

    void check(const std::string& name, bool ok, const std::string& detail = "") {
        std::printf("[%s] %s%s%s\n", ok ? "PASS" : "FAIL", name.c_str(),
                    detail.empty() ? "" : ": ", detail.c_str());
        if (!ok) ++failures;
    }
};

Multigraph triangle() {
    Multigraph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.set_terminals(0, 1);
    return g;
}

Multigraph complete4() {
    Multigraph g(4);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) g.add_edge(i, j);
    g.set_terminals(0, 3);
    return g;
}

Multigraph two_c4_glued() {
    Multigraph g(7); // two 4-cycles sharing vertex 0
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 0);
    g.add_edge(0, 4);
    g.add_edge(4, 5);
    g.add_edge(5, 6);
    g.add_edge(6, 0);
    return g;
}

Multigraph three_block_chain() {
    Multigraph g(6); // triangle - bridge - triangle
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(5, 3);
    return g;
}

void verify_exact(Reporter& rep) {
    for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 1}, {3, 2}, {12, 2}}) {
        Multigraph g = theta_gadget(n, m);
        auto [a, b] = *g.terminals();
        EvenSubgraphEnumerator en(g);
        std::vector<int> sizes;
        int connecting = 0;
        do {
            sizes.push_back(en.open_count());
            if (connected_in(g, en.config(), a, b)) ++connecting;
        } while (en.advance());
        std::sort(sizes.begin(), sizes.end());
        std::vector<int> want = {0,     2 * std::min(n, m),  n + m, n + m, n + m, n + m,
                                 2 * std::max(n, m), 2 * n + 2 * m};
        std::sort(want.begin(), want.end());
        bool ok = sizes == want && connecting == 2;
        rep.check("theta(" + std::to_string(n) + "," + std::to_string(m) + ") even table", ok,
                  std::to_string(sizes.size()) + " subgraphs, " + std::to_string(connecting) +
                      " connecting");
    }
    {
        Multigraph g = theta_gadget(12, 2);
        auto [a, b] = *g.terminals();
        double dev = 0;
        for (int k = 0; k <= 500; ++k) {
            double x = k / 500.0;
            double x4 = std::pow(x, 4), x24 = std::pow(x, 24), x14 = std::pow(x, 14);
            double closed = (x4 + x4 * x24) / (1 + x24 + x4 + 4 * x14 + x4 * x24);
            dev = std::max(dev, std::abs(loop_two_point(g, x, a, b) - closed));
        }
        double f85 = loop_two_point(g, 0.85, a, b);
        double f965 = loop_two_point(g, 0.965, a, b);
        rep.check("theta(12,2) two-point formula", dev < 1e-12, "max dev " + fmt(dev));
        rep.check("theta(12,2) non-monotone bounds", f85 >= 0.27 && f965 <= 0.245,
                  "f(0.85)=" + fmt(f85) + " f(0.965)=" + fmt(f965));
    }
    {
        double worst = 0;
        for (const Multigraph& g : {triangle(), cycle_graph(2), complete4(), theta_gadget(2, 2)}) {
            auto [u, v] = *g.terminals();
            for (double x : {0.3, 0.6, 0.9}) {
                double rc = model_two_point(g, ModelSpec::random_cluster(x), u, v);
                double dc = model_two_point(g, ModelSpec::double_current(x), u, v);
                worst = std::max(worst, std::abs(rc * rc - dc));
            }
        }
        rep.check("graph-rep identity rc^2 = current2", worst < 1e-10, "max dev " + fmt(worst));
    }
    {
        double worst = 0;
        for (const Multigraph& g : {triangle(), cycle_graph(2), theta_gadget(2, 1)}) {
            for (double x : {0.25, 0.5, 0.75}) {
                double tv = tv_distance(exact_distribution(g, ModelSpec::random_cluster(x)),
                                        rc_oracle_distribution(g, x));
                worst = std::max(worst, tv);
            }
        }
        rep.check("rc coupling = FK oracle", worst < 1e-10, "max TV " + fmt(worst));
        double pstar = tv_minimizing_fk_edge(triangle(), 0.5);
        rep.check("TV-minimizing FK edge parameter", std::abs(pstar - 2 * 0.5 / 1.5) < 1e-6,
                  "argmin " + fmt(pstar) + " vs 2x/(1+x) = " + fmt(2 * 0.5 / 1.5));
    }
    {
        double worst = 0;
        for (const Multigraph& g : {two_c4_glued(), three_block_chain()}) {
            for (const ModelSpec& spec :
                 {ModelSpec::loop(0.7), ModelSpec::single_current(0.6),
                  ModelSpec::double_current(0.6), ModelSpec::random_cluster(0.5),
                  ModelSpec::arboreal_gas(1.3)}) {
                worst = std::max(worst, factorisation_check(g, spec));
            }
        }
        rep.check("cut-point factorisation", worst < 1e-12, "max dev " + fmt(worst));
    }
    {
        Multigraph c6 = cycle_graph(3);
        auto [a, b] = *c6.terminals();
        double d1 = std::abs(sprinkled_two_point(c6, 0.77, 0.33, a, b) -
                             cycle_sprinkled_two_point(3, 0.77, 0.33));
        double d2 = std::abs(model_two_point(c6, ModelSpec::double_current(0.77), a, b) -
                             cycle_double_current_two_point(3, 0.77, 0.77 * 0.77));
        rep.check("cycle sprinkling closed forms", std::max(d1, d2) < 1e-12,
                  "max dev " + fmt(std::max(d1, d2)));
    }
}

void verify_sampling(Reporter& rep, std::uint64_t seed) {
    {
        Multigraph g = complete4();
        Rng rng(seed, 0);
        const int draws = 100000;
        std::vector<long> counts(8, 0);
        EvenSubgraphEnumerator en(g);
        std::vector<std::uint64_t> masks;
        do {
            masks.push_back(en.config().to_mask());
        } while (en.advance());
        std::sort(masks.begin(), masks.end());
        for (int i = 0; i < draws; ++i) {
            auto s = sample_ueg(g, rng);
            auto it = std::lower_bound(masks.begin(), masks.end(), s.to_mask());
            ++counts[it - masks.begin()];
        }
        double expected = draws / 8.0, chi2 = 0;
        for (long c : counts) chi2 += (c - expected) * (c - expected) / expected;
        double limit = chi_square_quantile(7, 3.090232306167814);
        rep.check("UEG uniformity on K4", chi2 < limit, "chi2 " + fmt(chi2) + " < " + fmt(limit));
    }
    {
        Multigraph g(4); // triangle plus a bridge
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(2, 0);
        g.add_edge(2, 3);
        CycleBasis basis = cycle_basis(g);
        bool bridge_free = true;
        for (const auto& gen : basis.generators) bridge_free = bridge_free && !gen.test(3);
        Rng rng(seed, 1);
        const int draws = 100000;
        long bridge = 0, cyclic = 0;
        for (int i = 0; i < draws; ++i) {
            auto s = sample_ueg(g, rng);
            if (s.test(3)) ++bridge;
            if (s.test(0)) ++cyclic;
        }
        auto est = wilson_estimate(cyclic, draws);
        double sigma = est.standard_error();
        rep.check("bridge marginal exactly 0", bridge_free && bridge == 0,
                  std::to_string(bridge) + " open draws");
        rep.check("cyclic edge marginal 1/2", std::abs(est.mean - 0.5) <= 4 * sigma,
                  fmt(est.mean) + " +- " + fmt(sigma));
    }
    {
        Multigraph mg(3); // multigraph with a parallel pair and a self-loop
        mg.add_edge(0, 1);
        mg.add_edge(0, 1);
        mg.add_edge(1, 2);
        mg.add_edge(2, 0);
        mg.add_edge(2, 2);
        mg.add_edge(1, 2);
        double worst = 0;
        for (const Multigraph& g : {triangle(), complete4(), mg}) {
            for (double x : {0.3, 0.7}) {
                McConfig cfg{seed, 2, 200, 2, 1000000};
                auto samples = sample_fk(g, x, cfg);
                std::vector<double> emp(std::size_t(1) << g.edge_count(), 0.0);
                for (const auto& s : samples) emp[s.to_mask()] += 1.0 / cfg.samples;
                auto oracle = rc_oracle_distribution(g, x);
                double tv = 0;
                for (std::uint64_t m = 0; m < oracle.config_count(); ++m)
                    tv += std::abs(emp[m] - oracle[m]);
                worst = std::max(worst, tv / 2);
            }
        }
        rep.check("heat-bath TV vs FK oracle", worst < 0.01, "max TV " + fmt(worst));
    }
    {
        bool ok = true;
        std::string detail;
        for (const Multigraph& g : {theta_gadget(3, 2), cycle_graph(3), complete4()}) {
            auto [u, v] = *g.terminals();
            double x = 0.6;
            McConfig cfg{seed, 3, 500, 5, 20000};
            auto samples = sample_loop(g, x, cfg);
            long hits = 0;
            for (const auto& s : samples)
                if (connected_in(g, s, u, v)) ++hits;
            auto est = wilson_estimate(hits, cfg.samples);
            double exact = loop_two_point(g, x, u, v);
            double sigma = std::max(est.standard_error(), 1e-12);
            if (std::abs(est.mean - exact) > 4 * sigma) ok = false;
            detail += fmt(est.mean) + "~" + fmt(exact) + " ";
        }
        rep.check("loop sampler two-point (4 sigma)", ok, detail);
    }
    {
        McConfig cfg{seed, 4, 0, 0, 100000};
        auto r = arc_chain_marginal_check(5, cfg);
        rep.check("arc chain projected rank", r.exact_pass(),
                  "rank " + std::to_string(r.projected_rank) + "/" + std::to_string(r.arcs));
        rep.check("arc chain sampled uniformity", r.sampled_pass(),
                  "chi2 " + fmt(r.chi_square) + " < " + fmt(r.chi_square_threshold));
    }
}

void verify_halving(Reporter& rep, std::uint64_t seed) {
    for (const Multigraph& base : {complete4(), theta_gadget(2, 2)}) {
        HalvedGraph h = halve_edges(base);
        EvenSubgraphEnumerator en(h.graph);
        bool ok = true;
        do {
            EdgeConfig eta = halving_project(h, en.config());
            ok = ok && is_even(base, eta);
            ok = ok && (halving_lift(h, eta) == en.config());
            for (int u = 0; u < base.vertex_count() && ok; ++u)
                for (int v = u + 1; v < base.vertex_count(); ++v)
                    if (connected_in(base, eta, u, v) != connected_in(h.graph, en.config(), u, v))
                        ok = false;
        } while (en.advance() && ok);
        rep.check("halving isomorphism exhaustive (" + std::to_string(base.edge_count()) +
                      " base edges)",
                  ok);
    }
    {
        double worst = 0;
        for (const Multigraph& g : {triangle(), complete4(), theta_gadget(2, 1), two_c4_glued()}) {
            HalvedGraph h = halve_edges(g);
            int u = 0, v = g.vertex_count() - 1;
            for (double p : {0.2, 0.5, 0.8}) {
                double lhs = 0, rhs = 0;
                const int eh = h.graph.edge_count();
                for (std::uint64_t m = 0; m < (std::uint64_t(1) << eh); ++m) {
                    double pr = 1;
                    for (int e = 0; e < eh; ++e) pr *= ((m >> e) & 1) ? p : 1 - p;
                    if (connected_in_mask(h.graph, m, u, v)) lhs += pr;
                }
                const int eg = g.edge_count();
                double p2 = p * p;
                for (std::uint64_t m = 0; m < (std::uint64_t(1) << eg); ++m) {
                    double pr = 1;
                    for (int e = 0; e < eg; ++e) pr *= ((m >> e) & 1) ? p2 : 1 - p2;
                    if (connected_in_mask(g, m, u, v)) rhs += pr;
                }
                worst = std::max(worst, std::abs(lhs - rhs));
            }
        }
        rep.check("halving connectivity law", worst < 1e-12, "max dev " + fmt(worst));
    }
    {
        McConfig cfg{seed, 5, 0, 0, 10000};
        auto r = halving_coupling_check(complete4(), 0.5, cfg);
        rep.check("halving coupling (10^4 samples)", r.pass(),
                  std::to_string(r.violations) + " violations");
    }
    {
        double v4 = halving_pc_iterate(0.5, 4);
        bool ok = std::abs(v4 - std::pow(2.0, -1.0 / 16)) < 1e-15 &&
                  halving_pc_iterate(1.0, 7) == 1.0 &&
                  std::abs(halving_pc(0.5) - std::pow(2.0, -0.5)) < 1e-15;
        for (double eps : {0.1, 0.01}) {
            int j = static_cast<int>(std::ceil(std::log2(std::log(2.0) / eps)));
            ok = ok && halving_pc_iterate(0.5, j) > 1 - eps;
        }
        rep.check("p_c halving iterates", ok, "p_c(G_4) = " + fmt(v4));
    }
}

void verify_wired(Reporter& rep, std::uint64_t seed, int samples, const std::string& out) {
    struct NamedEstimate {
        std::string quantity;
        Estimate estimate;
    };
    std::vector<NamedEstimate> estimates;
    for (double x : {0.7, 0.9}) {
        McConfig cfg{seed, 6, 1000, 10, samples};
        auto r = wired_tree_bound_check(3, 5, x, cfg);
        rep.check("wired tree bound x=" + fmt(x),
                  r.verdict != BoundCheck::Verdict::Fail,
                  "lhs " + fmt(r.lhs) + " >= " + fmt(r.rhs) + " (margin " + fmt(r.margin) + ")");
        estimates.push_back({"fk_depth1_to_ghost_x" + fmt(x), r.theta});
        estimates.push_back({"loop_root_to_ghost_x" + fmt(x), r.lambda});
    }
    if (!out.empty()) {
        Manifest man;
        man.command = "verify";
        man.add("suite", std::string("wired"));
        man.add("seed", static_cast<long long>(seed));
        man.add("samples", static_cast<long long>(samples));
        man.out_path = out;
        auto os = open_out(out);
        man.write(os);
        os << "quantity,mean,half_width,n\n";
        for (const auto& [name, est] : estimates)
            os << name << "," << fmt(est.mean) << "," << fmt(est.half_width_95) << "," << est.n
               << "\n";
    }
}

struct VerifyArgs {
    std::string suite;
    std::uint64_t seed = 1;
    int samples = 10000;
    std::string out;
};

int run_verify(const VerifyArgs& a) {
    Reporter rep;
    if (a.suite == "exact")
        verify_exact(rep);
    else if (a.suite == "sampling")
        verify_sampling(rep, a.seed);
    else if (a.suite == "halving")
        verify_halving(rep, a.seed);
    else if (a.suite == "wired")
        verify_wired(rep, a.seed, a.samples, a.out);
    else if (a.suite == "all") {
        verify_exact(rep);
        verify_sampling(rep, a.seed);
        verify_halving(rep, a.seed);
        verify_wired(rep, a.seed, a.samples, a.out);
    } else {
        throw CLI::ValidationError("suite", "unknown suite '" + a.suite +
                                                "' (expected exact|sampling|halving|wired|all)");
    }
    std::printf("%d check(s) failed\n", rep.failures);
    return rep.failures == 0 ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact enumeration and Monte Carlo for graphical representations of the Ising "
                 "model on finite and tree-like graphs"};
    app.require_subcommand(1);

    CurveArgs curve;
    auto* c1 = app.add_subcommand("gadget-curve", "terminal two-point curve of a gadget");
    c1->add_option("--gadget", curve.gadget.gadget, "theta:n,m | cycle:n | edge");
    c1->add_option("--graph", curve.gadget.graph_file, "graph file with terminals");
    c1->add_option("--model", curve.model, "loop|rc|current|current2|bern|forest");
    c1->add_option("--grid", curve.grid, "number of grid points on [0,1]")
        ->check(CLI::Range(2, 10000000));
    c1->add_option("--p", curve.p, "parameter for the bern/forest families");
    c1->add_option("--out", curve.out, "output CSV path");

    RegimeArgs regime;
    auto* c2 = app.add_subcommand("regime-scan",
                                  "percolation regime of the gadget-substituted d-regular tree");
    c2->add_option("--gadget", regime.gadget.gadget, "theta:n,m | cycle:n | edge");
    c2->add_option("--graph", regime.gadget.graph_file, "graph file with terminals");
    c2->add_option("--model", regime.model, "loop|rc|current|current2|bern|forest");
    c2->add_option("--d", regime.d, "tree degree")->check(CLI::Range(2, 1000000));
    c2->add_option("--p", regime.dilution, "Bernoulli dilution of the base tree");
    c2->add_option("--grid", regime.grid, "scan grid size");
    c2->add_option("--tol", regime.tol, "boundary bisection tolerance");
    c2->add_option("--threshold-convention", regime.convention, "dminus1|dplus1");
    c2->add_option("--out", regime.out, "output CSV path");

    CriticalArgs critical;
    auto* c3 = app.add_subcommand("critical-points",
                                  "closed-form and numeric critical points on the cycle tree");
    c3->add_option("--d", critical.d_range, "degree or range lo..hi");
    c3->add_option("--n", critical.n_range, "half cycle length or range lo..hi");
    c3->add_option("--tol", critical.tol, "bisection tolerance");
    c3->add_option("--out", critical.out, "output CSV path");

    VerifyArgs verify;
    auto* c4 = app.add_subcommand("verify", "run a verification suite");
    c4->add_option("suite", verify.suite, "exact|sampling|halving|wired|all")->required();
    c4->add_option("--seed", verify.seed, "random seed");
    c4->add_option("--samples", verify.samples, "Monte Carlo samples for the wired suite");
    c4->add_option("--out", verify.out, "estimates CSV path (wired suite)");

    SampleArgs sample;
    auto* c5 = app.add_subcommand("sample", "stream configurations as CSV");
    c5->add_option("--gadget", sample.gadget.gadget, "theta:n,m | cycle:n | edge");
    c5->add_option("--graph", sample.gadget.graph_file, "graph file");
    c5->add_option("--model", sample.model, "ueg|loop|rc");
    c5->add_option("--x", sample.x, "loop parameter for loop/rc");
    c5->add_option("--seed", sample.seed, "random seed");
    c5->add_option("--stream", sample.stream, "random stream id");
    c5->add_option("--burnin", sample.burnin, "burn-in sweeps");
    c5->add_option("--thin", sample.thin, "sweeps between samples");
    c5->add_option("--samples", sample.samples, "number of samples")
        ->check(CLI::Range(1, 100000000));
    c5->add_option("--out", sample.out, "output CSV path");

    try {
        app.parse(argc, argv);
        if (c1->parsed()) return run_gadget_curve(curve);
        if (c2->parsed()) return run_regime_scan(regime);
        if (c3->parsed()) return run_critical_points(critical);
        if (c4->parsed()) return run_verify(verify);
        if (c5->parsed()) return run_sample(sample);
        return 3;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
