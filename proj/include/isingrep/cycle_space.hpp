#ifndef ISINGREP_CYCLE_SPACE_HPP
#define ISINGREP_CYCLE_SPACE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "isingrep/builders.hpp"
#include "isingrep/edge_config.hpp"
#include "isingrep/multigraph.hpp"

namespace isingrep {

class Rng;

/// Cycle rank above which exhaustive even-subgraph enumeration refuses to run.
inline constexpr int kDefaultRankCap = 24;

/// GF(2) basis of the cycle space: one fundamental cycle per non-forest edge
/// of a deterministic BFS spanning forest (BFS by vertex id, edges scanned in
/// id order). A self-loop yields a singleton generator.
struct CycleBasis {
    int edge_count = 0;
    std::vector<EdgeConfig> generators;

    int rank() const { return static_cast<int>(generators.size()); }
};

CycleBasis cycle_basis(const Multigraph& g);
/// Basis of the spanning subgraph (V, open edges); generators live on the
/// host graph's edge index space.
CycleBasis cycle_basis(const Multigraph& g, const EdgeConfig& open_edges);

/// True iff every vertex has even degree in `config` (self-loops count 2).
bool is_even(const Multigraph& g, const EdgeConfig& config);

/// Exhaustive generator of all 2^rank even subgraphs as GF(2) combinations of
/// a cycle basis, in binary-reflected Gray-code order: successive
/// configurations differ by exactly one generator, and the open-edge count is
/// maintained incrementally. Throws std::domain_error when the rank exceeds
/// the cap.
class EvenSubgraphEnumerator {
public:
    explicit EvenSubgraphEnumerator(const Multigraph& g, int rank_cap = kDefaultRankCap);
    explicit EvenSubgraphEnumerator(CycleBasis basis, int rank_cap = kDefaultRankCap);

    std::uint64_t total() const { return std::uint64_t(1) << basis_.rank(); }
    std::uint64_t index() const { return index_; }
    const EdgeConfig& config() const { return config_; }
    int open_count() const { return open_count_; }

    /// Step to the next Gray-code index; false once all configurations have
    /// been visited (the enumerator then wraps back to the empty subgraph).
    bool advance();
    /// Jump to an arbitrary index (for splitting an exact sum into ranges).
    void seek(std::uint64_t index);

private:
    CycleBasis basis_;
    EdgeConfig config_;
    std::uint64_t index_ = 0;
    int open_count_ = 0;
};

/// Exactly uniform sample from the group of even subgraphs: XOR of a fair-coin
/// subset of the basis generators. Works at any rank.
EdgeConfig sample_ueg(const Multigraph& g, Rng& rng);

/// Uniform even subgraph of the open subgraph (V, omega), embedded on g.
EdgeConfig ueg_of_config(const Multigraph& g, const EdgeConfig& omega, Rng& rng);

/// Group isomorphism between the even subgraphs of a halved graph and of its
/// base: an original edge is open iff its midpoint has degree 2. Preserves
/// connectivity between original vertices. Throws std::domain_error when
/// `eta_half` is not even.
EdgeConfig halving_project(const HalvedGraph& h, const EdgeConfig& eta_half);
/// Inverse: opens both halves of every open base edge.
EdgeConfig halving_lift(const HalvedGraph& h, const EdgeConfig& eta_base);

} // namespace isingrep

#endif
