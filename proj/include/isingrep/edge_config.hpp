#ifndef ISINGREP_EDGE_CONFIG_HPP
#define ISINGREP_EDGE_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace isingrep {

/// Edge-indexed bit vector: a percolation configuration or even subgraph over
/// a fixed host graph. The length is pinned at construction; all binary
/// operations require equal lengths.
class EdgeConfig {
public:
    EdgeConfig() = default;
    explicit EdgeConfig(int n_edges);

    int size() const { return n_; }
    bool test(int e) const { return (words_[e >> 6] >> (e & 63)) & 1u; }
    void set(int e, bool value);
    void flip(int e) { words_[e >> 6] ^= std::uint64_t(1) << (e & 63); }
    void clear();

    int count() const;
    bool none() const;

    EdgeConfig& operator^=(const EdgeConfig& other);
    friend EdgeConfig operator^(EdgeConfig a, const EdgeConfig& b) { return a ^= b; }
    EdgeConfig& operator&=(const EdgeConfig& other);
    EdgeConfig& operator|=(const EdgeConfig& other);
    friend EdgeConfig operator|(EdgeConfig a, const EdgeConfig& b) { return a |= b; }
    /// popcount of the AND with `other`.
    int overlap(const EdgeConfig& other) const;
    bool operator==(const EdgeConfig& other) const = default;

    /// Bitmask of edges 0..size-1 (requires size <= 64).
    std::uint64_t to_mask() const;
    static EdgeConfig from_mask(int n_edges, std::uint64_t mask);

    /// Hex serialization, most-significant edge last: digit j covers edges
    /// 4j..4j+3 with edge 4j in the low bit.
    std::string to_hex() const;
    static EdgeConfig from_hex(int n_edges, const std::string& hex);

private:
    void check_same(const EdgeConfig& other) const;

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace isingrep

#endif
