#ifndef ISINGREP_DSU_HPP
#define ISINGREP_DSU_HPP

#include <numeric>
#include <vector>

namespace isingrep {

/// Union-find with path halving; used for per-configuration connectivity.
class DisjointSets {
public:
    explicit DisjointSets(int n) : parent_(n), size_(n, 1), components_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int v) {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        --components_;
        return true;
    }

    bool connected(int a, int b) { return find(a) == find(b); }

    int component_count() const { return components_; }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    int components_;
};

} // namespace isingrep

#endif
