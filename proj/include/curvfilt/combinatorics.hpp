#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace curvfilt {

using Vertex = std::uint32_t;

/// Pascal table C(v, i) for v ≤ max_n, i ≤ max_k, saturating at UINT64_MAX.
class BinomialTable {
public:
    BinomialTable(std::size_t max_n, std::size_t max_k);

    std::uint64_t operator()(std::size_t n, std::size_t k) const noexcept {
        return k > n ? 0 : table_[n * (max_k_ + 1) + k];
    }
    std::size_t max_n() const noexcept { return max_n_; }
    std::size_t max_k() const noexcept { return max_k_; }

    /// Colex rank of a strictly increasing vertex list: Σ C(v_i, i+1).
    std::uint64_t rank(std::span<const Vertex> vertices) const noexcept {
        std::uint64_t r = 0;
        for (std::size_t i = 0; i < vertices.size(); ++i) r += (*this)(vertices[i], i + 1);
        return r;
    }
    /// Inverse of rank() for a `size`-vertex simplex on vertices < n.
    void unrank(std::uint64_t r, std::size_t size, std::size_t n, std::vector<Vertex>& out) const;

private:
    std::size_t max_n_, max_k_;
    std::vector<std::uint64_t> table_;
};

/// Advances a strictly increasing combination of {0..n-1} to its colex
/// successor. Returns false after the last one.
bool next_colex(std::vector<Vertex>& c, std::size_t n) noexcept;

/// Σ_{d=0}^{max_dim} C(n, d+1), saturating.
std::uint64_t count_simplices(std::size_t n, std::size_t max_dim);

}  // namespace curvfilt
