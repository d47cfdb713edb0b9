#include "curvfilt/combinatorics.hpp"

#include <limits>

namespace curvfilt {

namespace {
constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
    return a > kSaturated - b ? kSaturated : a + b;
}
}  // namespace

BinomialTable::BinomialTable(std::size_t max_n, std::size_t max_k)
    : max_n_(max_n), max_k_(max_k), table_((max_n + 1) * (max_k + 1), 0) {
    for (std::size_t n = 0; n <= max_n; ++n) {
        table_[n * (max_k + 1)] = 1;
        for (std::size_t k = 1; k <= max_k && k <= n; ++k) {
            const std::uint64_t left = table_[(n - 1) * (max_k + 1) + k - 1];
            const std::uint64_t up = k <= n - 1 ? table_[(n - 1) * (max_k + 1) + k] : 0;
            table_[n * (max_k + 1) + k] = saturating_add(left, up);
        }
    }
}

void BinomialTable::unrank(std::uint64_t r, std::size_t size, std::size_t n, std::vector<Vertex>& out) const {
    out.resize(size);
    std::size_t v = n;
    for (std::size_t i = size; i > 0; --i) {
        // Largest v with C(v, i) <= r.
        --v;
        while ((*this)(v, i) > r) --v;
        out[i - 1] = static_cast<Vertex>(v);
        r -= (*this)(v, i);
    }
}

bool next_colex(std::vector<Vertex>& c, std::size_t n) noexcept {
    const std::size_t k = c.size();
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t limit = i + 1 < k ? c[i + 1] : n;
        if (c[i] + 1 < limit) {
            ++c[i];
            for (std::size_t j = 0; j < i; ++j) c[j] = static_cast<Vertex>(j);
            return true;
        }
    }
    return false;
}

std::uint64_t count_simplices(std::size_t n, std::size_t max_dim) {
    std::uint64_t total = 0;
    // C(n, s) computed incrementally as C(n, s-1)·(n-s+1)/s.
    long double c = 1.0L;
    std::uint64_t exact = 1;
    for (std::size_t s = 1; s <= max_dim + 1 && s <= n; ++s) {
        c = c * static_cast<long double>(n - s + 1) / static_cast<long double>(s);
        if (c > static_cast<long double>(kSaturated) / 2) return kSaturated;
        exact = exact / s * (n - s + 1) + exact % s * (n - s + 1) / s;
        total = saturating_add(total, exact);
    }
    return total;
}

}  // namespace curvfilt
