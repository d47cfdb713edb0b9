#pragma once

#include "curvfilt/filtrations.hpp"

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace curvfilt {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct PersistenceInterval {
    double birth = 0.0;
    double death = kInfinity;

    bool infinite() const noexcept { return death == kInfinity; }
    double persistence() const noexcept { return death - birth; }

    friend bool operator==(const PersistenceInterval&, const PersistenceInterval&) = default;
    friend bool operator<(const PersistenceInterval& a, const PersistenceInterval& b) {
        return a.birth != b.birth ? a.birth < b.birth : a.death < b.death;
    }
};

/// Multiset of intervals in one homology degree, kept sorted by (birth, death).
/// Zero-length intervals are never stored.
struct PersistenceDiagram {
    std::size_t dimension = 0;
    std::vector<PersistenceInterval> intervals;
    std::string functor_id;

    void add(double birth, double death);
    void normalize();
    std::size_t infinite_count() const;

    friend bool operator==(const PersistenceDiagram& a, const PersistenceDiagram& b) {
        return a.dimension == b.dimension && a.intervals == b.intervals;
    }
};

/// Degree-k barcode over GF(2) by boundary-matrix reduction with clearing.
/// Requires fs.dim_cap() ≥ k + 1.
PersistenceDiagram barcode(const FilteredSpace& fs, std::size_t k);
/// Degrees 0..max_k from one pass.
std::vector<PersistenceDiagram> barcodes(const FilteredSpace& fs, std::size_t max_k);
/// Plain dense reduction without clearing; intended for small cross-checks.
PersistenceDiagram barcode_dense(const FilteredSpace& fs, std::size_t k);
/// Elder-rule union-find over vertices and edges.
PersistenceDiagram barcode_h0_unionfind(const FilteredSpace& fs);

/// Persistent cohomology of the flag filtration described by `weights`
/// without materializing simplices above the edges: coboundaries are
/// enumerated on the fly. Returns degrees 0..max_k.
std::vector<PersistenceDiagram> flag_barcodes(const FlagWeights& weights, std::size_t max_k);

}  // namespace curvfilt
