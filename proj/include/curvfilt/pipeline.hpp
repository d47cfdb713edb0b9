#pragma once

#include "curvfilt/filtrations.hpp"
#include "curvfilt/generators.hpp"
#include "curvfilt/io.hpp"
#include "curvfilt/persistence.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace curvfilt {

/// Simplex ceiling the HTTP service applies to every request.
inline constexpr std::uint64_t kServiceSimplexCap = 2'000'000;

/// Where a space comes from: a shape string, "matrix:PATH" or
/// "points:PATH[@METRIC]" with METRIC as in PointMetric::parse.
struct SpaceSource {
    enum class Kind { Shape, Matrix, Points };

    Kind kind = Kind::Shape;
    std::string text;  // shape string or path
    PointMetric metric;

    static SpaceSource parse(const std::string& spec);
    FiniteMetricSpace load() const;
    std::string describe() const;
};

struct DiagramRequest {
    std::string functor_id = "rips";
    std::optional<std::size_t> basepoint;
    double c = 0.5;
    std::size_t k = 1;
    std::size_t dim_cap = kDefaultDimCap;
    std::uint64_t budget = kDefaultSimplexBudget;
};

struct DiagramResult {
    std::string functor_id;
    std::vector<PersistenceDiagram> diagrams;  // degrees 0..k
};

/// Resolves the functor and computes degrees 0..k. Rips and ecc run on the
/// implicit flag complex; everything else materializes the filtration.
/// Functor ids: rips, cech, ult[:k], hyp, kpoint:n:k, ecc[:c], upsilon:gh.
DiagramResult compute_diagrams(const FiniteMetricSpace& space, const DiagramRequest& request);

/// Degree-0 diagram by union-find on the 1-skeleton of the requested functor.
PersistenceDiagram compute_h0_unionfind(const FiniteMetricSpace& space, const DiagramRequest& request);

/// Body shared by `barcode` and POST /barcode: the diagrams bundle plus, when
/// a basepoint is set, "basepoint" and "distances" (to the basepoint).
Json barcode_json(const FiniteMetricSpace& space, const DiagramRequest& request, const DiagramResult& result);

}  // namespace curvfilt
