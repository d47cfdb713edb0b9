#pragma once

#include "curvfilt/curvature.hpp"
#include "curvfilt/metric_space.hpp"
#include "curvfilt/persistence.hpp"

#include <cstddef>
#include <string>

namespace curvfilt {

/// Exact bottleneck distance under the ℓ∞ ground cost. Infinite bars match
/// infinite bars by sorted birth; unequal infinite counts give +∞.
/// Throws DimensionMismatch when the homology degrees differ.
double bottleneck(const PersistenceDiagram& a, const PersistenceDiagram& b);

/// Multiplier relating d_B of a functor's diagrams to d_GH of the spaces.
struct StabilityCertificate {
    std::string functor_id;
    double constant = 1.0;
    std::string source;
};

/// Certificates for rips, cech, ult[:k], hyp, kpoint:n:k and upsilon:gh.
/// Throws UnknownFunctor otherwise.
StabilityCertificate certificate_for(const std::string& functor_id);

/// d_B / constant. Throws MismatchedFunctor if either diagram was produced by
/// a different functor than the certificate's.
double gh_lower_bound(const PersistenceDiagram& a, const PersistenceDiagram& b, const StabilityCertificate& cert);

/// Degree-k diagram of the eccentricity basepoint filtration at x0.
PersistenceDiagram ecc_diagram(const FiniteMetricSpace& space, std::size_t x0, double c, std::size_t k);

/// C(x, y) = d_B between the degree-k eccentricity diagrams at x ∈ X and y ∈ Y.
double cost_function(const FiniteMetricSpace& x_space, const FiniteMetricSpace& y_space, double c, std::size_t k,
                     std::size_t x, std::size_t y);

/// min over correspondences R of max_{(x,y)∈R} C(x,y). Throws BudgetExceeded
/// when |X|·|Y| > budget.
double basepoint_stability_score(const FiniteMetricSpace& x_space, const FiniteMetricSpace& y_space, double c,
                                 std::size_t k, std::size_t budget = kDefaultCorrespondenceBudget);

}  // namespace curvfilt
