#include "curvfilt/filtrations.hpp"

#include "curvfilt/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

namespace curvfilt {

FilteredSpace::FilteredSpace(FiniteMetricSpace space, std::size_t dim_cap, std::string functor_id)
    : space_(std::move(space)), dim_cap_(dim_cap), functor_id_(std::move(functor_id)) {}

/// Emits every simplex up to the dimension cap in canonical layout. Simplices
/// with at most `direct_size` vertices get their arrival from the callback;
/// larger ones take the max over their codimension-1 faces.
class FiltrationBuilder {
public:
    FiltrationBuilder(const FiniteMetricSpace& space, std::size_t dim_cap, std::uint64_t budget, std::string id)
        : fs_(space, dim_cap, std::move(id)) {
        const std::uint64_t need = count_simplices(space.size(), dim_cap);
        if (need > budget) {
            throw Error(ErrorKind::SimplexBudgetExceeded, "filtration of " + std::to_string(space.size()) +
                                                              " points up to dimension " + std::to_string(dim_cap) +
                                                              " needs " + std::to_string(need) +
                                                              " simplices, budget is " + std::to_string(budget));
        }
        fs_.canonical_ = true;
        fs_.binomial_.emplace(space.size(), dim_cap + 1);
        fs_.simplices_.reserve(static_cast<std::size_t>(need));
    }

    template <class Direct>
    FilteredSpace build(std::size_t direct_size, Direct&& direct, std::optional<std::size_t> flag_dim) {
        const std::size_t n = fs_.space_.size();
        const auto& binom = *fs_.binomial_;
        std::vector<std::size_t> point_buf;
        std::vector<Vertex> face;
        for (std::size_t d = 0; d <= fs_.dim_cap_; ++d) {
            fs_.offsets_.push_back(fs_.simplices_.size());
            if (d + 1 > n) continue;
            std::vector<Vertex> c(d + 1);
            for (std::size_t i = 0; i <= d; ++i) c[i] = static_cast<Vertex>(i);
            do {
                double arrival = 0.0;
                if (d + 1 <= direct_size) {
                    point_buf.assign(c.begin(), c.end());
                    arrival = direct(std::span<const std::size_t>(point_buf));
                } else {
                    const std::size_t base = fs_.offsets_[d - 1];
                    for (std::size_t drop = 0; drop <= d; ++drop) {
                        face.clear();
                        for (std::size_t i = 0; i <= d; ++i) {
                            if (i != drop) face.push_back(c[i]);
                        }
                        arrival = std::max(arrival, fs_.simplices_[base + binom.rank(face)].arrival);
                    }
                }
                fs_.simplices_.push_back({c, arrival});
            } while (next_colex(c, n));
        }
        fs_.flag_dim_ = flag_dim;
        return std::move(fs_);
    }

private:
    FilteredSpace fs_;
};

FilteredSpace FilteredSpace::from_simplices(FiniteMetricSpace space, std::size_t dim_cap,
                                            std::vector<FilteredSimplex> simplices, std::string functor_id) {
    FilteredSpace fs(std::move(space), dim_cap, std::move(functor_id));
    const std::size_t n = fs.space_.size();
    for (std::size_t i = 0; i < simplices.size(); ++i) {
        const auto& s = simplices[i];
        if (s.vertices.empty()) throw Error(ErrorKind::InvalidArgument, "empty simplex");
        if (s.dimension() > dim_cap) throw Error(ErrorKind::InvalidArgument, "simplex above the dimension cap");
        for (std::size_t j = 0; j < s.vertices.size(); ++j) {
            if (s.vertices[j] >= n) throw Error(ErrorKind::IndexOutOfRange, "simplex vertex out of range");
            if (j > 0 && s.vertices[j] <= s.vertices[j - 1]) {
                throw Error(ErrorKind::InvalidArgument, "simplex vertices must be strictly increasing");
            }
        }
        if (!std::isfinite(s.arrival) || s.arrival < 0.0) {
            throw Error(ErrorKind::InvalidArgument, "arrivals must be finite and nonnegative");
        }
        if (!fs.lookup_.emplace(s.vertices, i).second) throw Error(ErrorKind::InvalidArgument, "duplicate simplex");
    }
    fs.simplices_ = std::move(simplices);
    std::vector<Vertex> face;
    for (const auto& s : fs.simplices_) {
        if (s.vertices.size() < 2) continue;
        for (std::size_t drop = 0; drop < s.vertices.size(); ++drop) {
            face = s.vertices;
            face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
            if (!fs.lookup_.count(face)) throw Error(ErrorKind::InvalidArgument, "simplex with a missing face");
        }
    }
    return fs;
}

std::optional<std::size_t> FilteredSpace::find(std::span<const Vertex> vertices) const {
    if (vertices.empty() || vertices.size() > dim_cap_ + 1) return std::nullopt;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] >= space_.size() || (i > 0 && vertices[i] <= vertices[i - 1])) return std::nullopt;
    }
    if (canonical_) return offsets_[vertices.size() - 1] + binomial_->rank(vertices);
    const auto it = lookup_.find(std::vector<Vertex>(vertices.begin(), vertices.end()));
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
}

std::optional<double> FilteredSpace::arrival(std::span<const Vertex> vertices) const {
    const auto pos = find(vertices);
    if (!pos) return std::nullopt;
    return simplices_[*pos].arrival;
}

FlagWeights rips_weights(const FiniteMetricSpace& space) {
    FlagWeights w{space.size(), std::vector<double>(space.data().begin(), space.data().end())};
    return w;
}

FlagWeights ecc_weights(const FiniteMetricSpace& space, std::size_t x0, double c) {
    if (x0 >= space.size()) throw Error(ErrorKind::IndexOutOfRange, "basepoint out of range");
    if (!(c >= 0.0 && c <= 1.0)) throw Error(ErrorKind::InvalidArgument, "eccentricity constant must lie in [0,1]");
    const std::size_t n = space.size();
    const double ecc = eccentricity(space, x0);
    std::vector<double> birth(n);
    for (std::size_t v = 0; v < n; ++v) birth[v] = c * (ecc - space(x0, v));
    FlagWeights w{n, std::vector<double>(n * n)};
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            w.w[u * n + v] = u == v ? birth[u] : std::max({space(u, v), birth[u], birth[v]});
        }
    }
    return w;
}

FilteredSpace flag_filtration(const FiniteMetricSpace& space, const FlagWeights& weights, std::string functor_id,
                              std::size_t dim_cap, std::uint64_t budget) {
    if (weights.n != space.size()) throw Error(ErrorKind::DimensionMismatch, "flag weights do not match the space");
    FiltrationBuilder builder(space, dim_cap, budget, std::move(functor_id));
    return builder.build(
        2,
        [&](std::span<const std::size_t> pts) {
            return pts.size() == 1 ? weights(pts[0], pts[0]) : weights(pts[0], pts[1]);
        },
        1);
}

FilteredSpace rips_filtration(const FiniteMetricSpace& space, std::size_t dim_cap, std::uint64_t budget) {
    return flag_filtration(space, rips_weights(space), "rips", dim_cap, budget);
}

FilteredSpace cech_filtration(const FiniteMetricSpace& space, std::size_t dim_cap, std::uint64_t budget) {
    FiltrationBuilder builder(space, dim_cap, budget, "cech");
    return builder.build(
        std::numeric_limits<std::size_t>::max(),
        [&](std::span<const std::size_t> pts) {
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t p = 0; p < space.size(); ++p) {
                double reach = 0.0;
                for (std::size_t x : pts) reach = std::max(reach, space(p, x));
                best = std::min(best, reach);
            }
            return best;
        },
        std::nullopt);
}

FilteredSpace local_filtration(const FiniteMetricSpace& space, const ValuationSpec& nu, std::size_t dim_cap,
                               std::uint64_t budget, std::uint64_t tuple_budget) {
    FiltrationBuilder builder(space, dim_cap, budget, nu.name);
    auto direct = [&](std::span<const std::size_t> pts) { return evaluate_on_points(nu, space, pts, tuple_budget); };
    if (nu.is_max_induced()) {
        // A tuple touches at most n distinct points.
        return builder.build(nu.n, direct, nu.n - 1);
    }
    return builder.build(std::numeric_limits<std::size_t>::max(), direct, std::nullopt);
}

FilteredSpace ult_filtration(const FiniteMetricSpace& space, std::size_t k, std::size_t dim_cap,
                             std::uint64_t budget) {
    return local_filtration(space, nu_ult_k(k), dim_cap, budget);
}

FilteredSpace hyp_filtration(const FiniteMetricSpace& space, std::size_t dim_cap, std::uint64_t budget) {
    return local_filtration(space, nu_hyp(), dim_cap, budget);
}

std::string ecc_functor_id(double c) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, c);
    return "ecc:" + std::string(buf, res.ptr);
}

FilteredSpace ecc_basepoint_filtration(const FiniteMetricSpace& space, std::size_t x0, double c,
                                       std::size_t dim_cap, std::uint64_t budget) {
    return flag_filtration(space, ecc_weights(space, x0, c), ecc_functor_id(c), dim_cap, budget);
}

FilteredSpace upsilon_filtration(const FiniteMetricSpace& x, double gh, std::size_t dim_cap, std::uint64_t budget) {
    if (!(gh >= 0.0) || !std::isfinite(gh)) throw Error(ErrorKind::InvalidArgument, "GH value must be finite and >= 0");
    FiltrationBuilder builder(x, dim_cap, budget, "upsilon");
    return builder.build(
        1, [gh](std::span<const std::size_t>) { return gh; }, 0);
}

std::optional<std::string> audit_monotonicity(const FilteredSpace& fs) {
    std::vector<Vertex> face;
    for (const auto& s : fs.simplices()) {
        if (s.vertices.size() < 2) continue;
        for (std::size_t drop = 0; drop < s.vertices.size(); ++drop) {
            face = s.vertices;
            face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
            const auto a = fs.arrival(face);
            if (!a) return "missing face of a simplex of dimension " + std::to_string(s.dimension());
            if (*a > s.arrival) {
                return "face arrives at " + std::to_string(*a) + " after its coface at " + std::to_string(s.arrival);
            }
        }
    }
    return std::nullopt;
}

}  // namespace curvfilt
