#include "curvfilt/valuations.hpp"

#include "curvfilt/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <random>

namespace curvfilt {

namespace {

constexpr std::size_t kExactMaxMembers = 12;
constexpr std::size_t kExactMaxCenters = 3;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return parts;
}

std::size_t parse_count(const std::string& text, const std::string& id) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw Error(ErrorKind::UnknownFunctor, "bad integer '" + text + "' in '" + id + "'");
    }
    return value;
}

/// Half the largest per-coordinate spread: the ℓ∞ 1-center radius.
double one_center_radius(const std::vector<const Matrix*>& group) {
    if (group.empty()) return 0.0;
    const std::size_t len = group.front()->a.size();
    double worst = 0.0;
    for (std::size_t e = 0; e < len; ++e) {
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        for (const Matrix* m : group) {
            lo = std::min(lo, m->a[e]);
            hi = std::max(hi, m->a[e]);
        }
        worst = std::max(worst, hi - lo);
    }
    return 0.5 * worst;
}

/// Enumerates assignments of members to at most k groups (restricted growth
/// strings) keeping per-group coordinate bounds, pruning on the incumbent.
class PartitionSearch {
public:
    PartitionSearch(const MatrixSet& a, std::size_t k) : a_(a), k_(k), len_(a.side() * a.side()) {
        lo_.assign(k * len_, 0.0);
        hi_.assign(k * len_, 0.0);
        best_ = std::numeric_limits<double>::infinity();
    }

    double run() {
        descend(0, 0, 0.0);
        return best_;
    }

private:
    void descend(std::size_t idx, std::size_t used, double current) {
        if (current >= best_) return;
        if (idx == a_.size()) {
            best_ = current;
            return;
        }
        const Matrix& m = a_.members()[idx];
        const std::size_t limit = std::min(used + 1, k_);
        for (std::size_t g = 0; g < limit; ++g) {
            std::vector<double> saved_lo(lo_.begin() + g * len_, lo_.begin() + (g + 1) * len_);
            std::vector<double> saved_hi(hi_.begin() + g * len_, hi_.begin() + (g + 1) * len_);
            const bool fresh = g == used;
            double spread = 0.0;
            for (std::size_t e = 0; e < len_; ++e) {
                double& lo = lo_[g * len_ + e];
                double& hi = hi_[g * len_ + e];
                if (fresh) {
                    lo = hi = m.a[e];
                } else {
                    lo = std::min(lo, m.a[e]);
                    hi = std::max(hi, m.a[e]);
                }
                spread = std::max(spread, hi - lo);
            }
            descend(idx + 1, fresh ? used + 1 : used, std::max(current, 0.5 * spread));
            std::copy(saved_lo.begin(), saved_lo.end(), lo_.begin() + g * len_);
            std::copy(saved_hi.begin(), saved_hi.end(), hi_.begin() + g * len_);
        }
    }

    const MatrixSet& a_;
    std::size_t k_;
    std::size_t len_;
    std::vector<double> lo_, hi_;
    double best_;
};

double greedy_k_center(std::size_t k, const MatrixSet& a) {
    const auto& m = a.members();
    std::vector<std::size_t> centers{0};
    std::vector<double> nearest(m.size(), std::numeric_limits<double>::infinity());
    std::vector<std::size_t> owner(m.size(), 0);
    while (true) {
        const std::size_t c = centers.back();
        for (std::size_t i = 0; i < m.size(); ++i) {
            const double d = linf_distance(m[i], m[c]);
            if (d < nearest[i]) {
                nearest[i] = d;
                owner[i] = centers.size() - 1;
            }
        }
        if (centers.size() == k) break;
        const auto far = std::max_element(nearest.begin(), nearest.end()) - nearest.begin();
        if (nearest[far] == 0.0) break;
        centers.push_back(static_cast<std::size_t>(far));
    }
    // Re-center each cluster; this never increases the radius.
    std::vector<std::vector<const Matrix*>> groups(centers.size());
    for (std::size_t i = 0; i < m.size(); ++i) groups[owner[i]].push_back(&m[i]);
    double value = 0.0;
    for (const auto& g : groups) value = std::max(value, one_center_radius(g));
    return value;
}

double ult_path_value(const FiniteMetricSpace& space, std::span<const std::size_t> pts, std::size_t k) {
    // bottleneck[a][b]: least possible largest step over walks a→b of at most h steps.
    const std::size_t m = pts.size();
    std::vector<double> bottleneck(m * m), next(m * m);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) bottleneck[a * m + b] = space(pts[a], pts[b]);
    }
    for (std::size_t h = 2; h + 1 <= k; ++h) {
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t b = 0; b < m; ++b) {
                double best = bottleneck[a * m + b];
                for (std::size_t c = 0; c < m; ++c) {
                    best = std::min(best, std::max(bottleneck[a * m + c], space(pts[c], pts[b])));
                }
                next[a * m + b] = best;
            }
        }
        bottleneck.swap(next);
    }
    double value = 0.0;
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            value = std::max(value, space(pts[a], pts[b]) - bottleneck[a * m + b]);
        }
    }
    return value;
}

}  // namespace

double ValuationSpec::evaluate(const MatrixSet& a) const {
    if (a.side() != n) {
        throw Error(ErrorKind::DimensionMismatch, name + " expects " + std::to_string(n) + "x" + std::to_string(n) +
                                                      " matrices, got side " + std::to_string(a.side()));
    }
    double value = 0.0;
    if (is_max_induced()) {
        for (const auto& m : a) value = std::max(value, kernel(MatrixView(m)));
    } else {
        value = std::max(0.0, set_evaluator(a));
    }
    return value;
}

ValuationSpec max_induced(std::string name, MatrixKernel f, std::size_t n, std::optional<double> lipschitz_constant) {
    ValuationSpec spec;
    spec.name = std::move(name);
    spec.n = n;
    spec.kernel = std::move(f);
    spec.stability_constant = lipschitz_constant;
    return spec;
}

ValuationSpec nu_rips() {
    ValuationSpec spec = max_induced("rips", [](const MatrixView& a) { return a(0, 1); }, 2, 1.0);
    spec.points_fast_path = [](const FiniteMetricSpace& space, std::span<const std::size_t> pts) {
        double diam = 0.0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            for (std::size_t j = i + 1; j < pts.size(); ++j) diam = std::max(diam, space(pts[i], pts[j]));
        }
        return diam;
    };
    return spec;
}

ValuationSpec nu_ult_k(std::size_t k) {
    if (k < 3) throw Error(ErrorKind::InvalidArgument, "ult_k needs k >= 3");
    ValuationSpec spec = max_induced(
        "ult:" + std::to_string(k),
        [k](const MatrixView& a) {
            double step = 0.0;
            for (std::size_t i = 0; i + 1 < k; ++i) step = std::max(step, a(i, i + 1));
            return a(0, k - 1) - step;
        },
        k, 2.0);
    spec.points_fast_path = [k](const FiniteMetricSpace& space, std::span<const std::size_t> pts) {
        return ult_path_value(space, pts, k);
    };
    return spec;
}

ValuationSpec nu_hyp() {
    return max_induced(
        "hyp",
        [](const MatrixView& a) {
            return 0.5 * (a(0, 1) + a(2, 3) - std::max(a(0, 2) + a(1, 3), a(0, 3) + a(1, 2)));
        },
        4, 2.0);
}

ValuationSpec nu_k_point(std::size_t n, std::size_t k) {
    if (n == 0 || k == 0) throw Error(ErrorKind::InvalidArgument, "kpoint needs n, k >= 1");
    ValuationSpec spec;
    spec.name = "kpoint:" + std::to_string(n) + ":" + std::to_string(k);
    spec.n = n;
    spec.stability_constant = 1.0;
    spec.set_evaluator = [k](const MatrixSet& a) { return k_point_valuation(k, a, KPointMode::Exact).value; };
    return spec;
}

ValuationSpec valuation_from_id(const std::string& id) {
    const auto parts = split(id, ':');
    if (parts[0] == "rips" && parts.size() == 1) return nu_rips();
    if (parts[0] == "hyp" && parts.size() == 1) return nu_hyp();
    if (parts[0] == "ult" && parts.size() <= 2) {
        return nu_ult_k(parts.size() == 2 ? parse_count(parts[1], id) : 3);
    }
    if (parts[0] == "kpoint" && parts.size() == 3) {
        return nu_k_point(parse_count(parts[1], id), parse_count(parts[2], id));
    }
    throw Error(ErrorKind::UnknownFunctor, "unknown valuation '" + id + "'");
}

double stream_max_induced(const ValuationSpec& nu, const FiniteMetricSpace& space,
                          std::span<const std::size_t> points) {
    if (!nu.is_max_induced()) throw Error(ErrorKind::InvalidArgument, nu.name + " is not max-induced");
    double value = 0.0;
    for_each_tuple(points, nu.n, [&](std::span<const std::size_t> t) {
        value = std::max(value, nu.kernel(MatrixView(space, t)));
    });
    return value;
}

double evaluate_on_points(const ValuationSpec& nu, const FiniteMetricSpace& space,
                          std::span<const std::size_t> points, std::uint64_t budget) {
    if (nu.points_fast_path) return std::max(0.0, nu.points_fast_path(space, points));
    if (nu.is_max_induced()) return stream_max_induced(nu, space, points);
    return nu.evaluate(curvature_set_of(space, points, nu.n, budget));
}

KPointResult k_point_valuation(std::size_t k, const MatrixSet& a, KPointMode mode) {
    if (k == 0) throw Error(ErrorKind::InvalidArgument, "k-point valuation needs k >= 1");
    if (a.size() <= k) return {0.0, false};
    if (k == 1) {
        std::vector<const Matrix*> all;
        for (const auto& m : a) all.push_back(&m);
        return {one_center_radius(all), false};
    }
    if (mode == KPointMode::Greedy) return {greedy_k_center(k, a), true};
    if (k > kExactMaxCenters || a.size() > kExactMaxMembers) {
        throw Error(ErrorKind::ModeBudgetExceeded, "exact k-point valuation limited to k <= 3 and |A| <= 12 (got k=" +
                                                       std::to_string(k) + ", |A|=" + std::to_string(a.size()) + ")");
    }
    return {PartitionSearch(a, k).run(), false};
}

Matrix max_matrix(const MatrixSet& a) {
    Matrix out = a.members().front();
    for (const auto& m : a) {
        for (std::size_t e = 0; e < out.a.size(); ++e) out.a[e] = std::max(out.a[e], m.a[e]);
    }
    return out;
}

double AdjustedValuationSpec::evaluate(const MatrixSet& a, std::span<const double> v) const {
    if (a.side() != n + 1) throw Error(ErrorKind::DimensionMismatch, name + ": wrong matrix side");
    if (v.size() != descriptor_dim) throw Error(ErrorKind::DimensionMismatch, name + ": wrong descriptor length");
    return std::max(0.0, evaluate_fn(a, v));
}

AdjustedValuationSpec ecc_adjusted_valuation(std::size_t n, double c) {
    if (!(c >= 0.0 && c <= 1.0)) throw Error(ErrorKind::InvalidArgument, "eccentricity constant must lie in [0,1]");
    AdjustedValuationSpec spec;
    spec.name = ecc_functor_id(c);
    spec.n = n;
    spec.descriptor_dim = 1;
    // The descriptor and the basepoint column both enter with weight c.
    spec.stability_constant = std::max(1.0, 2.0 * c);
    spec.evaluate_fn = [c](const MatrixSet& a, std::span<const double> v) {
        const std::size_t side = a.side();
        double diam = 0.0;
        double nearest = std::numeric_limits<double>::infinity();
        for (const auto& m : a) {
            for (std::size_t i = 1; i < side; ++i) {
                nearest = std::min(nearest, m(0, i));
                for (std::size_t j = 1; j < side; ++j) diam = std::max(diam, m(i, j));
            }
        }
        if (side == 1) nearest = 0.0;
        return std::max(diam, c * (v[0] - nearest));
    };
    return spec;
}

PointDescriptorSpec ecc_descriptor() {
    PointDescriptorSpec spec;
    spec.name = "ecc";
    spec.dim = 1;
    spec.stability_constant = 1.0;
    spec.evaluate = [](const FiniteMetricSpace& space, std::size_t x) {
        return std::vector<double>{eccentricity(space, x)};
    };
    return spec;
}

IncreasingCheck is_increasing_on_sample(const ValuationSpec& nu, std::size_t trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> entry(0.0, 2.0), bump(0.0, 1.0);
    std::bernoulli_distribution coin(0.5);
    std::uniform_int_distribution<std::size_t> set_size(1, 4), extras(0, 2);
    const std::size_t n = nu.n;

    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<Matrix> a_members(set_size(rng), Matrix(n));
        for (auto& m : a_members) {
            for (double& v : m.a) v = entry(rng);
        }
        std::vector<Matrix> b_members;
        for (const auto& m : a_members) {
            Matrix inflated = m;
            for (double& v : inflated.a) {
                if (coin(rng)) v += bump(rng);
            }
            b_members.push_back(std::move(inflated));
        }
        const std::size_t extra = extras(rng);
        for (std::size_t e = 0; e < extra; ++e) {
            Matrix dom = a_members[e % a_members.size()];
            for (double& v : dom.a) v += bump(rng);
            b_members.push_back(std::move(dom));
        }
        MatrixSet a(std::move(a_members)), b(std::move(b_members));
        if (nu.evaluate(a) > nu.evaluate(b) + 1e-12) return {false, std::make_pair(std::move(a), std::move(b))};
    }
    return {};
}

}  // namespace curvfilt
