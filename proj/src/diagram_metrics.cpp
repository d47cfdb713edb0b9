#include "curvfilt/diagram_metrics.hpp"

#include "curvfilt/error.hpp"
#include "curvfilt/filtrations.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace curvfilt {

namespace {

/// Hopcroft–Karp on a bipartite graph with equal sides.
class BipartiteMatcher {
public:
    explicit BipartiteMatcher(std::size_t n) : n_(n), adj_(n), match_l_(n, kFree), match_r_(n, kFree), dist_(n) {}

    void add_edge(std::size_t l, std::size_t r) { adj_[l].push_back(r); }

    std::size_t max_matching() {
        std::size_t size = 0;
        while (bfs()) {
            for (std::size_t l = 0; l < n_; ++l) {
                if (match_l_[l] == kFree && dfs(l)) ++size;
            }
        }
        return size;
    }

private:
    static constexpr std::size_t kFree = std::numeric_limits<std::size_t>::max();

    bool bfs() {
        std::queue<std::size_t> q;
        bool found = false;
        for (std::size_t l = 0; l < n_; ++l) {
            dist_[l] = match_l_[l] == kFree ? 0 : kFree;
            if (dist_[l] == 0) q.push(l);
        }
        while (!q.empty()) {
            const std::size_t l = q.front();
            q.pop();
            for (std::size_t r : adj_[l]) {
                const std::size_t next = match_r_[r];
                if (next == kFree) {
                    found = true;
                } else if (dist_[next] == kFree) {
                    dist_[next] = dist_[l] + 1;
                    q.push(next);
                }
            }
        }
        return found;
    }

    bool dfs(std::size_t l) {
        for (std::size_t r : adj_[l]) {
            const std::size_t next = match_r_[r];
            if (next == kFree || (dist_[next] == dist_[l] + 1 && dfs(next))) {
                match_l_[l] = r;
                match_r_[r] = l;
                return true;
            }
        }
        dist_[l] = kFree;
        return false;
    }

    std::size_t n_;
    std::vector<std::vector<std::size_t>> adj_;
    std::vector<std::size_t> match_l_, match_r_, dist_;
};

double linf_cost(const PersistenceInterval& a, const PersistenceInterval& b) {
    return std::max(std::abs(a.birth - b.birth), std::abs(a.death - b.death));
}

double half_persistence(const PersistenceInterval& a) { return (a.death - a.birth) / 2.0; }

// Left side: A then diagonal copies of B. Right side: B then diagonal copies of A.
bool feasible(const std::vector<PersistenceInterval>& a, const std::vector<PersistenceInterval>& b, double eps) {
    const std::size_t m = a.size(), p = b.size();
    BipartiteMatcher g(m + p);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < p; ++j) {
            if (linf_cost(a[i], b[j]) <= eps) g.add_edge(i, j);
        }
        if (half_persistence(a[i]) <= eps) g.add_edge(i, p + i);
    }
    for (std::size_t j = 0; j < p; ++j) {
        if (half_persistence(b[j]) <= eps) g.add_edge(m + j, j);
        for (std::size_t i = 0; i < m; ++i) g.add_edge(m + j, p + i);
    }
    return g.max_matching() == m + p;
}

}  // namespace

double bottleneck(const PersistenceDiagram& a, const PersistenceDiagram& b) {
    if (a.dimension != b.dimension) {
        throw Error(ErrorKind::DimensionMismatch, "bottleneck between degree " + std::to_string(a.dimension) +
                                                      " and degree " + std::to_string(b.dimension));
    }
    std::vector<double> inf_a, inf_b;
    std::vector<PersistenceInterval> fin_a, fin_b;
    for (const auto& i : a.intervals) (i.infinite() ? inf_a.push_back(i.birth) : fin_a.push_back(i));
    for (const auto& i : b.intervals) (i.infinite() ? inf_b.push_back(i.birth) : fin_b.push_back(i));
    if (inf_a.size() != inf_b.size()) return kInfinity;
    std::sort(inf_a.begin(), inf_a.end());
    std::sort(inf_b.begin(), inf_b.end());
    double inf_cost = 0.0;
    for (std::size_t i = 0; i < inf_a.size(); ++i) inf_cost = std::max(inf_cost, std::abs(inf_a[i] - inf_b[i]));

    // The optimum is attained at a pairwise cost or a half-persistence.
    std::vector<double> candidates{0.0};
    for (const auto& x : fin_a) {
        candidates.push_back(half_persistence(x));
        for (const auto& y : fin_b) candidates.push_back(linf_cost(x, y));
    }
    for (const auto& y : fin_b) candidates.push_back(half_persistence(y));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::size_t lo = 0, hi = candidates.size() - 1;  // candidates[hi] is always feasible
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (feasible(fin_a, fin_b, candidates[mid])) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    return std::max(inf_cost, candidates[lo]);
}

StabilityCertificate certificate_for(const std::string& functor_id) {
    if (functor_id == "rips") return {functor_id, 2.0, "rips valuation a01 is 1-stable; 2L with L = 1"};
    if (functor_id == "cech") return {functor_id, 2.0, "cech filtration is 1-Lipschitz in d_GH up to factor 2"};
    if (functor_id == "hyp") return {functor_id, 4.0, "hyp valuation is 2-stable; 2L with L = 2"};
    if (functor_id == "ult" || functor_id.rfind("ult:", 0) == 0) {
        return {functor_id, 4.0, "ult_k valuation is 2-stable; 2L with L = 2"};
    }
    if (functor_id.rfind("kpoint:", 0) == 0) return {functor_id, 2.0, "k-point valuation is 1-stable; 2L with L = 1"};
    if (functor_id == "upsilon" || functor_id.rfind("upsilon:", 0) == 0) return {functor_id, 1.0, "upsilon family is 1-stable"};
    throw Error(ErrorKind::UnknownFunctor, "no stability certificate for functor '" + functor_id + "'");
}

double gh_lower_bound(const PersistenceDiagram& a, const PersistenceDiagram& b, const StabilityCertificate& cert) {
    for (const auto* d : {&a, &b}) {
        if (d->functor_id != cert.functor_id) {
            throw Error(ErrorKind::MismatchedFunctor,
                        "diagram from '" + d->functor_id + "' checked against certificate for '" + cert.functor_id + "'");
        }
    }
    return bottleneck(a, b) / cert.constant;
}

PersistenceDiagram ecc_diagram(const FiniteMetricSpace& space, std::size_t x0, double c, std::size_t k) {
    auto dgm = flag_barcodes(ecc_weights(space, x0, c), k)[k];
    dgm.functor_id = ecc_functor_id(c);
    return dgm;
}

double cost_function(const FiniteMetricSpace& x_space, const FiniteMetricSpace& y_space, double c, std::size_t k,
                     std::size_t x, std::size_t y) {
    return bottleneck(ecc_diagram(x_space, x, c, k), ecc_diagram(y_space, y, c, k));
}

double basepoint_stability_score(const FiniteMetricSpace& x_space, const FiniteMetricSpace& y_space, double c,
                                 std::size_t k, std::size_t budget) {
    const std::size_t nx = x_space.size(), ny = y_space.size();
    if (nx * ny > budget) {
        throw Error(ErrorKind::BudgetExceeded, "|X|*|Y| = " + std::to_string(nx * ny) + " exceeds correspondence budget " +
                                                   std::to_string(budget));
    }
    std::vector<PersistenceDiagram> dx, dy;
    for (std::size_t x = 0; x < nx; ++x) dx.push_back(ecc_diagram(x_space, x, c, k));
    for (std::size_t y = 0; y < ny; ++y) dy.push_back(ecc_diagram(y_space, y, c, k));
    std::vector<double> cost(nx * ny);
    for (std::size_t x = 0; x < nx; ++x) {
        for (std::size_t y = 0; y < ny; ++y) cost[x * ny + y] = bottleneck(dx[x], dy[y]);
    }
    // Every correspondence covers each x and each y, so the min-max is at
    // least the worst row minimum and the worst column minimum; pairing each
    // point with its cheapest partner attains that.
    double score = 0.0;
    for (std::size_t x = 0; x < nx; ++x) {
        double best = kInfinity;
        for (std::size_t y = 0; y < ny; ++y) best = std::min(best, cost[x * ny + y]);
        score = std::max(score, best);
    }
    for (std::size_t y = 0; y < ny; ++y) {
        double best = kInfinity;
        for (std::size_t x = 0; x < nx; ++x) best = std::min(best, cost[x * ny + y]);
        score = std::max(score, best);
    }
    return score;
}

}  // namespace curvfilt
