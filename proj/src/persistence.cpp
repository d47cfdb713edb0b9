#include "curvfilt/persistence.hpp"

#include "curvfilt/error.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <unordered_map>
#include <unordered_set>

namespace curvfilt {

void PersistenceDiagram::add(double birth, double death) {
    if (death > birth) intervals.push_back({birth, death});
}

void PersistenceDiagram::normalize() {
    std::erase_if(intervals, [](const PersistenceInterval& i) { return !(i.death > i.birth); });
    std::sort(intervals.begin(), intervals.end());
}

std::size_t PersistenceDiagram::infinite_count() const {
    return static_cast<std::size_t>(
        std::count_if(intervals.begin(), intervals.end(), [](const auto& i) { return i.infinite(); }));
}

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

/// Total order (arrival, dimension, lexicographic vertices); faces precede
/// cofaces even at equal arrival.
struct FiltrationOrder {
    std::vector<std::size_t> sorted;    // filtration index -> simplex position
    std::vector<std::size_t> index_of;  // simplex position -> filtration index

    explicit FiltrationOrder(const FilteredSpace& fs) {
        const auto& s = fs.simplices();
        sorted.resize(s.size());
        std::iota(sorted.begin(), sorted.end(), 0);
        std::sort(sorted.begin(), sorted.end(), [&](std::size_t a, std::size_t b) {
            if (s[a].arrival != s[b].arrival) return s[a].arrival < s[b].arrival;
            if (s[a].vertices.size() != s[b].vertices.size()) return s[a].vertices.size() < s[b].vertices.size();
            return s[a].vertices < s[b].vertices;
        });
        index_of.resize(s.size());
        for (std::size_t i = 0; i < sorted.size(); ++i) index_of[sorted[i]] = i;
    }
};

std::vector<std::uint32_t> boundary_rows(const FilteredSpace& fs, const FiltrationOrder& order,
                                         const FilteredSimplex& simplex) {
    std::vector<std::uint32_t> rows;
    if (simplex.vertices.size() < 2) return rows;
    std::vector<Vertex> face;
    for (std::size_t drop = 0; drop < simplex.vertices.size(); ++drop) {
        face = simplex.vertices;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
        const auto pos = fs.find(face);
        if (!pos) throw Error(ErrorKind::InvalidArgument, "filtered space is not closed under faces");
        rows.push_back(static_cast<std::uint32_t>(order.index_of[*pos]));
    }
    std::sort(rows.begin(), rows.end());
    return rows;
}

void add_mod2(std::vector<std::uint32_t>& target, const std::vector<std::uint32_t>& source,
              std::vector<std::uint32_t>& scratch) {
    scratch.clear();
    std::set_symmetric_difference(target.begin(), target.end(), source.begin(), source.end(),
                                  std::back_inserter(scratch));
    target.swap(scratch);
}

void check_dim_cap(const FilteredSpace& fs, std::size_t k) {
    if (fs.dim_cap() < k + 1) {
        throw Error(ErrorKind::DimCapInsufficient, "degree " + std::to_string(k) + " needs dim_cap >= " +
                                                       std::to_string(k + 1) + ", have " +
                                                       std::to_string(fs.dim_cap()));
    }
}

}  // namespace

std::vector<PersistenceDiagram> barcodes(const FilteredSpace& fs, std::size_t max_k) {
    check_dim_cap(fs, max_k);
    const auto& simplices = fs.simplices();
    const FiltrationOrder order(fs);
    const std::size_t total = simplices.size();

    std::vector<PersistenceDiagram> out(max_k + 1);
    for (std::size_t k = 0; k <= max_k; ++k) out[k].dimension = k;

    // Filtration indices that were the pivot of a higher-dimensional column.
    std::vector<bool> is_low(total, false);
    std::vector<std::size_t> pivot_owner(total, kNone);
    std::vector<std::uint32_t> scratch;

    for (std::size_t d = max_k + 1;; --d) {
        std::vector<bool> next_low(total, false);
        if (d >= 1) {
            std::unordered_map<std::size_t, std::vector<std::uint32_t>> reduced;
            for (std::size_t f = 0; f < total; ++f) {
                const auto& s = simplices[order.sorted[f]];
                if (s.dimension() != d || is_low[f]) continue;  // clearing
                auto col = boundary_rows(fs, order, s);
                while (!col.empty() && pivot_owner[col.back()] != kNone) {
                    add_mod2(col, reduced.at(pivot_owner[col.back()]), scratch);
                }
                if (col.empty()) {
                    if (d <= max_k) out[d].add(s.arrival, kInfinity);
                    continue;
                }
                const std::uint32_t low = col.back();
                pivot_owner[low] = f;
                next_low[low] = true;
                out[d - 1].add(simplices[order.sorted[low]].arrival, s.arrival);
                reduced.emplace(f, std::move(col));
            }
        } else {
            for (std::size_t f = 0; f < total; ++f) {
                const auto& s = simplices[order.sorted[f]];
                if (s.dimension() == 0 && !is_low[f]) out[0].add(s.arrival, kInfinity);
            }
        }
        is_low = std::move(next_low);
        if (d == 0) break;
    }
    for (auto& dgm : out) {
        dgm.functor_id = fs.functor_id();
        dgm.normalize();
    }
    return out;
}

PersistenceDiagram barcode(const FilteredSpace& fs, std::size_t k) { return barcodes(fs, k)[k]; }

PersistenceDiagram barcode_dense(const FilteredSpace& fs, std::size_t k) {
    check_dim_cap(fs, k);
    const FiltrationOrder order(fs);
    const auto& simplices = fs.simplices();
    const std::size_t total = simplices.size();
    std::vector<std::vector<bool>> cols(total, std::vector<bool>(total, false));
    for (std::size_t f = 0; f < total; ++f) {
        for (std::uint32_t r : boundary_rows(fs, order, simplices[order.sorted[f]])) cols[f][r] = true;
    }
    auto low_of = [&](const std::vector<bool>& c) -> std::size_t {
        for (std::size_t r = total; r > 0; --r) {
            if (c[r - 1]) return r - 1;
        }
        return kNone;
    };
    std::vector<std::size_t> low(total, kNone), owner(total, kNone);
    for (std::size_t j = 0; j < total; ++j) {
        std::size_t l = low_of(cols[j]);
        while (l != kNone && owner[l] != kNone) {
            const auto& other = cols[owner[l]];
            for (std::size_t r = 0; r < total; ++r) cols[j][r] = cols[j][r] != other[r];
            l = low_of(cols[j]);
        }
        low[j] = l;
        if (l != kNone) owner[l] = j;
    }
    PersistenceDiagram dgm;
    dgm.dimension = k;
    dgm.functor_id = fs.functor_id();
    for (std::size_t j = 0; j < total; ++j) {
        const auto& s = simplices[order.sorted[j]];
        if (s.dimension() == k + 1 && low[j] != kNone) dgm.add(simplices[order.sorted[low[j]]].arrival, s.arrival);
        if (s.dimension() == k && low[j] == kNone && owner[j] == kNone) dgm.add(s.arrival, kInfinity);
    }
    dgm.normalize();
    return dgm;
}

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void attach(std::size_t child_root, std::size_t parent_root) { parent_[child_root] = parent_root; }

private:
    std::vector<std::size_t> parent_;
};

/// Elder-rule merge bookkeeping shared by both H0 paths. Roots are the
/// oldest vertex of their component: smallest (birth, index).
struct ElderForest {
    UnionFind uf;
    std::vector<double> birth;
    PersistenceDiagram dgm;

    explicit ElderForest(std::vector<double> births) : uf(births.size()), birth(std::move(births)) {}

    /// Returns true when the edge merges two components.
    bool merge(std::size_t u, std::size_t v, double arrival) {
        std::size_t ru = uf.find(u), rv = uf.find(v);
        if (ru == rv) return false;
        const bool u_older = birth[ru] != birth[rv] ? birth[ru] < birth[rv] : ru < rv;
        if (!u_older) std::swap(ru, rv);
        dgm.add(birth[rv], arrival);
        uf.attach(rv, ru);
        return true;
    }

    PersistenceDiagram finish() {
        for (std::size_t v = 0; v < birth.size(); ++v) {
            if (uf.find(v) == v) dgm.add(birth[v], kInfinity);
        }
        dgm.normalize();
        return std::move(dgm);
    }
};

}  // namespace

PersistenceDiagram barcode_h0_unionfind(const FilteredSpace& fs) {
    const std::size_t n = fs.space().size();
    std::vector<double> births(n, kInfinity);
    std::vector<const FilteredSimplex*> edges;
    for (const auto& s : fs.simplices()) {
        if (s.vertices.size() == 1) births[s.vertices[0]] = s.arrival;
        if (s.vertices.size() == 2) edges.push_back(&s);
    }
    std::vector<std::size_t> present;
    for (std::size_t v = 0; v < n; ++v) {
        if (births[v] != kInfinity) present.push_back(v);
    }
    std::sort(edges.begin(), edges.end(), [](const FilteredSimplex* a, const FilteredSimplex* b) {
        return a->arrival != b->arrival ? a->arrival < b->arrival : a->vertices < b->vertices;
    });
    ElderForest forest(births);
    for (const auto* e : edges) forest.merge(e->vertices[0], e->vertices[1], e->arrival);
    // Vertices absent from the filtration never appear in the diagram.
    PersistenceDiagram dgm = [&] {
        PersistenceDiagram d = std::move(forest.dgm);
        for (std::size_t v : present) {
            if (forest.uf.find(v) == v) d.add(births[v], kInfinity);
        }
        d.normalize();
        return d;
    }();
    dgm.dimension = 0;
    dgm.functor_id = fs.functor_id();
    return dgm;
}

namespace {

struct Keyed {
    double value;
    std::uint64_t rank;

    friend bool operator==(const Keyed&, const Keyed&) = default;
    friend bool operator<(const Keyed& a, const Keyed& b) {
        return a.value != b.value ? a.value < b.value : a.rank < b.rank;
    }
    friend bool operator>(const Keyed& a, const Keyed& b) { return b < a; }
};

/// Implicit flag complex: simplices are colex ranks, arrival is the max of
/// the weights over all vertex pairs (diagonal included).
class FlagComplex {
public:
    FlagComplex(const FlagWeights& w, std::size_t max_size) : w_(w), binom_(w.n, max_size) {}

    std::size_t n() const noexcept { return w_.n; }
    const BinomialTable& binomial() const noexcept { return binom_; }

    double value(std::span<const Vertex> v) const {
        double out = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            for (std::size_t j = i; j < v.size(); ++j) out = std::max(out, w_(v[i], v[j]));
        }
        return out;
    }

    /// Calls fn(Keyed) for every coface of the simplex with the given vertices.
    template <class Fn>
    void for_each_coface(std::span<const Vertex> v, double value, Fn&& fn) const {
        const std::size_t d = v.size();
        // Rank contributions of vertices below/above the inserted one.
        std::uint64_t below = 0;
        std::uint64_t above = 0;
        for (std::size_t i = 0; i < d; ++i) above += binom_(v[i], i + 2);
        std::size_t pos = 0;
        for (Vertex x = 0; x < w_.n; ++x) {
            if (pos < d && v[pos] == x) {
                above -= binom_(v[pos], pos + 2);
                below += binom_(v[pos], pos + 1);
                ++pos;
                continue;
            }
            double val = std::max(value, w_(x, x));
            for (std::size_t i = 0; i < d; ++i) val = std::max(val, w_(v[i], x));
            fn(Keyed{val, below + binom_(x, pos + 1) + above});
        }
    }

private:
    const FlagWeights& w_;
    BinomialTable binom_;
};

class WorkingColumn {
public:
    void push(Keyed k) { heap_.push(k); }
    bool empty() const { return heap_.empty(); }

    /// Smallest entry with odd multiplicity, left in place.
    std::optional<Keyed> pivot() {
        while (!heap_.empty()) {
            const Keyed top = heap_.top();
            heap_.pop();
            if (!heap_.empty() && heap_.top() == top) {
                heap_.pop();
                continue;
            }
            heap_.push(top);
            return top;
        }
        return std::nullopt;
    }

private:
    std::priority_queue<Keyed, std::vector<Keyed>, std::greater<>> heap_;
};

}  // namespace

std::vector<PersistenceDiagram> flag_barcodes(const FlagWeights& weights, std::size_t max_k) {
    const std::size_t n = weights.n;
    std::vector<PersistenceDiagram> out(max_k + 1);
    for (std::size_t k = 0; k <= max_k; ++k) out[k].dimension = k;
    if (n == 0) return out;
    const FlagComplex complex(weights, max_k + 2);

    // Degree 0 by union-find, edges in (value, colex rank) order so that the
    // cleared edges agree with the order used for the degree-1 columns.
    std::unordered_set<std::uint64_t> cleared;
    {
        std::vector<double> births(n);
        for (std::size_t v = 0; v < n; ++v) births[v] = weights(v, v);
        std::vector<Keyed> edges;
        edges.reserve(n * (n - 1) / 2);
        for (Vertex b = 1; b < n; ++b) {
            for (Vertex a = 0; a < b; ++a) {
                edges.push_back({std::max({weights(a, b), births[a], births[b]}), complex.binomial()(b, 2) + a});
            }
        }
        std::sort(edges.begin(), edges.end());
        ElderForest forest(births);
        std::vector<Vertex> ab;
        for (const auto& e : edges) {
            complex.binomial().unrank(e.rank, 2, n, ab);
            if (forest.merge(ab[0], ab[1], e.value)) cleared.insert(e.rank);
        }
        out[0] = forest.finish();
        out[0].dimension = 0;
    }

    std::vector<Vertex> verts, other;
    for (std::size_t d = 1; d <= max_k; ++d) {
        const std::size_t size = d + 1;
        if (size > n) break;
        std::vector<Keyed> columns;
        std::vector<Vertex> c(size);
        std::iota(c.begin(), c.end(), 0);
        std::uint64_t rank = 0;
        do {
            if (!cleared.count(rank)) columns.push_back({complex.value(c), rank});
            ++rank;
        } while (next_colex(c, n));
        std::sort(columns.begin(), columns.end(), std::greater<>());

        std::unordered_set<std::uint64_t> next_cleared;
        // pivot rank -> (column rank, combination of column simplices)
        std::unordered_map<std::uint64_t, std::pair<std::uint64_t, std::vector<std::uint64_t>>> pivots;
        auto& dgm = out[d];

        for (const auto& col : columns) {
            complex.binomial().unrank(col.rank, size, n, verts);
            std::optional<Keyed> first;
            complex.for_each_coface(verts, col.value, [&](Keyed k) {
                if (!first || k < *first) first = k;
            });
            if (!first) {
                dgm.add(col.value, kInfinity);
                continue;
            }
            if (!pivots.count(first->rank)) {
                pivots.emplace(first->rank, std::make_pair(col.rank, std::vector<std::uint64_t>{}));
                next_cleared.insert(first->rank);
                dgm.add(col.value, first->value);
                continue;
            }
            WorkingColumn working;
            std::vector<std::uint64_t> combo{col.rank};
            auto push_coboundary = [&](std::uint64_t simplex) {
                complex.binomial().unrank(simplex, size, n, other);
                complex.for_each_coface(other, complex.value(other), [&](Keyed k) { working.push(k); });
            };
            push_coboundary(col.rank);
            while (true) {
                const auto p = working.pivot();
                if (!p) {
                    dgm.add(col.value, kInfinity);
                    break;
                }
                const auto hit = pivots.find(p->rank);
                if (hit == pivots.end()) {
                    std::sort(combo.begin(), combo.end());
                    std::vector<std::uint64_t> reduced;
                    for (std::size_t i = 0; i < combo.size();) {
                        std::size_t j = i;
                        while (j < combo.size() && combo[j] == combo[i]) ++j;
                        if ((j - i) % 2 == 1 && combo[i] != col.rank) reduced.push_back(combo[i]);
                        i = j;
                    }
                    pivots.emplace(p->rank, std::make_pair(col.rank, std::move(reduced)));
                    next_cleared.insert(p->rank);
                    dgm.add(col.value, p->value);
                    break;
                }
                const auto& [owner, owner_combo] = hit->second;
                push_coboundary(owner);
                combo.push_back(owner);
                for (std::uint64_t s : owner_combo) {
                    push_coboundary(s);
                    combo.push_back(s);
                }
            }
        }
        cleared = std::move(next_cleared);
    }
    for (auto& dgm : out) dgm.normalize();
    return out;
}

}  // namespace curvfilt
