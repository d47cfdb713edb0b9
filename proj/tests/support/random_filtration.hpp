#pragma once

#include "curvfilt/combinatorics.hpp"
#include "curvfilt/filtrations.hpp"
#include "support/oracles.hpp"

#include <map>

namespace oracle {

/// Random subcomplex of the simplex on `space` up to dim_cap. Each simplex
/// whose faces are all present is kept with probability `keep`; its arrival
/// is the max over its faces plus a dyadic increment that is often 0.
inline curvfilt::FilteredSpace random_filtered_space(Rng& rng, const curvfilt::FiniteMetricSpace& space,
                                                     std::size_t dim_cap, double keep = 0.8) {
    using curvfilt::Vertex;
    const std::size_t n = space.size();
    std::map<std::vector<Vertex>, double> arrival;
    std::vector<curvfilt::FilteredSimplex> out;
    std::uniform_int_distribution<int> step(0, 6);
    std::bernoulli_distribution keep_it(keep);
    auto increment = [&] {
        const int s = step(rng);
        return s < 3 ? 0.0 : (s - 2) / 4.0;
    };
    for (Vertex v = 0; v < n; ++v) {
        const double a = increment();
        arrival[{v}] = a;
        out.push_back({{v}, a});
    }
    for (std::size_t size = 2; size <= std::min(dim_cap + 1, n); ++size) {
        std::vector<Vertex> c(size);
        std::iota(c.begin(), c.end(), 0);
        do {
            double base = 0.0;
            bool faces = true;
            for (std::size_t drop = 0; drop < size && faces; ++drop) {
                auto f = c;
                f.erase(f.begin() + static_cast<std::ptrdiff_t>(drop));
                const auto it = arrival.find(f);
                if (it == arrival.end()) faces = false;
                else base = std::max(base, it->second);
            }
            if (!faces || !keep_it(rng)) continue;
            const double a = base + increment();
            arrival[c] = a;
            out.push_back({c, a});
        } while (curvfilt::next_colex(c, n));
    }
    std::shuffle(out.begin(), out.end(), rng);
    return curvfilt::FilteredSpace::from_simplices(space, dim_cap, std::move(out), "random");
}

}  // namespace oracle
