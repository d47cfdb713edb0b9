#include "curvfilt/pipeline.hpp"

#include "curvfilt/combinatorics.hpp"
#include "curvfilt/error.hpp"
#include "curvfilt/valuations.hpp"

#include <cmath>
#include <cstdlib>

namespace curvfilt {

SpaceSource SpaceSource::parse(const std::string& spec) {
    SpaceSource s;
    if (spec.rfind("matrix:", 0) == 0) {
        s.kind = Kind::Matrix;
        s.text = spec.substr(7);
    } else if (spec.rfind("points:", 0) == 0) {
        s.kind = Kind::Points;
        std::string rest = spec.substr(7);
        const auto at = rest.rfind('@');
        if (at != std::string::npos) {
            s.metric = PointMetric::parse(rest.substr(at + 1));
            rest.resize(at);
        }
        s.text = rest;
    } else {
        ShapeSpec::parse(spec);  // validate early
        s.text = spec;
    }
    if (s.text.empty()) throw Error(ErrorKind::ParseError, "empty source '" + spec + "'");
    return s;
}

FiniteMetricSpace SpaceSource::load() const {
    switch (kind) {
        case Kind::Shape: return generate(ShapeSpec::parse(text));
        case Kind::Matrix: return load_distance_csv(text);
        case Kind::Points: return load_points(text, metric);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown source kind");
}

std::string SpaceSource::describe() const {
    switch (kind) {
        case Kind::Shape: return text;
        case Kind::Matrix: return "matrix:" + text;
        case Kind::Points:
            return "points:" + text + (metric.kind == PointMetric::Kind::Euclidean ? "" : "@knn:" + std::to_string(metric.k));
    }
    return text;
}

namespace {

double parse_param(const std::string& text, const std::string& id) {
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (text.empty() || end != text.c_str() + text.size() || !std::isfinite(v)) {
        throw Error(ErrorKind::UnknownFunctor, "bad parameter in functor '" + id + "'");
    }
    return v;
}

std::size_t checked_basepoint(const FiniteMetricSpace& space, const DiagramRequest& r) {
    if (!r.basepoint) throw Error(ErrorKind::InvalidArgument, "functor '" + r.functor_id + "' needs a basepoint");
    if (*r.basepoint >= space.size()) {
        throw Error(ErrorKind::IndexOutOfRange, "basepoint " + std::to_string(*r.basepoint) +
                                                    " out of range for size " + std::to_string(space.size()));
    }
    return *r.basepoint;
}

/// Flag weights when the functor is one of the edge-driven ones.
std::optional<FlagWeights> flag_weights_for(const FiniteMetricSpace& space, const DiagramRequest& r, std::string& id) {
    if (r.functor_id == "rips") {
        id = "rips";
        return rips_weights(space);
    }
    if (r.functor_id == "ecc" || r.functor_id.rfind("ecc:", 0) == 0) {
        const double c = r.functor_id == "ecc" ? r.c : parse_param(r.functor_id.substr(4), r.functor_id);
        id = ecc_functor_id(c);
        return ecc_weights(space, checked_basepoint(space, r), c);
    }
    return std::nullopt;
}

FilteredSpace explicit_filtration(const FiniteMetricSpace& space, const DiagramRequest& r, std::size_t dim_cap) {
    const std::string& id = r.functor_id;
    if (id == "cech") return cech_filtration(space, dim_cap, r.budget);
    if (id.rfind("upsilon:", 0) == 0) return upsilon_filtration(space, parse_param(id.substr(8), id), dim_cap, r.budget);
    return local_filtration(space, valuation_from_id(id), dim_cap, r.budget);
}

}  // namespace

DiagramResult compute_diagrams(const FiniteMetricSpace& space, const DiagramRequest& r) {
    if (r.dim_cap < r.k + 1) {
        throw Error(ErrorKind::DimCapInsufficient, "degree " + std::to_string(r.k) + " needs dim_cap >= " +
                                                       std::to_string(r.k + 1) + ", got " + std::to_string(r.dim_cap));
    }
    DiagramResult out;
    if (auto w = flag_weights_for(space, r, out.functor_id)) {
        // Only simplices up to dimension k are ever stored as columns.
        const std::uint64_t columns = count_simplices(space.size(), r.k);
        if (columns > r.budget) {
            throw Error(ErrorKind::SimplexBudgetExceeded, std::to_string(columns) + " simplices up to dimension " +
                                                              std::to_string(r.k) + " exceed budget " +
                                                              std::to_string(r.budget));
        }
        out.diagrams = flag_barcodes(*w, r.k);
    } else {
        const auto fs = explicit_filtration(space, r, r.dim_cap);
        out.functor_id = fs.functor_id();
        out.diagrams = barcodes(fs, r.k);
    }
    for (auto& d : out.diagrams) d.functor_id = out.functor_id;
    return out;
}

PersistenceDiagram compute_h0_unionfind(const FiniteMetricSpace& space, const DiagramRequest& r) {
    std::string id;
    PersistenceDiagram dgm;
    if (auto w = flag_weights_for(space, r, id)) {
        dgm = barcode_h0_unionfind(flag_filtration(space, *w, id, 1, r.budget));
    } else {
        dgm = barcode_h0_unionfind(explicit_filtration(space, r, 1));
    }
    return dgm;
}

Json barcode_json(const FiniteMetricSpace& space, const DiagramRequest& request, const DiagramResult& result) {
    Json j = diagrams_to_json(result.functor_id, result.diagrams);
    if (request.basepoint && *request.basepoint < space.size()) {
        const auto row = space.row(*request.basepoint);
        j["basepoint"] = *request.basepoint;
        j["distances"] = std::vector<double>(row.begin(), row.end());
    }
    return j;
}

}  // namespace curvfilt
