#include "curvfilt/io.hpp"

#include <fstream>
#include <sstream>

namespace curvfilt {

Json diagram_to_json(const PersistenceDiagram& dgm) {
    Json intervals = Json::array();
    for (const auto& i : dgm.intervals) {
        intervals.push_back({{"birth", i.birth}, {"death", i.infinite() ? Json(nullptr) : Json(i.death)}});
    }
    Json j = {{"dimension", dgm.dimension}, {"intervals", std::move(intervals)}};
    if (!dgm.functor_id.empty()) j["functor"] = dgm.functor_id;
    return j;
}

PersistenceDiagram diagram_from_json(const Json& j) {
    try {
        if (!j.is_object() || !j.contains("dimension") || !j.contains("intervals")) {
            throw Error(ErrorKind::ParseError, "diagram needs 'dimension' and 'intervals'");
        }
        PersistenceDiagram dgm;
        dgm.dimension = j.at("dimension").get<std::size_t>();
        if (j.contains("functor")) dgm.functor_id = j.at("functor").get<std::string>();
        for (const auto& i : j.at("intervals")) {
            const double birth = i.at("birth").get<double>();
            const auto& death = i.at("death");
            const double d = death.is_null() ? kInfinity : death.get<double>();
            if (d < birth) throw Error(ErrorKind::ParseError, "interval dies before it is born");
            dgm.add(birth, d);
        }
        dgm.normalize();
        return dgm;
    } catch (const Json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("diagram schema: ") + e.what());
    }
}

Json diagrams_to_json(const std::string& functor_id, const std::vector<PersistenceDiagram>& dgms) {
    Json list = Json::array();
    for (const auto& d : dgms) list.push_back(diagram_to_json(d));
    return {{"functor", functor_id}, {"diagrams", std::move(list)}};
}

PersistenceDiagram read_diagram_file(const std::string& path, std::optional<std::size_t> degree) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::exception& e) {
        throw Error(ErrorKind::ParseError, "'" + path + "': " + e.what());
    }
    if (!j.is_object() || !j.contains("diagrams")) {
        auto dgm = diagram_from_json(j);
        if (degree && dgm.dimension != *degree) {
            throw Error(ErrorKind::DimensionMismatch, "'" + path + "' holds degree " + std::to_string(dgm.dimension));
        }
        return dgm;
    }
    const auto& list = j.at("diagrams");
    if (!list.is_array() || list.empty()) throw Error(ErrorKind::ParseError, "'" + path + "' has no diagrams");
    if (!degree) return diagram_from_json(list.back());
    for (const auto& d : list) {
        auto dgm = diagram_from_json(d);
        if (dgm.dimension == *degree) return dgm;
    }
    throw Error(ErrorKind::DimensionMismatch, "'" + path + "' has no degree-" + std::to_string(*degree) + " diagram");
}

Json filtered_space_to_json(const FilteredSpace& fs) {
    Json simplices = Json::array();
    for (const auto& s : fs.simplices()) simplices.push_back({{"vertices", s.vertices}, {"arrival", s.arrival}});
    return {{"functor", fs.functor_id()},
            {"dim_cap", fs.dim_cap()},
            {"size", fs.space().size()},
            {"simplices", std::move(simplices)}};
}

Json space_to_json(const FiniteMetricSpace& space) {
    Json j = {{"size", space.size()}, {"distances", space.to_rows()}};
    if (space.has_coordinates()) j["points"] = space.coordinates();
    if (!space.labels().empty()) j["labels"] = space.labels();
    return j;
}

Json error_to_json(ErrorKind kind, const std::string& message) {
    return {{"error", std::string(error_kind_name(kind))}, {"message", message}};
}

Json error_to_json(const Error& e) { return error_to_json(e.kind(), e.what()); }

}  // namespace curvfilt
