#pragma once

#include "curvfilt/error.hpp"
#include "curvfilt/filtrations.hpp"
#include "curvfilt/persistence.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace curvfilt {

using Json = nlohmann::json;

/// {"dimension": k, "intervals": [{"birth": b, "death": d | null}], "functor": id}
Json diagram_to_json(const PersistenceDiagram& dgm);
/// Inverse of diagram_to_json. Throws ParseError on schema violations.
PersistenceDiagram diagram_from_json(const Json& j);

/// {"functor": id, "diagrams": [...]} for degrees 0..k.
Json diagrams_to_json(const std::string& functor_id, const std::vector<PersistenceDiagram>& dgms);

/// Reads either a single diagram object or a diagrams bundle. For a bundle,
/// `degree` selects the entry (default: the highest degree present).
PersistenceDiagram read_diagram_file(const std::string& path, std::optional<std::size_t> degree = std::nullopt);

Json filtered_space_to_json(const FilteredSpace& fs);
Json space_to_json(const FiniteMetricSpace& space);

/// {"error": kind, "message": text}
Json error_to_json(const Error& e);
Json error_to_json(ErrorKind kind, const std::string& message);

}  // namespace curvfilt
