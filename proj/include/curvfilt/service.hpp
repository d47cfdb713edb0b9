#pragma once

#include "curvfilt/pipeline.hpp"

#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <tuple>

namespace curvfilt {

/// Loaded space plus a memo of computed diagrams. The space never changes
/// after construction; cache entries are immutable once inserted.
class SessionState {
public:
    SessionState(FiniteMetricSpace space, std::string source);

    const FiniteMetricSpace& space() const noexcept { return space_; }
    const std::string& source() const noexcept { return source_; }

    /// Returns the cached result or computes and stores it. `hit` reports which.
    std::shared_ptr<const DiagramResult> diagrams(const DiagramRequest& request, bool* hit = nullptr);

private:
    using Key = std::tuple<std::string, std::size_t, double, std::size_t, std::size_t, std::uint64_t>;

    FiniteMetricSpace space_;
    std::string source_;
    mutable std::shared_mutex mutex_;
    std::map<Key, std::shared_ptr<const DiagramResult>> cache_;
};

/// Parses a POST /barcode or /h0 body into a request, applying defaults and
/// clamping the simplex budget to the service cap.
DiagramRequest request_from_json(const Json& body);

/// HTTP front end: GET /health, /space, /eccentricities; POST /barcode, /h0.
class Service {
public:
    explicit Service(std::shared_ptr<SessionState> session);
    ~Service();
    Service(const Service&) = delete;
    Service& operator=(const Service&) = delete;

    /// Binds to host:port (port 0 picks a free one) and returns the port, or
    /// throws IoError.
    int bind(const std::string& host, int port);
    /// Serves until stop(); call after bind().
    void run();
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace curvfilt
