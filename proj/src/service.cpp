#include "curvfilt/service.hpp"

#include "curvfilt/error.hpp"

#include <httplib.h>

#include <mutex>

namespace curvfilt {

SessionState::SessionState(FiniteMetricSpace space, std::string source)
    : space_(std::move(space)), source_(std::move(source)) {}

std::shared_ptr<const DiagramResult> SessionState::diagrams(const DiagramRequest& r, bool* hit) {
    const Key key{r.functor_id, r.basepoint.value_or(static_cast<std::size_t>(-1)), r.c, r.k, r.dim_cap, r.budget};
    {
        std::shared_lock lock(mutex_);
        if (auto it = cache_.find(key); it != cache_.end()) {
            if (hit) *hit = true;
            return it->second;
        }
    }
    if (hit) *hit = false;
    // Computed outside the lock; identical concurrent requests both compute
    // and the last write wins with an equal value.
    auto result = std::make_shared<const DiagramResult>(compute_diagrams(space_, r));
    std::unique_lock lock(mutex_);
    cache_[key] = result;
    return result;
}

DiagramRequest request_from_json(const Json& body) {
    if (!body.is_object()) throw Error(ErrorKind::ParseError, "request body must be a JSON object");
    DiagramRequest r;
    try {
        if (body.contains("basepoint") && !body.at("basepoint").is_null()) {
            r.basepoint = body.at("basepoint").get<std::size_t>();
        }
        r.functor_id = body.value("functor", std::string(r.basepoint ? "ecc" : "rips"));
        r.c = body.value("c", r.c);
        r.k = body.value("k", r.k);
        r.dim_cap = body.value("dim_cap", std::max<std::size_t>(r.dim_cap, r.k + 1));
        r.budget = body.value("budget", kServiceSimplexCap);
    } catch (const Json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("request field: ") + e.what());
    }
    r.budget = std::min(r.budget, kServiceSimplexCap);
    return r;
}

struct Service::Impl {
    std::shared_ptr<SessionState> session;
    httplib::Server server;

    static void reply(httplib::Response& res, int status, const Json& body) {
        res.status = status;
        res.set_content(body.dump(), "application/json");
    }

    template <class Fn>
    static void guarded(httplib::Response& res, Fn&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            reply(res, 400, error_to_json(e));
        } catch (const Json::exception& e) {
            reply(res, 400, error_to_json(ErrorKind::ParseError, e.what()));
        } catch (const std::exception& e) {
            reply(res, 500, error_to_json(ErrorKind::InvalidArgument, e.what()));
        }
    }

    static Json parse_body(const httplib::Request& req) {
        if (req.body.empty()) return Json::object();
        return Json::parse(req.body);
    }

    void routes() {
        server.Get("/health", [](const httplib::Request&, httplib::Response& res) {
            reply(res, 200, {{"status", "ok"}});
        });
        server.Get("/space", [this](const httplib::Request&, httplib::Response& res) {
            guarded(res, [&] {
                const auto& space = session->space();
                Json points = Json::array();
                for (std::size_t i = 0; i < space.size(); ++i) {
                    if (space.has_coordinates()) {
                        points.push_back(space.coordinates()[i]);
                    } else {
                        points.push_back({static_cast<double>(i), 0.0, 0.0});  // index layout
                    }
                }
                reply(res, 200,
                      {{"size", space.size()},
                       {"diameter", diameter(space)},
                       {"points", std::move(points)},
                       {"has_coordinates", space.has_coordinates()},
                       {"source", session->source()}});
            });
        });
        server.Get("/eccentricities", [this](const httplib::Request&, httplib::Response& res) {
            guarded(res, [&] { reply(res, 200, {{"eccentricities", eccentricities(session->space())}}); });
        });
        server.Post("/barcode", [this](const httplib::Request& req, httplib::Response& res) {
            guarded(res, [&] {
                const auto request = request_from_json(parse_body(req));
                bool hit = false;
                const auto result = session->diagrams(request, &hit);
                res.set_header("X-Cache", hit ? "hit" : "miss");
                reply(res, 200, barcode_json(session->space(), request, *result));
            });
        });
        server.Post("/h0", [this](const httplib::Request& req, httplib::Response& res) {
            guarded(res, [&] {
                auto request = request_from_json(parse_body(req));
                request.k = 0;
                const auto dgm = compute_h0_unionfind(session->space(), request);
                reply(res, 200, diagrams_to_json(dgm.functor_id, {dgm}));
            });
        });
    }
};

Service::Service(std::shared_ptr<SessionState> session) : impl_(std::make_unique<Impl>()) {
    impl_->session = std::move(session);
    impl_->routes();
}

Service::~Service() { stop(); }

int Service::bind(const std::string& host, int port) {
    const int bound = port == 0 ? impl_->server.bind_to_any_port(host) : (impl_->server.bind_to_port(host, port) ? port : -1);
    if (bound < 0) throw Error(ErrorKind::IoError, "cannot bind " + host + ":" + std::to_string(port));
    return bound;
}

void Service::run() { impl_->server.listen_after_bind(); }

void Service::stop() { impl_->server.stop(); }

}  // namespace curvfilt
