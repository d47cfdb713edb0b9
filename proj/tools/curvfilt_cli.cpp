#include "curvfilt/diagram_metrics.hpp"
#include "curvfilt/error.hpp"
#include "curvfilt/io.hpp"
#include "curvfilt/pipeline.hpp"
#include "curvfilt/service.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

using namespace curvfilt;

namespace {

struct SourceFlags {
    std::string shape, points, matrix, metric = "euclidean";

    void attach(CLI::App* cmd) {
        auto* s = cmd->add_option("--shape", shape, "generated shape, e.g. circle:50, sphere:50, cube, figure8:400, line:5");
        auto* p = cmd->add_option("--points", points, "point cloud file (CSV x,y[,z] or JSON)");
        auto* m = cmd->add_option("--matrix", matrix, "distance matrix CSV");
        cmd->add_option("--metric", metric, "metric for --points: euclidean or knn:K");
        s->excludes(p, m);
        p->excludes(m);
    }

    SpaceSource source() const {
        if (!shape.empty()) return SpaceSource::parse(shape);
        if (!points.empty()) return SpaceSource::parse("points:" + points + "@" + metric);
        if (!matrix.empty()) return SpaceSource::parse("matrix:" + matrix);
        throw Error(ErrorKind::InvalidArgument, "one of --shape, --points, --matrix is required");
    }
};

void emit(const std::string& text, const std::string& out) {
    if (out.empty() || out == "-") {
        std::cout << text << '\n';
        return;
    }
    std::ofstream f(out);
    if (!f) throw Error(ErrorKind::IoError, "cannot write '" + out + "'");
    f << text << '\n';
}

std::string format12(double v) {
    if (v == kInfinity) return "inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string csv_matrix(const FiniteMetricSpace& space) {
    std::string out;
    char buf[64];
    for (std::size_t i = 0; i < space.size(); ++i) {
        for (std::size_t j = 0; j < space.size(); ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", space(i, j));
            if (j) out += ',';
            out += buf;
        }
        if (i + 1 < space.size()) out += '\n';
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Curvature-set filtrations and persistence on finite metric spaces"};
    app.require_subcommand(1);

    // barcode
    SourceFlags bsrc;
    DiagramRequest breq;
    std::optional<std::size_t> basepoint;
    std::string bout;
    auto* barcode = app.add_subcommand("barcode", "persistence diagrams in degrees 0..k as JSON");
    bsrc.attach(barcode);
    auto* functor_opt = barcode->add_option("--functor", breq.functor_id,
                                            "rips, cech, ult[:k], hyp, kpoint:n:k, ecc[:c], upsilon:gh "
                                            "(default ecc with --basepoint, else rips)");
    barcode->add_option("--basepoint", basepoint, "basepoint index for ecc");
    barcode->add_option("--c", breq.c, "eccentricity constant for ecc");
    barcode->add_option("--k", breq.k, "highest homology degree");
    auto* dim_cap_opt = barcode->add_option("--dim-cap", breq.dim_cap, "largest simplex dimension (default k+1)");
    barcode->add_option("--budget", breq.budget, "simplex budget");
    barcode->add_option("--out", bout, "output file (default stdout)");

    // compare
    std::string cmp_a, cmp_b;
    std::optional<std::size_t> cmp_k;
    auto* compare = app.add_subcommand("compare", "bottleneck distance between two diagram files");
    compare->add_option("a", cmp_a)->required();
    compare->add_option("b", cmp_b)->required();
    compare->add_option("--k", cmp_k, "degree to pick from diagram bundles (default: highest)");

    // ghlb
    std::string gh_a, gh_b, gh_functor = "rips";
    std::size_t gh_k = 0;
    std::size_t gh_budget = kDefaultCorrespondenceBudget;
    auto* ghlb = app.add_subcommand("ghlb", "Gromov-Hausdorff lower bound from diagram stability");
    ghlb->add_option("a", gh_a, "shape, matrix:PATH or points:PATH[@metric]")->required();
    ghlb->add_option("b", gh_b, "shape, matrix:PATH or points:PATH[@metric]")->required();
    ghlb->add_option("--functor", gh_functor);
    ghlb->add_option("--k", gh_k);
    ghlb->add_option("--gh-budget", gh_budget, "largest |X|*|Y| for the exact value");

    // generate
    SourceFlags gsrc;
    std::string gout, gformat = "csv";
    auto* gen = app.add_subcommand("generate", "write a space as a distance CSV or JSON");
    gsrc.attach(gen);
    gen->add_option("--format", gformat)->check(CLI::IsMember({"csv", "json"}));
    gen->add_option("--out", gout);

    // serve
    SourceFlags ssrc;
    std::string host = "127.0.0.1";
    int port = 8080;
    auto* serve = app.add_subcommand("serve", "HTTP service for the basepoint explorer");
    ssrc.attach(serve);
    serve->add_option("--host", host);
    serve->add_option("--port", port);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*barcode) {
            const auto source = bsrc.source();
            const auto space = source.load();
            breq.basepoint = basepoint;
            if (basepoint && functor_opt->count() == 0) breq.functor_id = "ecc";
            if (dim_cap_opt->count() == 0) breq.dim_cap = breq.k + 1;
            const auto result = compute_diagrams(space, breq);
            emit(barcode_json(space, breq, result).dump(), bout);
        } else if (*compare) {
            const auto a = read_diagram_file(cmp_a, cmp_k);
            const auto b = read_diagram_file(cmp_b, cmp_k);
            std::cout << format12(bottleneck(a, b)) << '\n';
        } else if (*ghlb) {
            const auto x = SpaceSource::parse(gh_a).load();
            const auto y = SpaceSource::parse(gh_b).load();
            DiagramRequest req;
            req.functor_id = gh_functor;
            req.k = gh_k;
            req.dim_cap = gh_k + 1;
            const auto dx = compute_diagrams(x, req);
            const auto dy = compute_diagrams(y, req);
            const auto cert = certificate_for(dx.functor_id);
            const double bound = gh_lower_bound(dx.diagrams[gh_k], dy.diagrams[gh_k], cert);
            std::cout << "lower_bound " << format12(bound) << '\n';
            if (x.size() * y.size() <= gh_budget) {
                std::cout << "gromov_hausdorff " << format12(gromov_hausdorff_bruteforce(x, y, gh_budget)) << '\n';
            } else {
                std::cout << "gromov_hausdorff unavailable (|X|*|Y| = " << x.size() * y.size() << " > " << gh_budget
                          << ")\n";
            }
        } else if (*gen) {
            const auto space = gsrc.source().load();
            emit(gformat == "csv" ? csv_matrix(space) : space_to_json(space).dump(), gout);
        } else if (*serve) {
            const auto source = ssrc.source();
            Service service(std::make_shared<SessionState>(source.load(), source.describe()));
            const int bound = service.bind(host, port);
            std::cerr << "listening on " << host << ':' << bound << std::endl;
            service.run();
        }
    } catch (const Error& e) {
        std::cerr << error_to_json(e).dump() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << error_to_json(ErrorKind::InvalidArgument, e.what()).dump() << '\n';
        return 2;
    }
    return 0;
}
