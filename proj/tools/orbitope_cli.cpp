#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "orbitope/commands.hpp"
#include "orbitope/lp.hpp"

using namespace orbitope;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

struct Args {
    int k = 0;
    std::optional<int> samples;
    double resolution = 1e-3;
    std::optional<double> tol;
    std::string out;
    std::string alpha;
    std::string beta;
    std::string theta;
    std::string point;
    int iters = 20000;
    std::string kind;
};

int emit(const RunReport& report, const std::string& out) {
    const std::string text = report.render();
    std::cout << text;
    if (!out.empty()) {
        std::ofstream f(out);
        f << text;
        if (!f) {
            std::cerr << "cannot write report to " << out << '\n';
            return kExitCheckFailure;
        }
    }
    return report.passed() ? kExitPass : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Checks on the convex hull of the symmetric trigonometric moment curve"};
    app.require_subcommand(1);
    Args a;

    auto add_k = [&](CLI::App* sub) { sub->add_option("--k", a.k, "curve parameter k")->required(); };
    auto add_tol = [&](CLI::App* sub) { sub->add_option("--tol", a.tol, "override the check tolerance"); };
    auto add_out = [&](CLI::App* sub) { sub->add_option("--out", a.out, "also write the report to this file"); };

    std::function<RunReport()> run;

    auto* identities = app.add_subcommand("identities", "trigonometric identity residuals");
    auto* facets = app.add_subcommand("facets", "facet description of Q_k");
    auto* roots = app.add_subcommand("roots", "closed-form roots of f_{j,k} against bisection");
    auto* witness = app.add_subcommand("witness", "origin as a convex combination of P_k's vertices");
    auto* tangent = app.add_subcommand("tangent-cone", "curve leaves the P_k vertex into the interior");
    for (auto* sub : {identities, facets, roots, witness, tangent}) {
        add_k(sub);
        add_tol(sub);
        add_out(sub);
    }
    identities->callback([&] { run = [&] { return cmd_identities(a.k, a.tol.value_or(1e-12)); }; });
    facets->callback([&] { run = [&] { return cmd_facets(a.k, a.tol.value_or(1e-10)); }; });
    roots->callback([&] { run = [&] { return cmd_roots(a.k, a.tol.value_or(1e-10)); }; });
    witness->callback([&] { run = [&] { return cmd_witness(a.k, a.tol.value_or(1e-12)); }; });
    tangent->callback([&] { run = [&] { return cmd_tangent_cone(a.k); }; });

    auto* threshold = app.add_subcommand("threshold", "estimate the edge threshold arc by bisection");
    add_k(threshold);
    add_tol(threshold);
    add_out(threshold);
    threshold->add_option("--samples", a.samples, "curve samples (default 4000)");
    threshold->add_option("--resolution", a.resolution, "bracket width on the arc (default 1e-3)");
    threshold->callback([&] {
        run = [&] { return cmd_threshold(a.k, a.samples.value_or(4000), a.resolution, a.tol.value_or(5e-3)); };
    });

    auto* edge = app.add_subcommand("edge", "is [SM(alpha), SM(beta)] an edge of B_2k");
    add_k(edge);
    add_out(edge);
    edge->add_option("--samples", a.samples, "curve samples (default 2000)");
    edge->add_option("--alpha", a.alpha, "first angle, radians or p*pi/q")->required();
    edge->add_option("--beta", a.beta, "second angle, radians or p*pi/q")->required();
    edge->callback([&] {
        run = [&] { return cmd_edge(a.k, parse_angle(a.alpha), parse_angle(a.beta), a.samples.value_or(2000)); };
    });

    auto* membership = app.add_subcommand("membership", "membership in B_2k through the Toeplitz lift");
    add_k(membership);
    add_tol(membership);
    add_out(membership);
    auto* theta_opt = membership->add_option("--theta", a.theta, "test SM_2k(theta)");
    auto* point_opt = membership->add_option("--point", a.point, "comma-separated 2k coordinates");
    theta_opt->excludes(point_opt);
    membership->add_option("--iters", a.iters, "alternating-projection budget (default 20000)");
    membership->callback([&] {
        if (a.theta.empty() == a.point.empty()) throw CLI::ValidationError("membership", "give exactly one of --theta, --point");
        run = [&] {
            const double tol = a.tol.value_or(1e-9);
            if (!a.theta.empty()) return cmd_membership(a.k, parse_angle(a.theta), a.iters, tol);
            return cmd_membership(a.k, parse_point(a.point), a.iters, tol);
        };
    });

    auto* plot = app.add_subcommand("plot-data", "CSV data for plotting");
    add_k(plot);
    plot->add_option("--kind", a.kind, "curve | f-graphs | facet-projection | threshold-sweep")
        ->required()
        ->check(CLI::IsMember({"curve", "f-graphs", "facet-projection", "threshold-sweep"}));
    plot->add_option("--out", a.out, "CSV output path")->required();
    plot->add_option("--samples", a.samples, "grid points, or hull samples for threshold-sweep (default 2000)");
    plot->callback([&] {
        run = [&] {
            RunReport r = cmd_plot_data(a.kind, a.k, a.out, a.samples.value_or(2000));
            a.out.clear();  // the CSV went there; the report goes to stdout only
            return r;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        const RunReport report = run();
        return emit(report, a.out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCheckFailure;
    }
}
