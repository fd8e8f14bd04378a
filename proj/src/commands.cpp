#include "orbitope/commands.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "orbitope/curves.hpp"
#include "orbitope/edge_oracle.hpp"
#include "orbitope/hull.hpp"
#include "orbitope/moment_geometry.hpp"
#include "orbitope/spectrahedron.hpp"

namespace orbitope {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(double v) { return format_number(v); }

std::string pass_fail(bool ok) { return ok ? "pass" : "fail"; }

const char* identity_name(TrigIdentity t) {
    switch (t) {
    case TrigIdentity::Sum2:
        return "sum2";
    case TrigIdentity::Sum:
        return "sum";
    case TrigIdentity::ProdSum:
        return "prodsum";
    }
    return "unknown";
}

int sign_of(double v) { return (v > 0) - (v < 0); }

// Sign changes along a sampled sequence, skipping exact zeros.
int count_sign_changes(const std::vector<double>& values) {
    int changes = 0;
    int last = 0;
    for (double v : values) {
        const int s = sign_of(v);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

RunReport finished(RunReport r) {
    r.finish();
    return r;
}

void require_k(int k) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
}

void write_csv_row(std::ostream& os, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
    os << '\n';
}

std::vector<std::string> coordinate_header(const char* lead, int dim) {
    std::vector<std::string> h{lead};
    for (int l = 1; l <= dim; ++l) h.push_back("x" + std::to_string(l));
    return h;
}

std::vector<std::string> with_coords(std::vector<std::string> lead, const Eigen::VectorXd& x) {
    for (Eigen::Index i = 0; i < x.size(); ++i) lead.push_back(fmt(x[i]));
    return lead;
}

double grid_angle(int i, int n) { return kPi * i / (n - 1); }

}  // namespace

RunReport cmd_identities(int k, double tol) {
    RunReport r("identities");
    r.param("k", k);
    r.param("tol", tol);
    const auto rows = trig_identity_table(k);
    auto& t = r.table("residuals", {"identity", "first", "second", "residual"});
    double worst = 0.0;
    int count[3] = {0, 0, 0};
    for (const auto& row : rows) {
        t.add_row({identity_name(row.which), std::to_string(row.first), std::to_string(row.second), fmt(row.residual)});
        worst = std::max(worst, row.residual);
        ++count[static_cast<int>(row.which)];
    }
    r.outcome("sum2_instances", count[static_cast<int>(TrigIdentity::Sum2)]);
    r.outcome("sum_instances", count[static_cast<int>(TrigIdentity::Sum)]);
    r.outcome("prodsum_instances", count[static_cast<int>(TrigIdentity::ProdSum)]);
    r.outcome("max_residual", worst);
    r.check("residuals_below_tol", worst <= tol);
    return finished(std::move(r));
}

RunReport cmd_facets(int k, double tol) {
    RunReport r("facets");
    r.param("k", k);
    r.param("tol", tol);
    const FacetDescriptionReport rep = verify_facet_description(k, tol);
    auto& t = r.table("facet_values", {"j", "i", "value", "expected", "result"});
    for (const auto& p : rep.pairs) {
        t.add_row({std::to_string(p.j), std::to_string(p.i), fmt(p.value), p.i == p.j ? "positive" : "zero",
                   pass_fail(p.passed)});
    }
    r.outcome("max_offdiagonal", rep.max_offdiagonal);
    r.outcome("min_diagonal", rep.min_diagonal);
    r.check("vanishing_pattern", rep.passed());
    return finished(std::move(r));
}

RunReport cmd_roots(int k, double tol) {
    RunReport r("roots");
    r.param("k", k);
    r.param("tol", tol);
    require_k(k);
    auto& t = r.table("roots", {"j", "closed_form", "radians", "bisection", "value", "derivative"});
    double worst_dev = 0.0, worst_value = 0.0, min_deriv = INFINITY;
    bool counts = true, matched = true, crossings = true;
    for (int j = 0; j < k; ++j) {
        const RootCrossCheck c = cross_check_roots(k, j);
        counts = counts && static_cast<int>(c.closed_form.size()) == 2 * k - 3;
        matched = matched && c.bisection.size() == c.closed_form.size();
        crossings = crossings && c.sign_changes;
        worst_dev = std::max(worst_dev, c.max_deviation);
        worst_value = std::max(worst_value, c.max_abs_value);
        min_deriv = std::min(min_deriv, c.min_abs_derivative);
        constexpr double h = 1e-6;
        for (std::size_t i = 0; i < c.closed_form.size(); ++i) {
            const Angle& a = c.closed_form[i];
            const double deriv = (facet_poly(k, j, a.shifted(h)) - facet_poly(k, j, a.shifted(-h))) / (2 * h);
            t.add_row({std::to_string(j), a.to_string(), fmt(a.value()),
                       i < c.bisection.size() ? fmt(c.bisection[i]) : "nan", fmt(facet_poly(k, j, a)), fmt(deriv)});
        }
    }
    r.outcome("roots_per_function", 2 * k - 3);
    r.outcome("max_deviation", worst_dev);
    r.outcome("max_abs_value", worst_value);
    r.outcome("min_abs_derivative", min_deriv);
    r.check("root_counts", counts);
    r.check("bisection_count_matches", matched);
    r.check("bisection_agrees", worst_dev < tol);
    r.check("roots_vanish", worst_value < tol);
    r.check("simple_roots", min_deriv > kDerivativeTol && crossings);
    return finished(std::move(r));
}

RunReport cmd_witness(int k, double tol) {
    RunReport r("witness");
    r.param("k", k);
    r.param("tol", tol);
    const ConvexCombination w = origin_witness(k);
    const SimplexSpec p = simplex_p(k);
    const SimplexSpec q = simplex_q(k);
    const Eigen::VectorXd origin = Eigen::VectorXd::Zero(k - 1);

    auto& t = r.table("weights", {"vertex", "angle", "weight"});
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        t.add_row({std::to_string(i), p.vertices[i].source_angle.to_string(),
                   fmt(w.weights[static_cast<Eigen::Index>(i)])});
    }
    const double err = w.reconstruction_error(origin);
    r.outcome("reconstruction_error", err);
    r.outcome("weight_defect", w.weight_defect());
    r.check("reconstructs_origin", err < tol);
    r.check("weights_convex", w.weight_defect() < tol);

    const HullVerdict lp_origin = in_hull(origin, p.vertex_coords());
    r.outcome("lp_origin", to_string(lp_origin.status));
    r.check("lp_origin_member", lp_origin.member());

    auto& qt = r.table("q_in_p", {"vertex", "angle", "lp_status"});
    bool all = true;
    for (std::size_t i = 0; i < q.vertices.size(); ++i) {
        const HullVerdict v = in_hull(q.vertices[i].coords, p.vertex_coords());
        qt.add_row({std::to_string(i), q.vertices[i].source_angle.to_string(), to_string(v.status)});
        all = all && v.member();
    }
    r.check("q_contained_in_p", all);
    return finished(std::move(r));
}

RunReport cmd_tangent_cone(int k) {
    RunReport r("tangent-cone");
    r.param("k", k);
    const LemmaFaceReport rep = lemma_face_check(k);
    r.outcome("t0", rep.t0.to_string());
    r.outcome("t0_radians", rep.t0.value());
    r.outcome("direction_sign", rep.direction_sign);
    r.outcome("epsilon", rep.epsilon);
    r.outcome("probe_angle", rep.probe.value());
    r.outcome("face_residual", rep.face_residual);
    r.outcome("face_clause", to_string(rep.face));
    if (rep.cone) {
        r.outcome("max_step", rep.cone->max_step);
        r.outcome("midpoint_status",
                  rep.cone->midpoint_probe ? to_string(rep.cone->midpoint_probe->status) : "not-run");
    }
    r.outcome("tangent_clause", to_string(rep.tangent));
    r.outcome("sign_clause", to_string(rep.sign));
    auto& t = r.table("signs", {"j", "value", "expected", "result"});
    for (const auto& s : rep.signs) {
        t.add_row({std::to_string(s.j), fmt(s.value), std::to_string(s.expected), pass_fail(s.passed)});
    }
    r.check("on_face", rep.face != ClauseStatus::Fail);
    r.check("tangent_cone_interior", rep.tangent != ClauseStatus::Fail);
    r.check("predicted_signs", rep.sign != ClauseStatus::Fail);
    return finished(std::move(r));
}

RunReport cmd_threshold(int k, int samples, double resolution, double tol) {
    RunReport r("threshold");
    r.param("k", k);
    r.param("samples", samples);
    r.param("resolution", resolution);
    r.param("tol", tol);
    const double expected = edge_threshold(k);
    r.outcome("expected", expected);
    try {
        const ThresholdEstimate e = estimate_threshold(k, samples, resolution);
        r.outcome("psi_hat", e.psi_hat);
        r.outcome("bracket_lo", e.lo);
        r.outcome("bracket_hi", e.hi);
        r.outcome("deviation", std::fabs(e.psi_hat - expected));
        r.outcome("probes", e.probes);
        r.outcome("scanned", e.scanned ? "yes" : "no");
        r.check("transition_found", true);
        r.check("bracket_width", e.hi - e.lo < resolution);
        r.check("matches_threshold", std::fabs(e.psi_hat - expected) < tol);
    } catch (const ThresholdError& ex) {
        r.outcome("error", ex.what());
        r.check("transition_found", false);
    } catch (const NumericalError& ex) {
        r.outcome("error", ex.what());
        r.check("numerics", false);
    }
    return finished(std::move(r));
}

RunReport cmd_edge(int k, const Angle& alpha, const Angle& beta, int samples) {
    RunReport r("edge");
    r.param("k", k);
    r.param("alpha", alpha.to_string());
    r.param("beta", beta.to_string());
    r.param("samples", samples);
    require_k(k);
    if (samples < 500) throw std::invalid_argument("edge needs at least 500 samples");
    try {
        const EdgeVerdict v = edge_verdict(k, alpha, beta, samples);
        r.outcome("verdict", to_string(v.verdict));
        r.outcome("arc", v.arc);
        r.outcome("threshold", v.threshold);
        r.outcome("rotation", v.rotation);
        if (v.verdict != EdgeKind::NearThreshold) r.outcome("lp_margin", v.lp_margin);
        if (v.certificate) {
            const auto& f = v.certificate->functional;
            const double at_alpha = f(symmetric_curve(k, alpha).coords);
            const double at_beta = f(symmetric_curve(k, beta).coords);
            r.outcome("certificate_margin", v.certificate->margin);
            r.outcome("certificate_constant", f.constant);
            r.outcome("certificate_at_alpha", at_alpha);
            r.outcome("certificate_at_beta", at_beta);
            auto& t = r.table("certificate", {"coordinate", "coefficient"});
            for (Eigen::Index i = 0; i < f.coeffs.size(); ++i) {
                const std::string name = (i < k ? "cos" : "sin") + std::to_string(2 * (i % k) + 1);
                t.add_row({name, fmt(f.coeffs[i])});
            }
            r.check("certificate_tight", std::fabs(at_alpha) < 1e-8 && std::fabs(at_beta) < 1e-8);
        }
        if (v.interiority) r.outcome("midpoint_status", to_string(v.interiority->status));
        if (!v.diagnostic.empty()) r.outcome("diagnostic", v.diagnostic);
        r.check("evidence_consistent", v.verdict != EdgeKind::Contradiction);
    } catch (const NumericalError& ex) {
        r.outcome("error", ex.what());
        r.check("numerics", false);
    }
    return finished(std::move(r));
}

namespace {

void membership_body(RunReport& r, int k, const Eigen::VectorXd& point, int iters, double tol) {
    require_k(k);
    if (point.size() != 2 * k) throw std::invalid_argument("point must have 2k coordinates");
    if (iters < 1) throw std::invalid_argument("iteration budget must be positive");
    if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
    const MembershipVerdict v = b2k_membership(point, iters, tol);
    r.outcome("verdict", to_string(v.verdict));
    r.outcome("residual", v.residual);
    r.outcome("iterations", v.iterations_used);
    r.outcome("min_eigenvalue", v.min_eigenvalue);
    r.outcome("rank", v.rank);
    auto& t = r.table("free_entries", {"diagonal", "real", "imag"});
    for (std::size_t l = 0; l < v.free_entries.size(); ++l) {
        t.add_row({std::to_string(2 * l + 2), fmt(v.free_entries[l].real()), fmt(v.free_entries[l].imag())});
    }
    r.check("decided", v.verdict != Membership::Inconclusive);
    if (v.verdict == Membership::Member) r.check("psd", v.min_eigenvalue >= -1e-8);
}

}  // namespace

RunReport cmd_membership(int k, const Eigen::VectorXd& point, int iters, double tol) {
    RunReport r("membership");
    r.param("k", k);
    std::string pt;
    for (Eigen::Index i = 0; i < point.size(); ++i) pt += (i ? "," : "") + fmt(point[i]);
    r.param("point", pt);
    r.param("iters", iters);
    r.param("tol", tol);
    membership_body(r, k, point, iters, tol);
    return finished(std::move(r));
}

RunReport cmd_membership(int k, const Angle& theta, int iters, double tol) {
    RunReport r("membership");
    r.param("k", k);
    r.param("theta", theta.to_string());
    r.param("iters", iters);
    r.param("tol", tol);
    require_k(k);
    membership_body(r, k, symmetric_curve(k, theta).coords, iters, tol);
    if (r.outcome_value("verdict") == to_string(Membership::Member)) {
        r.check("rank_one", r.outcome_value("rank") == "1");
    }
    return finished(std::move(r));
}

RunReport cmd_plot_data(std::string_view kind, int k, const std::string& out_path, int samples) {
    RunReport r("plot-data");
    r.param("kind", std::string(kind));
    r.param("k", k);
    r.param("out", out_path);
    r.param("samples", samples);
    require_k(k);
    if (kind != "curve" && kind != "f-graphs" && kind != "facet-projection" && kind != "threshold-sweep") {
        throw std::invalid_argument("unknown plot kind: " + std::string(kind));
    }
    if (samples < 2) throw std::invalid_argument("need at least 2 samples");
    if (kind == "threshold-sweep" && samples < 500) throw std::invalid_argument("sweep needs at least 500 samples");

    std::ofstream os(out_path);
    if (!r.check("opened", static_cast<bool>(os))) {
        r.outcome("error", "cannot open " + out_path);
        return finished(std::move(r));
    }
    int rows = 0;

    if (kind == "curve") {
        write_csv_row(os, coordinate_header("theta", k));
        for (int i = 0; i < samples; ++i, ++rows) {
            const Angle a = Angle::radians(grid_angle(i, samples));
            write_csv_row(os, with_coords({fmt(grid_angle(i, samples))}, cosine_curve(k, a).coords));
        }
    } else if (kind == "f-graphs") {
        std::vector<std::string> header{"theta"};
        for (int j = 0; j < k; ++j) header.push_back("f_" + std::to_string(j));
        write_csv_row(os, header);
        std::vector<std::vector<double>> columns(static_cast<std::size_t>(k));
        for (int i = 0; i < samples; ++i, ++rows) {
            const double th = grid_angle(i, samples);
            std::vector<std::string> row{fmt(th)};
            for (int j = 0; j < k; ++j) {
                const double v = facet_poly(k, j, Angle::radians(th));
                columns[static_cast<std::size_t>(j)].push_back(v);
                row.push_back(fmt(v));
            }
            write_csv_row(os, row);
        }
        bool ok = true;
        for (int j = 0; j < k; ++j) {
            const int changes = count_sign_changes(columns[static_cast<std::size_t>(j)]);
            r.outcome("sign_changes_f_" + std::to_string(j), changes);
            ok = ok && changes == static_cast<int>(facet_poly_roots(k, j).size());
        }
        r.check("crossings_match_roots", ok);
    } else if (kind == "facet-projection") {
        os << "# curve\n";
        write_csv_row(os, coordinate_header("theta", k - 1));
        for (int i = 0; i < samples; ++i, ++rows) {
            const Angle a = Angle::radians(grid_angle(i, samples));
            write_csv_row(os, with_coords({fmt(grid_angle(i, samples))}, cosine_curve(k - 1, a).coords));
        }
        for (const SimplexSpec& s : {simplex_p(k), simplex_q(k)}) {
            os << "\n# " << (s.which == SimplexKind::P ? "P" : "Q") << "\n";
            std::vector<std::string> header{"vertex", "node", "theta"};
            for (int l = 1; l < k; ++l) header.push_back("x" + std::to_string(l));
            write_csv_row(os, header);
            for (std::size_t i = 0; i < s.vertices.size(); ++i, ++rows) {
                const auto& v = s.vertices[i];
                write_csv_row(os, with_coords({std::to_string(i), v.source_angle.to_string(), fmt(v.source_angle.value())},
                                              v.coords));
            }
        }
    } else {
        const double expected = edge_threshold(k) / 2;
        const double lo = expected - 0.3;
        const double hi = std::min(expected + 0.3, kPi / 2);
        constexpr int kPoints = 121;
        write_csv_row(os, {"theta", "arc", "status", "interior", "predicted_edge"});
        int transitions = 0;
        int last = -1;
        for (int i = 0; i < kPoints; ++i, ++rows) {
            const double th = lo + (hi - lo) * i / (kPoints - 1);
            const HullVerdict v = midpoint_interiority(k, Angle::radians(th), samples);
            const int inside = v.status == HullStatus::Interior ? 1 : 0;
            if (last >= 0 && inside != last) ++transitions;
            last = inside;
            write_csv_row(os, {fmt(th), fmt(2 * th), to_string(v.status), std::to_string(inside),
                               std::to_string(2 * th < 2 * expected ? 1 : 0)});
        }
        r.outcome("transitions", transitions);
        r.check("single_transition", transitions == 1);
    }
    os.flush();
    r.outcome("rows", rows);
    r.check("written", static_cast<bool>(os));
    return finished(std::move(r));
}

Eigen::VectorXd parse_point(std::string_view text) {
    std::vector<double> vals;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        std::string_view cell = text.substr(pos, comma - pos);
        while (!cell.empty() && cell.front() == ' ') cell.remove_prefix(1);
        while (!cell.empty() && cell.back() == ' ') cell.remove_suffix(1);
        double v = 0.0;
        const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
        if (cell.empty() || res.ec != std::errc() || res.ptr != cell.data() + cell.size() || !std::isfinite(v)) {
            throw std::invalid_argument("bad coordinate in point: '" + std::string(cell) + "'");
        }
        vals.push_back(v);
        pos = comma + 1;
    }
    return Eigen::Map<Eigen::VectorXd>(vals.data(), static_cast<Eigen::Index>(vals.size()));
}

}  // namespace orbitope
