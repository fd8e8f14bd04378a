#include "orbitope/hull.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "orbitope/curves.hpp"

namespace orbitope {

const char* to_string(HullStatus s) {
    switch (s) {
    case HullStatus::Member:
        return "member";
    case HullStatus::Interior:
        return "interior";
    case HullStatus::Boundary:
        return "boundary";
    case HullStatus::Outside:
        return "outside";
    }
    return "unknown";
}

namespace {

LPCertificate membership_lp(const Eigen::Ref<const Eigen::VectorXd>& query,
                            const Eigen::Ref<const Eigen::MatrixXd>& points, double tol) {
    if (points.cols() < 1) throw std::invalid_argument("hull needs at least one point");
    if (points.rows() != query.size()) throw std::invalid_argument("point dimension mismatch");
    const Eigen::Index d = points.rows();
    const Eigen::Index n = points.cols();

    LinearProgram lp(Sense::Minimize, Eigen::VectorXd::Zero(n));
    for (Eigen::Index j = 0; j < n; ++j) lp.set_nonnegative(j);
    for (Eigen::Index r = 0; r < d; ++r) lp.add_row(points.row(r), Relation::Equal, query[r]);
    lp.add_row(Eigen::RowVectorXd::Ones(n), Relation::Equal, 1.0);

    LPOptions opt;
    opt.feasibility_tol = tol;
    return lp_solve(lp, opt);
}

bool is_member(const Eigen::Ref<const Eigen::VectorXd>& query, const Eigen::Ref<const Eigen::MatrixXd>& points,
               double tol) {
    return membership_lp(query, points, tol).status == LPStatus::Optimal;
}

Eigen::MatrixXd stack_columns(const std::vector<Eigen::VectorXd>& points) {
    if (points.empty()) throw std::invalid_argument("hull needs at least one point");
    Eigen::MatrixXd m(points.front().size(), static_cast<Eigen::Index>(points.size()));
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].size() != m.rows()) throw std::invalid_argument("point dimension mismatch");
        m.col(static_cast<Eigen::Index>(i)) = points[i];
    }
    return m;
}

void require_full_dimension(const Eigen::Ref<const Eigen::MatrixXd>& points) {
    const Eigen::VectorXd mean = points.rowwise().mean();
    const Eigen::MatrixXd centered = points.colwise() - mean;
    const Eigen::MatrixXd cov = centered * centered.transpose() / static_cast<double>(points.cols());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cov, Eigen::EigenvaluesOnly);
    const double top = es.eigenvalues().maxCoeff();
    if (!(top > 0) || es.eigenvalues().minCoeff() <= 1e-12 * top) {
        throw std::invalid_argument("point set is not full-dimensional");
    }
}

}  // namespace

HullVerdict in_hull(const Eigen::Ref<const Eigen::VectorXd>& query, const Eigen::Ref<const Eigen::MatrixXd>& points,
                    double tol) {
    const LPCertificate cert = membership_lp(query, points, tol);
    const Eigen::Index d = points.rows();
    HullVerdict v;

    if (cert.status == LPStatus::Optimal) {
        ConvexCombination cc;
        cc.weights = cert.primal;
        cc.points.reserve(static_cast<std::size_t>(points.cols()));
        for (Eigen::Index j = 0; j < points.cols(); ++j) cc.points.emplace_back(points.col(j));
        v.status = HullStatus::Member;
        v.combination = std::move(cc);
        return v;
    }

    // Farkas ray y = (g, g0): g.p + g0 <= 0 on the points, g.q + g0 > 0.
    Eigen::VectorXd g = cert.dual.head(d);
    const double scale = g.lpNorm<Eigen::Infinity>();
    if (scale > 0) g /= scale;
    const double support = (g.transpose() * points).maxCoeff();
    v.status = HullStatus::Outside;
    v.separator = Separator{AffineFunctional{g, -support}, g.dot(query) - support};
    return v;
}

HullVerdict in_hull(const Eigen::Ref<const Eigen::VectorXd>& query, const std::vector<Eigen::VectorXd>& points,
                    double tol) {
    return in_hull(query, stack_columns(points), tol);
}

HullVerdict interiority_probe(const Eigen::Ref<const Eigen::VectorXd>& query,
                              const Eigen::Ref<const Eigen::MatrixXd>& points, double delta, double tol) {
    if (!(delta > 0)) throw std::invalid_argument("probe delta must be positive");
    if (points.rows() != query.size()) throw std::invalid_argument("point dimension mismatch");
    require_full_dimension(points);

    HullVerdict v = in_hull(query, points, tol);
    if (!v.member()) return v;

    v.status = HullStatus::Interior;
    Eigen::VectorXd probe = query;
    for (Eigen::Index i = 0; i < query.size() && v.status == HullStatus::Interior; ++i) {
        for (const double s : {1.0, -1.0}) {
            probe[i] = query[i] + s * delta;
            if (!is_member(probe, points, tol)) {
                v.status = HullStatus::Boundary;
                break;
            }
        }
        probe[i] = query[i];
    }
    return v;
}

TangentConeResult tangent_cone_interior(const Eigen::Ref<const Eigen::VectorXd>& vertex,
                                        const Eigen::Ref<const Eigen::VectorXd>& direction,
                                        const std::vector<Eigen::VectorXd>& facet_vertices) {
    const Eigen::MatrixXd pts = stack_columns(facet_vertices);
    if (pts.rows() != vertex.size() || direction.size() != vertex.size()) {
        throw std::invalid_argument("dimension mismatch");
    }
    if (!(direction.norm() > 1e-12)) throw std::invalid_argument("direction must be nonzero");
    const Eigen::Index d = pts.rows();
    const Eigen::Index n = pts.cols();
    if (!((pts.colwise() - vertex).colwise().lpNorm<Eigen::Infinity>().minCoeff() <= 1e-9)) {
        throw std::invalid_argument("vertex is not one of the facet vertices");
    }

    // max eps  s.t.  sum lambda_i v_i - eps * direction = vertex, sum lambda = 1
    Eigen::VectorXd c = Eigen::VectorXd::Zero(n + 1);
    c[n] = 1.0;
    LinearProgram lp(Sense::Maximize, c);
    for (Eigen::Index j = 0; j <= n; ++j) lp.set_nonnegative(j);
    for (Eigen::Index r = 0; r < d; ++r) {
        Eigen::RowVectorXd row(n + 1);
        row << pts.row(r), -direction[r];
        lp.add_row(row, Relation::Equal, vertex[r]);
    }
    Eigen::RowVectorXd ones = Eigen::RowVectorXd::Ones(n + 1);
    ones[n] = 0.0;
    lp.add_row(ones, Relation::Equal, 1.0);

    TangentConeResult out;
    out.step_lp = lp_solve(lp);
    if (out.step_lp.status != LPStatus::Optimal) return out;
    out.max_step = out.step_lp.objective_value;
    if (!(out.max_step > 1e-9)) return out;

    // Probe the half step inside the affine hull of the facet.
    const Eigen::VectorXd centroid = pts.rowwise().mean();
    const Eigen::MatrixXd centered = pts.colwise() - centroid;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(centered, Eigen::ComputeThinU);
    const Eigen::VectorXd& sv = svd.singularValues();
    Eigen::Index rank = 0;
    while (rank < sv.size() && sv[rank] > 1e-10 * sv[0]) ++rank;
    if (rank == 0) return out;
    const Eigen::MatrixXd basis = svd.matrixU().leftCols(rank);

    const double half = 0.5 * out.max_step;
    const Eigen::VectorXd mid = vertex + half * direction;
    const Eigen::MatrixXd local_pts = basis.transpose() * centered;
    const Eigen::VectorXd local_mid = basis.transpose() * (mid - centroid);
    const double delta = 1e-6 * half * direction.norm();

    out.midpoint_probe = interiority_probe(local_mid, local_pts, delta);
    out.interior = out.midpoint_probe->status == HullStatus::Interior;
    return out;
}

EdgeSupport edge_support(int k, const Angle& alpha, const Angle& beta, int num_samples) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (num_samples < 100) throw std::invalid_argument("edge LP needs at least 100 samples");
    if (alpha == beta) throw std::invalid_argument("edge endpoints must differ");

    const double spacing = 2.0 * std::numbers::pi / num_samples;
    const double exclusion = 10.0 * spacing;
    const Eigen::VectorXd a = symmetric_curve(k, alpha).coords;
    const Eigen::VectorXd b = symmetric_curve(k, beta).coords;
    const Eigen::Index n = 2 * k;

    std::vector<Eigen::VectorXd> kept;
    for (int i = 0; i < num_samples; ++i) {
        const Angle t = Angle::radians(spacing * i);
        if (arc_length(t, alpha) > exclusion && arc_length(t, beta) > exclusion) {
            kept.push_back(symmetric_curve(k, t).coords);
        }
    }
    const auto m = static_cast<Eigen::Index>(kept.size());
    if (m == 0) throw std::invalid_argument("no samples outside the exclusion arcs");

    // Dual of the margin LP. Columns: mu_alpha, mu_beta (free), lambda (m),
    // u (n), w (n); rows: one per coordinate of h, then h0, then the margin.
    const Eigen::Index cols = 2 + m + 2 * n;
    Eigen::VectorXd cost = Eigen::VectorXd::Zero(cols);
    cost.tail(2 * n).setOnes();
    LinearProgram lp(Sense::Minimize, cost);
    for (Eigen::Index j = 2; j < cols; ++j) lp.set_nonnegative(j);

    for (Eigen::Index r = 0; r < n; ++r) {
        Eigen::RowVectorXd row = Eigen::RowVectorXd::Zero(cols);
        row[0] = a[r];
        row[1] = b[r];
        for (Eigen::Index i = 0; i < m; ++i) row[2 + i] = kept[static_cast<std::size_t>(i)][r];
        row[2 + m + r] = 1.0;
        row[2 + m + n + r] = -1.0;
        lp.add_row(row, Relation::Equal, 0.0);
    }
    Eigen::RowVectorXd offset_row = Eigen::RowVectorXd::Zero(cols);
    offset_row.head(2 + m).setConstant(-1.0);
    lp.add_row(offset_row, Relation::Equal, 0.0);
    Eigen::RowVectorXd margin_row = Eigen::RowVectorXd::Zero(cols);
    margin_row.segment(2, m).setOnes();
    lp.add_row(margin_row, Relation::Equal, 1.0);

    EdgeSupport out;
    out.samples_used = static_cast<int>(m);
    out.exclusion_radius = exclusion;
    out.lp = lp_solve(lp);
    if (out.lp.status != LPStatus::Optimal) throw NumericalError("edge LP did not reach an optimum");

    // The row multipliers are (h, h0, s) of the primal margin problem.
    const Eigen::VectorXd h = out.lp.dual.head(n);
    const double h0 = out.lp.dual[n];
    out.functional = AffineFunctional{-h, h0};
    out.margin = out.lp.objective_value;
    return out;
}

std::optional<EdgeCertificate> exposed_edge_certificate(int k, const Angle& alpha, const Angle& beta,
                                                        int num_samples) {
    EdgeSupport s = edge_support(k, alpha, beta, num_samples);
    if (!(s.margin > kEdgeMarginThreshold)) return std::nullopt;
    return EdgeCertificate{std::move(s.functional), s.margin};
}

}  // namespace orbitope
