#include "orbitope/edge_oracle.hpp"

#include <cmath>
#include <numbers>

#include "orbitope/curves.hpp"
#include "orbitope/moment_geometry.hpp"

namespace orbitope {

namespace {

constexpr double kPi = std::numbers::pi;

void require_k(int k) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
}

// Interior on the far side of the transition, Boundary on the near side.
bool interior_at(int k, double theta, int num_samples, int& probes) {
    ++probes;
    const HullVerdict v = midpoint_interiority(k, Angle::radians(theta), num_samples);
    if (v.status == HullStatus::Outside) {
        throw NumericalError("curve point reported outside its own sample hull");
    }
    return v.status == HullStatus::Interior;
}

// Rotating SM_2k by tau turns coordinate pair (x_l, y_l) by (2l-1) tau.
Eigen::VectorXd rotate_coeffs(const Eigen::VectorXd& c, double tau) {
    const Eigen::Index k = c.size() / 2;
    Eigen::VectorXd out(c.size());
    for (Eigen::Index l = 0; l < k; ++l) {
        const double a = static_cast<double>(2 * l + 1) * tau;
        const double cs = std::cos(a), sn = std::sin(a);
        out[l] = cs * c[l] - sn * c[k + l];
        out[k + l] = sn * c[l] + cs * c[k + l];
    }
    return out;
}

}  // namespace

double edge_threshold(int k) {
    require_k(k);
    return 2.0 * kPi * (k - 1) / (2 * k - 1);
}

HullVerdict midpoint_interiority(int k, const Angle& theta, int num_samples, double delta) {
    require_k(k);
    if (num_samples < 500) throw std::invalid_argument("midpoint probe needs at least 500 samples");
    Eigen::MatrixXd pts(k, num_samples + 1);
    pts.leftCols(num_samples) = sample_cosine_curve(k, num_samples);
    pts.col(num_samples) = cosine_curve(k, theta).coords;
    return interiority_probe(pts.col(num_samples), pts, delta);
}

ThresholdEstimate estimate_threshold(int k, int num_samples, double resolution) {
    require_k(k);
    if (num_samples < 1000) throw std::invalid_argument("threshold estimate needs at least 1000 samples");
    if (!(resolution >= 1e-4)) throw std::invalid_argument("resolution must be at least 1e-4");

    ThresholdEstimate est;
    est.k = k;
    est.samples_used = num_samples;

    const double half_pi = kPi / 2;
    const double expected = edge_threshold(k) / 2;
    double lo = expected - 0.15;
    double hi = std::min(expected + 0.15, half_pi);

    if (interior_at(k, lo, num_samples, est.probes) || !interior_at(k, hi, num_samples, est.probes)) {
        est.scanned = true;
        constexpr int kCells = 64;
        std::vector<bool> inside(kCells + 1);
        for (int i = 1; i <= kCells; ++i) inside[i] = interior_at(k, half_pi * i / kCells, num_samples, est.probes);
        inside[0] = false;  // C_k(0) is a vertex
        int transitions = 0;
        int where = -1;
        for (int i = 0; i < kCells; ++i) {
            if (inside[i] != inside[i + 1]) {
                ++transitions;
                where = i;
            }
        }
        if (transitions == 0) throw ThresholdError("no boundary-to-interior transition on (0, pi/2]");
        if (transitions > 1 || inside[where]) {
            throw ThresholdError("interiority changes more than once on (0, pi/2]; sampling too coarse");
        }
        lo = half_pi * where / kCells;
        hi = half_pi * (where + 1) / kCells;
    }

    while (2 * (hi - lo) >= resolution) {
        const double mid = 0.5 * (lo + hi);
        if (interior_at(k, mid, num_samples, est.probes)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    est.lo = 2 * lo;
    est.hi = 2 * hi;
    est.psi_hat = lo + hi;
    return est;
}

const char* to_string(EdgeKind e) {
    switch (e) {
    case EdgeKind::Edge:
        return "edge";
    case EdgeKind::NotEdge:
        return "not-edge";
    case EdgeKind::NearThreshold:
        return "near-threshold";
    case EdgeKind::Contradiction:
        return "contradiction";
    }
    return "unknown";
}

EdgeVerdict edge_verdict(int k, const Angle& alpha, const Angle& beta, int num_samples) {
    require_k(k);
    if (alpha == beta) throw std::invalid_argument("edge endpoints must differ");

    EdgeVerdict out;
    out.arc = arc_length(alpha, beta);
    out.threshold = edge_threshold(k);
    double forward = static_cast<double>(std::fmod(beta.value_ld() - alpha.value_ld() + 2 * std::numbers::pi_v<long double>,
                                                   2 * std::numbers::pi_v<long double>));
    out.rotation = forward <= kPi ? alpha.value() + 0.5 * out.arc : beta.value() + 0.5 * out.arc;
    if (std::fabs(out.arc - out.threshold) < kGuardBand) return out;

    const double half = 0.5 * out.arc;
    const bool predicted_edge = out.arc < out.threshold;

    const EdgeSupport support = edge_support(k, Angle::radians(-half), Angle::radians(half), num_samples);
    out.lp_margin = support.margin;
    const HullVerdict probe = midpoint_interiority(k, Angle::radians(half), num_samples);

    const bool lp_edge = support.margin > kEdgeMarginThreshold;
    const bool interior = probe.status == HullStatus::Interior;

    if (lp_edge && !interior && predicted_edge) {
        out.verdict = EdgeKind::Edge;
        AffineFunctional f = support.functional;
        f.coeffs = rotate_coeffs(f.coeffs, out.rotation);
        out.certificate = EdgeCertificate{std::move(f), support.margin};
    } else if (!lp_edge && interior && !predicted_edge) {
        out.verdict = EdgeKind::NotEdge;
        out.interiority = probe;
    } else {
        out.verdict = EdgeKind::Contradiction;
        out.diagnostic = std::string("lp margin ") + std::to_string(support.margin) + ", midpoint " +
                         to_string(probe.status) + ", arc " + (predicted_edge ? "below" : "above") + " threshold";
    }
    return out;
}

const char* to_string(ClauseStatus c) {
    switch (c) {
    case ClauseStatus::Pass:
        return "pass";
    case ClauseStatus::Fail:
        return "fail";
    case ClauseStatus::TrivialPass:
        return "trivial-pass";
    }
    return "unknown";
}

bool LemmaFaceReport::passed() const {
    return face != ClauseStatus::Fail && tangent != ClauseStatus::Fail && sign != ClauseStatus::Fail;
}

LemmaFaceReport lemma_face_check(int k) {
    require_k(k);
    LemmaFaceReport r;
    r.k = k;
    const bool odd = k % 2 == 1;
    r.t0 = Angle::rational(odd ? k - 1 : k, 2 * k - 1);
    r.direction_sign = odd ? 1 : -1;
    r.probe = r.t0.shifted(r.direction_sign * r.epsilon);

    r.face_residual = std::fabs(cos_at(2 * k - 1, r.t0) - 1.0);
    r.face = r.face_residual < 1e-12 ? ClauseStatus::Pass : ClauseStatus::Fail;

    if (k == 2) {
        // P_2 is a segment; the tangent cone at an endpoint is a ray.
        r.tangent = ClauseStatus::TrivialPass;
    } else {
        const Eigen::VectorXd vertex = cosine_curve(k - 1, r.t0).coords;
        const Eigen::VectorXd direction = r.direction_sign * cosine_curve_derivative(k - 1, r.t0);
        r.cone = tangent_cone_interior(vertex, direction, simplex_p(k).vertex_coords());
        r.tangent = r.cone->interior && r.cone->max_step > kMinTangentStep ? ClauseStatus::Pass : ClauseStatus::Fail;
    }

    bool all = true;
    for (int j = 0; j < k; ++j) {
        const double v = facet_poly(k, j, r.probe);
        const std::optional<int> expected = window_sign(k, j, r.probe.value());
        const bool ok = expected.has_value() && std::fabs(v) > kSignDeadZone && (v > 0 ? 1 : -1) == *expected;
        r.signs.push_back({j, v, expected.value_or(0), ok});
        all = all && ok;
    }
    r.sign = all ? ClauseStatus::Pass : ClauseStatus::Fail;
    return r;
}

}  // namespace orbitope
