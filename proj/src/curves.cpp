#include "orbitope/curves.hpp"

#include <numbers>
#include <stdexcept>

namespace orbitope {

namespace {

void require_order(int k) {
    if (k < 1) throw std::invalid_argument("curve order k must be at least 1");
}

}  // namespace

CurvePoint cosine_curve(int k, const Angle& theta) {
    require_order(k);
    Eigen::VectorXd x(k);
    for (int l = 0; l < k; ++l) x[l] = cos_at(2 * l + 1, theta);
    return {std::move(x), theta, {CurveKind::Cosine, k}};
}

Eigen::VectorXd cosine_curve_derivative(int k, const Angle& theta) {
    require_order(k);
    Eigen::VectorXd v(k);
    for (int l = 0; l < k; ++l) {
        const int m = 2 * l + 1;
        v[l] = -m * sin_at(m, theta);
    }
    return v;
}

CurvePoint symmetric_curve(int k, const Angle& theta) {
    require_order(k);
    Eigen::VectorXd x(2 * k);
    for (int l = 0; l < k; ++l) {
        x[l] = cos_at(2 * l + 1, theta);
        x[k + l] = sin_at(2 * l + 1, theta);
    }
    return {std::move(x), theta, {CurveKind::Symmetric, k}};
}

Eigen::MatrixXd sample_cosine_curve(int k, int n) {
    require_order(k);
    if (n < 2) throw std::invalid_argument("need at least two samples");
    Eigen::MatrixXd pts(k, n);
    for (int i = 0; i < n; ++i) {
        const Angle t = Angle::radians(std::numbers::pi * i / (n - 1));
        pts.col(i) = cosine_curve(k, t).coords;
    }
    return pts;
}

Eigen::MatrixXd sample_symmetric_curve(int k, int n) {
    require_order(k);
    if (n < 1) throw std::invalid_argument("need at least one sample");
    Eigen::MatrixXd pts(2 * k, n);
    for (int i = 0; i < n; ++i) {
        const Angle t = Angle::radians(2.0 * std::numbers::pi * i / n);
        pts.col(i) = symmetric_curve(k, t).coords;
    }
    return pts;
}

}  // namespace orbitope
