#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the library except for plain data types.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

#include <Eigen/Core>

namespace oracle {

// cos(d * p * pi / q) evaluated directly in long double, no reduction.
inline long double cos_direct(long long d, long long p, long long q) {
    return std::cos(static_cast<long double>(d) * p * std::numbers::pi_v<long double> / q);
}

// Point-in-convex-hull in the plane by angular sweep: q is in the hull iff
// it coincides with a point or the directions p_i - q leave no angular gap
// wider than pi. `slack` widens the allowed gap slightly.
inline bool in_hull_2d(const Eigen::Vector2d& q, const std::vector<Eigen::Vector2d>& pts, double slack = 1e-9) {
    std::vector<double> ang;
    for (const auto& p : pts) {
        const Eigen::Vector2d d = p - q;
        if (d.norm() < 1e-12) return true;
        ang.push_back(std::atan2(d.y(), d.x()));
    }
    std::sort(ang.begin(), ang.end());
    double gap = ang.front() + 2 * std::numbers::pi - ang.back();
    for (std::size_t i = 1; i < ang.size(); ++i) gap = std::max(gap, ang[i] - ang[i - 1]);
    return gap <= std::numbers::pi + slack;
}

// Characteristic polynomial det(x I - A) by Faddeev-LeVerrier; returns
// c_0..c_n with c_n = 1. Hermitian input gives real coefficients.
inline std::vector<double> char_poly(const Eigen::MatrixXcd& a) {
    const Eigen::Index n = a.rows();
    std::vector<std::complex<double>> c(static_cast<std::size_t>(n + 1));
    c[static_cast<std::size_t>(n)] = 1.0;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
    for (Eigen::Index k = 1; k <= n; ++k) {
        m = a * m + c[static_cast<std::size_t>(n - k + 1)] * id;
        c[static_cast<std::size_t>(n - k)] = -(a * m).trace() / static_cast<double>(k);
    }
    std::vector<double> out;
    for (const auto& v : c) out.push_back(v.real());
    return out;
}

// Smallest root of a polynomial with only real roots: Newton from the left
// of every root increases monotonically onto the smallest one.
inline double smallest_real_root(const std::vector<double>& c) {
    double bound = 0.0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) bound = std::max(bound, std::fabs(c[i]));
    double x = -(1.0 + bound);
    for (int it = 0; it < 10000; ++it) {
        double p = 0.0, dp = 0.0;
        for (std::size_t i = c.size(); i-- > 0;) {
            dp = dp * x + p;
            p = p * x + c[i];
        }
        if (dp == 0.0) break;
        const double step = p / dp;
        x -= step;
        if (std::fabs(step) < 1e-15 * std::max(1.0, std::fabs(x))) break;
    }
    return x;
}

inline Eigen::VectorXd central_difference(const std::function<Eigen::VectorXd(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2 * h);
}

// Count of strict sign changes of f on a uniform grid over [lo, hi].
inline int grid_sign_changes(const std::function<double(double)>& f, double lo, double hi, int n) {
    int changes = 0, last = 0;
    for (int i = 0; i <= n; ++i) {
        const double v = f(lo + (hi - lo) * i / n);
        const int s = (v > 0) - (v < 0);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

struct CurveMinima {
    double away = INFINITY;  // over t farther than radius from both a and b
    double near = INFINITY;  // over t within radius of a or b
};

// Minimum of coeffs . SM_2k(t) + constant on an n-point grid, with SM_2k
// evaluated directly.
inline CurveMinima functional_minima(const Eigen::VectorXd& coeffs, double constant, double a, double b,
                                     double radius, int n) {
    const double two_pi = 2 * std::numbers::pi;
    const auto k = coeffs.size() / 2;
    auto arc = [two_pi](double s, double t) {
        const double d = std::fmod(std::fabs(s - t), two_pi);
        return std::min(d, two_pi - d);
    };
    CurveMinima out;
    for (int i = 0; i < n; ++i) {
        const double t = two_pi * i / n;
        double v = constant;
        for (Eigen::Index l = 0; l < k; ++l) {
            v += coeffs[l] * std::cos((2 * l + 1) * t) + coeffs[k + l] * std::sin((2 * l + 1) * t);
        }
        double& slot = arc(t, a) <= radius || arc(t, b) <= radius ? out.near : out.away;
        slot = std::min(slot, v);
    }
    return out;
}

}  // namespace oracle
