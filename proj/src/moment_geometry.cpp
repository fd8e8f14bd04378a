#include "orbitope/moment_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace orbitope {

namespace {

void require_k(int k) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
}

void require_index(int k, int j) {
    require_k(k);
    if (j < 0 || j >= k) throw std::out_of_range("facet index j must lie in 0..k-1");
}

void sort_by_value(std::vector<Angle>& angles) {
    std::sort(angles.begin(), angles.end(),
              [](const Angle& a, const Angle& b) { return a.value_ld() < b.value_ld(); });
}

int strict_sign(double v) { return (v > 0) - (v < 0); }

}  // namespace

std::vector<Angle> theta_nodes(int k) {
    require_k(k);
    std::vector<Angle> nodes;
    nodes.reserve(static_cast<std::size_t>(k));
    nodes.push_back(Angle::rational(1, 2));
    for (int j = 1; j < k; ++j) nodes.push_back(Angle::rational(2 * j, 2 * k - 1));
    return nodes;
}

AffineFunctional facet_functional(int k, int j) {
    require_index(k, j);
    AffineFunctional h{Eigen::VectorXd(k - 1), 0.0};
    if (j == 0) {
        h.constant = 0.5;
        h.coeffs.setOnes();
        return h;
    }
    const Angle theta_j = Angle::rational(2 * j, 2 * k - 1);
    for (int l = 0; l < k - 1; ++l) h.coeffs[l] = cos_at(2 * l + 1, theta_j) - 1.0;
    return h;
}

double facet_poly(int k, int j, const Angle& theta) {
    return facet_functional(k, j)(cosine_curve(k - 1, theta).coords);
}

std::vector<Angle> facet_poly_roots(int k, int j) {
    require_index(k, j);
    std::vector<Angle> roots;
    if (j == 0) {
        for (int i = 1; i < k; ++i) roots.push_back(Angle::rational(2 * i, 2 * k - 1));
        for (int i = 1; i <= k - 2; ++i) roots.push_back(Angle::rational(2 * i - 1, 2 * k - 3));
    } else {
        roots.push_back(Angle::rational(1, 2));
        for (int i = 1; i <= 2 * k - 2; ++i) {
            if (i == 2 * j || i == 2 * k - 1 - 2 * j) continue;
            roots.push_back(Angle::rational(i, 2 * k - 1));
        }
    }
    sort_by_value(roots);
    return roots;
}

std::vector<Eigen::VectorXd> SimplexSpec::vertex_coords() const {
    std::vector<Eigen::VectorXd> out;
    out.reserve(vertices.size());
    for (const auto& v : vertices) out.push_back(v.coords);
    return out;
}

SimplexSpec simplex_p(int k) {
    require_k(k);
    SimplexSpec s{k, SimplexKind::P, {}, {}};
    s.vertices.push_back(cosine_curve(k - 1, Angle::rational(0, 1)));
    const auto nodes = theta_nodes(k);
    for (int j = 1; j < k; ++j) s.vertices.push_back(cosine_curve(k - 1, nodes[j]));
    return s;
}

SimplexSpec simplex_q(int k) {
    require_k(k);
    SimplexSpec s{k, SimplexKind::Q, {}, {}};
    for (const auto& node : theta_nodes(k)) s.vertices.push_back(cosine_curve(k - 1, node));
    for (int j = 0; j < k; ++j) s.facets.push_back(facet_functional(k, j));
    return s;
}

bool FacetDescriptionReport::passed() const {
    return std::all_of(pairs.begin(), pairs.end(), [](const FacetPairCheck& c) { return c.passed; });
}

FacetDescriptionReport verify_facet_description(int k, double tol) {
    require_k(k);
    FacetDescriptionReport report{k, tol, {}, 0.0, std::numeric_limits<double>::infinity()};
    const auto nodes = theta_nodes(k);
    for (int j = 0; j < k; ++j) {
        const AffineFunctional h = facet_functional(k, j);
        for (int i = 0; i < k; ++i) {
            const double v = h(cosine_curve(k - 1, nodes[i]).coords);
            bool ok;
            if (i == j) {
                ok = v > tol;
                report.min_diagonal = std::min(report.min_diagonal, v);
            } else {
                ok = std::fabs(v) < tol;
                report.max_offdiagonal = std::max(report.max_offdiagonal, std::fabs(v));
            }
            report.pairs.push_back({j, i, v, ok});
        }
    }
    return report;
}

ConvexCombination origin_witness(int k) {
    require_k(k);
    const SimplexSpec p = simplex_p(k);
    ConvexCombination w;
    w.points = p.vertex_coords();
    w.weights = Eigen::VectorXd::Constant(k, 2.0 / (2 * k - 1));
    w.weights[0] = 1.0 / (2 * k - 1);
    return w;
}

int sign_profile(int k, int j, const Angle& theta) {
    const double v = facet_poly(k, j, theta);
    if (std::fabs(v) < kSignDeadZone) return 0;
    return v > 0 ? 1 : -1;
}

std::optional<int> window_sign(int k, int j, double theta) {
    require_index(k, j);
    const double pi = std::numbers::pi;
    const double left = (k - 1) * pi / (2 * k - 1);
    const double right = k * pi / (2 * k - 1);
    if (theta > left && theta < pi / 2) {
        if (j == 0) return 1;
        return (k - 1) % 2 == 0 ? 1 : -1;
    }
    if (theta > pi / 2 && theta < right) {
        if (j == 0) return 1;
        return k % 2 == 0 ? 1 : -1;
    }
    return std::nullopt;
}

double trig_identity_residual(TrigIdentity which, int k, int first, int second) {
    require_k(k);
    const std::int64_t q = 2 * k - 1;
    auto node_cos = [q](std::int64_t l, std::int64_t j) {
        return cos_at(1, Angle::rational((2 * l - 1) * 2 * j, q));
    };
    double sum = 0.0;
    switch (which) {
    case TrigIdentity::Sum2:
        if (first < 1 || first > k - 1) throw std::out_of_range("Sum2 index l must lie in 1..k-1");
        for (int j = 1; j <= k - 1; ++j) sum += node_cos(first, j);
        break;
    case TrigIdentity::Sum:
        if (first < 1 || first > 2 * k - 2) throw std::out_of_range("Sum index j must lie in 1..2k-2");
        for (int l = 1; l <= k - 1; ++l) sum += node_cos(l, first);
        break;
    case TrigIdentity::ProdSum:
        if (first < 0 || first > k - 1 || second < 0 || second > k - 1 || first == second) {
            throw std::out_of_range("ProdSum indices must be distinct and lie in 0..k-1");
        }
        for (int l = 1; l <= k - 1; ++l) sum += node_cos(l, first) * node_cos(l, second);
        break;
    }
    return std::fabs(sum + 0.5);
}

std::vector<TrigIdentityInstance> trig_identity_table(int k) {
    require_k(k);
    std::vector<TrigIdentityInstance> out;
    for (int l = 1; l <= k - 1; ++l) {
        out.push_back({TrigIdentity::Sum2, l, 0, trig_identity_residual(TrigIdentity::Sum2, k, l)});
    }
    for (int j = 1; j <= 2 * k - 2; ++j) {
        out.push_back({TrigIdentity::Sum, j, 0, trig_identity_residual(TrigIdentity::Sum, k, j)});
    }
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            out.push_back({TrigIdentity::ProdSum, i, j, trig_identity_residual(TrigIdentity::ProdSum, k, i, j)});
        }
    }
    return out;
}

std::vector<double> find_roots_bisection(const std::function<double(double)>& f, double lo, double hi,
                                         int grid, double xtol) {
    if (grid < 1 || !(hi > lo)) throw std::invalid_argument("bad root search interval");
    std::vector<double> roots;
    auto at = [&](int i) { return lo + (hi - lo) * i / grid; };
    double x0 = at(0);
    double f0 = f(x0);
    for (int i = 0; i < grid; ++i) {
        const double x1 = at(i + 1);
        const double f1 = f(x1);
        if (f0 == 0.0) {
            roots.push_back(x0);
        } else if (f1 != 0.0 && strict_sign(f0) != strict_sign(f1)) {
            double a = x0, b = x1, fa = f0;
            while (b - a > xtol) {
                const double m = 0.5 * (a + b);
                const double fm = f(m);
                if (fm == 0.0) {
                    a = b = m;
                    break;
                }
                if (strict_sign(fm) == strict_sign(fa)) {
                    a = m;
                    fa = fm;
                } else {
                    b = m;
                }
            }
            roots.push_back(0.5 * (a + b));
        }
        x0 = x1;
        f0 = f1;
    }
    if (f0 == 0.0) roots.push_back(x0);
    return roots;
}

bool RootCrossCheck::passed() const {
    return static_cast<int>(closed_form.size()) == 2 * k - 3 && bisection.size() == closed_form.size() &&
           max_deviation < kStructuralZeroTol && max_abs_value < 1e-9 && min_abs_derivative > kDerivativeTol &&
           sign_changes;
}

RootCrossCheck cross_check_roots(int k, int j) {
    RootCrossCheck out{k, j, facet_poly_roots(k, j), {}, 0.0, 0.0, std::numeric_limits<double>::infinity(), true};
    auto f = [k, j](double t) { return facet_poly(k, j, Angle::radians(t)); };
    out.bisection = find_roots_bisection(f, 0.0, std::numbers::pi, 10000, 1e-12);

    if (out.bisection.size() != out.closed_form.size()) {
        out.max_deviation = std::numeric_limits<double>::infinity();
    } else {
        for (std::size_t i = 0; i < out.bisection.size(); ++i) {
            out.max_deviation =
                std::max(out.max_deviation, std::fabs(out.bisection[i] - out.closed_form[i].value()));
        }
    }

    constexpr double h = 1e-6;
    for (const Angle& r : out.closed_form) {
        out.max_abs_value = std::max(out.max_abs_value, std::fabs(facet_poly(k, j, r)));
        const double left = facet_poly(k, j, r.shifted(-h));
        const double right = facet_poly(k, j, r.shifted(h));
        out.min_abs_derivative = std::min(out.min_abs_derivative, std::fabs((right - left) / (2 * h)));
        if (strict_sign(left) == strict_sign(right) || left == 0.0) out.sign_changes = false;
    }
    return out;
}

}  // namespace orbitope
