#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "orbitope/curves.hpp"

using namespace orbitope;
using std::numbers::pi;

namespace {

Eigen::VectorXd vec(std::initializer_list<double> v) {
    Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
    Eigen::Index i = 0;
    for (double x : v) out[i++] = x;
    return out;
}

bool near(const Eigen::VectorXd& a, const Eigen::VectorXd& b, double tol) {
    return a.size() == b.size() && (a - b).lpNorm<Eigen::Infinity>() < tol;
}

}  // namespace

TEST_CASE("cosine curve examples") {
    const CurvePoint a = cosine_curve(2, Angle::rational(1, 2));
    CHECK(a.coords == vec({0, 0}));
    CHECK(a.curve == CurveId{CurveKind::Cosine, 2});
    CHECK(a.curve.dimension() == 2);
    CHECK(cosine_curve(3, Angle::rational(0, 1)).coords == vec({1, 1, 1}));
    CHECK(near(cosine_curve(2, Angle::rational(2, 5)).coords, vec({0.309017, -0.809017}), 1e-6));
    CHECK(cosine_curve(1, Angle::radians(0.3)).coords.size() == 1);
    CHECK_THROWS_AS(cosine_curve(0, Angle()), std::invalid_argument);
}

TEST_CASE("cosine curve derivative examples") {
    CHECK(cosine_curve_derivative(2, Angle::rational(0, 1)) == vec({0, 0}));
    CHECK(cosine_curve_derivative(2, Angle::rational(1, 2)) == vec({-1, 3}));
    const double h = 1e-4;
    const auto f = [](double t) { return cosine_curve(3, Angle::radians(t)).coords; };
    const double t = 2 * pi / 5;
    CHECK((oracle::central_difference(f, t, h) - cosine_curve_derivative(3, Angle::rational(2, 5))).norm() < 1e-6);
}

TEST_CASE("symmetric curve examples") {
    const CurvePoint a = symmetric_curve(2, Angle::rational(0, 1));
    CHECK(a.coords == vec({1, 1, 0, 0}));
    CHECK(a.curve.dimension() == 4);
    CHECK(symmetric_curve(2, Angle::rational(1, 2)).coords == vec({0, 0, 1, -1}));
}

TEST_CASE("property: midpoint of a symmetric chord is (C_k(t), 0)") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> td(0.0, 2 * pi);
    double worst = 0.0;
    for (int k = 1; k <= 20; ++k) {
        for (int i = 0; i < 200; ++i) {
            const Angle t = Angle::radians(td(rng));
            const Eigen::VectorXd mid = 0.5 * symmetric_curve(k, t.negated()).coords + 0.5 * symmetric_curve(k, t).coords;
            Eigen::VectorXd expected = Eigen::VectorXd::Zero(2 * k);
            expected.head(k) = cosine_curve(k, t).coords;
            worst = std::max(worst, (mid - expected).lpNorm<Eigen::Infinity>());
        }
        for (int q = 1; q <= 12; ++q) {
            for (int p = 0; p < 2 * q; ++p) {
                const Angle t = Angle::rational(p, q);
                const Eigen::VectorXd mid =
                    0.5 * symmetric_curve(k, t.negated()).coords + 0.5 * symmetric_curve(k, t).coords;
                worst = std::max(worst, (mid.head(k) - cosine_curve(k, t).coords).lpNorm<Eigen::Infinity>());
                worst = std::max(worst, mid.tail(k).lpNorm<Eigen::Infinity>());
            }
        }
    }
    CHECK(worst < 1e-14);
}

TEST_CASE("property: curve coordinates lie in [-1, 1]") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> td(-50.0, 50.0);
    for (int i = 0; i < 2000; ++i) {
        const int k = 1 + i % 20;
        const Angle t = Angle::radians(td(rng));
        CHECK(cosine_curve(k, t).coords.lpNorm<Eigen::Infinity>() <= 1.0);
        CHECK(symmetric_curve(k, t).coords.lpNorm<Eigen::Infinity>() <= 1.0);
    }
}

TEST_CASE("property: derivative error is O(h^2)") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> td(0.0, 2 * pi);
    for (int k = 2; k <= 12; ++k) {
        for (double h : {1e-3, 1e-4}) {
            for (int i = 0; i < 50; ++i) {
                const double t = td(rng);
                const auto f = [k](double s) { return cosine_curve(k, Angle::radians(s)).coords; };
                const double err =
                    (oracle::central_difference(f, t, h) - cosine_curve_derivative(k, Angle::radians(t)))
                        .lpNorm<Eigen::Infinity>();
                CHECK(err < 10 * h * h * std::pow(2 * k - 1, 3));
            }
        }
    }
}

TEST_CASE("cosine curve retraces itself and is odd about pi/2") {
    std::mt19937_64 rng(10);
    std::uniform_real_distribution<double> td(0.0, pi);
    for (int i = 0; i < 500; ++i) {
        const int k = 1 + i % 10;
        const double t = td(rng);
        const Eigen::VectorXd c = cosine_curve(k, Angle::radians(t)).coords;
        CHECK((cosine_curve(k, Angle::radians(2 * pi - t)).coords - c).lpNorm<Eigen::Infinity>() < 1e-13);
        CHECK((cosine_curve(k, Angle::radians(pi - t)).coords + c).lpNorm<Eigen::Infinity>() < 1e-13);
    }
}

TEST_CASE("sampling grids") {
    const Eigen::MatrixXd c = sample_cosine_curve(3, 5);
    REQUIRE(c.rows() == 3);
    REQUIRE(c.cols() == 5);
    CHECK(c.col(0) == cosine_curve(3, Angle::rational(0, 1)).coords);
    CHECK((c.col(4) - cosine_curve(3, Angle::rational(1, 1)).coords).norm() < 1e-15);
    CHECK((c.col(2) - cosine_curve(3, Angle::rational(1, 2)).coords).norm() < 1e-15);

    const Eigen::MatrixXd s = sample_symmetric_curve(2, 8);
    REQUIRE(s.rows() == 4);
    REQUIRE(s.cols() == 8);
    CHECK((s.col(2) - symmetric_curve(2, Angle::rational(1, 2)).coords).norm() < 1e-15);
}
