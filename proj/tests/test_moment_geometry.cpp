#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "orbitope/hull.hpp"
#include "orbitope/moment_geometry.hpp"

using namespace orbitope;
using std::numbers::pi;

namespace {

// h_{j,k}(C_{k-1}(t)) straight from the definitions, in long double.
long double facet_poly_direct(int k, int j, long double t) {
    const long double pl = std::numbers::pi_v<long double>;
    long double s = j == 0 ? 0.5L : 0.0L;
    const long double tj = 2.0L * j * pl / (2 * k - 1);
    for (int l = 1; l <= k - 1; ++l) {
        const long double c = std::cos((2 * l - 1) * t);
        s += j == 0 ? c : (std::cos((2 * l - 1) * tj) - 1.0L) * c;
    }
    return s;
}

std::vector<Angle> angles(std::initializer_list<std::pair<int, int>> pq) {
    std::vector<Angle> out;
    for (auto [p, q] : pq) out.push_back(Angle::rational(p, q));
    return out;
}

}  // namespace

TEST_CASE("nodes") {
    CHECK(theta_nodes(3) == angles({{1, 2}, {2, 5}, {4, 5}}));
    CHECK(theta_nodes(2) == angles({{1, 2}, {2, 3}}));
    CHECK_THROWS_AS(theta_nodes(1), std::invalid_argument);
}

TEST_CASE("facet functionals") {
    const AffineFunctional h0 = facet_functional(3, 0);
    CHECK(h0.constant == 0.5);
    CHECK(h0.coeffs == Eigen::Vector2d(1, 1));
    const AffineFunctional h1 = facet_functional(3, 1);
    CHECK(h1.constant == 0.0);
    CHECK(h1.coeffs[0] == doctest::Approx(std::cos(2 * pi / 5) - 1));
    CHECK(h1.coeffs[1] == doctest::Approx(std::cos(6 * pi / 5) - 1));
    CHECK_THROWS_AS(facet_functional(3, 3), std::out_of_range);
    CHECK_THROWS_AS(facet_functional(3, -1), std::out_of_range);
    CHECK_THROWS_AS(facet_functional(1, 0), std::invalid_argument);
}

TEST_CASE("facet polynomial agrees with a direct evaluation") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> td(0.0, pi);
    for (int k = 2; k <= 15; ++k) {
        for (int j = 0; j < k; ++j) {
            for (int i = 0; i < 40; ++i) {
                const double t = td(rng);
                CHECK(std::fabs(facet_poly(k, j, Angle::radians(t)) - static_cast<double>(facet_poly_direct(k, j, t))) <
                      1e-12);
            }
        }
    }
}

TEST_CASE("root sets at k = 3") {
    CHECK(facet_poly_roots(3, 0) == angles({{1, 3}, {2, 5}, {4, 5}}));
    CHECK(facet_poly_roots(3, 1) == angles({{1, 5}, {1, 2}, {4, 5}}));
    CHECK(facet_poly_roots(3, 2) == angles({{2, 5}, {1, 2}, {3, 5}}));
    CHECK(facet_poly_roots(2, 0) == angles({{2, 3}}));
    CHECK(facet_poly_roots(2, 1) == angles({{1, 2}}));
}

TEST_CASE("property: closed-form roots vanish and are all the sign changes") {
    for (int k = 2; k <= 20; ++k) {
        for (int j = 0; j < k; ++j) {
            const auto roots = facet_poly_roots(k, j);
            REQUIRE(static_cast<int>(roots.size()) == 2 * k - 3);
            for (std::size_t i = 0; i < roots.size(); ++i) {
                CHECK(std::fabs(static_cast<double>(facet_poly_direct(k, j, roots[i].value_ld()))) < 1e-12);
                if (i > 0) CHECK(roots[i - 1].value() < roots[i].value());
            }
            const auto f = [k, j](double t) { return static_cast<double>(facet_poly_direct(k, j, t)); };
            // Grid avoids landing on rational multiples of pi.
            CHECK(oracle::grid_sign_changes(f, 1e-7, pi - 1e-7, 20011) == 2 * k - 3);
        }
    }
}

TEST_CASE("root cross-check against bisection") {
    for (int k = 2; k <= 12; ++k) {
        for (int j = 0; j < k; ++j) {
            const RootCrossCheck c = cross_check_roots(k, j);
            CHECK(c.passed());
            CHECK(c.max_deviation < 1e-10);
        }
    }
}

TEST_CASE("bisection root finder on a known function") {
    const auto r = find_roots_bisection([](double x) { return std::sin(x); }, 0.5, 10.0, 1000, 1e-13);
    REQUIRE(r.size() == 3);
    CHECK(r[0] == doctest::Approx(pi).epsilon(1e-12));
    CHECK(r[1] == doctest::Approx(2 * pi).epsilon(1e-12));
    CHECK(r[2] == doctest::Approx(3 * pi).epsilon(1e-12));
    CHECK(find_roots_bisection([](double x) { return x * x + 1; }, -1, 1, 100, 1e-12).empty());
    CHECK_THROWS_AS(find_roots_bisection([](double x) { return x; }, 1, 0, 10, 1e-12), std::invalid_argument);
}

TEST_CASE("facet description: vanishing pattern, checked independently") {
    for (int k = 2; k <= 20; ++k) {
        const FacetDescriptionReport rep = verify_facet_description(k, kStructuralZeroTol);
        CHECK(rep.passed());
        CHECK(rep.pairs.size() == static_cast<std::size_t>(k * k));
        const auto nodes = theta_nodes(k);
        for (int j = 0; j < k; ++j) {
            for (int i = 0; i < k; ++i) {
                const double v = static_cast<double>(facet_poly_direct(k, j, nodes[i].value_ld()));
                if (i == j) {
                    CHECK(v > 1e-10);
                } else {
                    CHECK(std::fabs(v) < 1e-10);
                }
            }
        }
    }
}

TEST_CASE("origin witness") {
    const ConvexCombination w = origin_witness(5);
    REQUIRE(w.weights.size() == 5);
    CHECK(w.weights[0] == doctest::Approx(1.0 / 9));
    for (int i = 1; i < 5; ++i) CHECK(w.weights[i] == doctest::Approx(2.0 / 9));
    for (int k = 2; k <= 20; ++k) {
        const ConvexCombination c = origin_witness(k);
        CHECK(c.reconstruction_error(Eigen::VectorXd::Zero(k - 1)) < kReconstructionTol);
        CHECK(c.weight_defect() < 1e-15);
    }
}

TEST_CASE("Q_k sits inside P_k by LP") {
    for (int k = 2; k <= 10; ++k) {
        const auto p = simplex_p(k).vertex_coords();
        for (const auto& v : simplex_q(k).vertex_coords()) CHECK(in_hull(v, p).member());
    }
}

TEST_CASE("simplices") {
    const SimplexSpec p = simplex_p(3);
    REQUIRE(p.vertices.size() == 3);
    CHECK(p.vertices[0].source_angle == Angle::rational(0, 1));
    CHECK(p.vertices[1].source_angle == Angle::rational(2, 5));
    CHECK(p.facets.empty());
    const SimplexSpec q = simplex_q(3);
    CHECK(q.vertices[0].source_angle == Angle::rational(1, 2));
    CHECK(q.facets.size() == 3);
}

TEST_CASE("property: sign windows around pi/2") {
    std::mt19937_64 rng(4);
    for (int k = 2; k <= 14; ++k) {
        const double left = (k - 1) * pi / (2 * k - 1);
        const double right = k * pi / (2 * k - 1);
        std::uniform_real_distribution<double> w1(left, pi / 2), w2(pi / 2, right);
        for (int i = 0; i < 30; ++i) {
            const double a = w1(rng), b = w2(rng);
            for (int j = 0; j < k; ++j) {
                const double fa = static_cast<double>(facet_poly_direct(k, j, a));
                const double fb = static_cast<double>(facet_poly_direct(k, j, b));
                REQUIRE(window_sign(k, j, a).has_value());
                REQUIRE(window_sign(k, j, b).has_value());
                CHECK((fa > 0 ? 1 : -1) == *window_sign(k, j, a));
                CHECK((fb > 0 ? 1 : -1) == *window_sign(k, j, b));
                CHECK(sign_profile(k, j, Angle::radians(a)) == *window_sign(k, j, a));
            }
        }
        CHECK_FALSE(window_sign(k, 1, 0.1).has_value());
        CHECK_FALSE(window_sign(k, 1, pi / 2).has_value());
    }
}

TEST_CASE("property: reflection t -> pi - t") {
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> td(0.0, pi);
    for (int k = 2; k <= 12; ++k) {
        for (int i = 0; i < 40; ++i) {
            const double t = td(rng);
            const Angle a = Angle::radians(t), b = Angle::radians(pi - t);
            CHECK(facet_poly(k, 0, b) == doctest::Approx(1.0 - facet_poly(k, 0, a)).epsilon(1e-12));
            for (int j = 1; j < k; ++j) CHECK(std::fabs(facet_poly(k, j, b) + facet_poly(k, j, a)) < 1e-12);
        }
    }
}

TEST_CASE("trigonometric identities") {
    const auto table3 = trig_identity_table(3);
    int counts[3] = {0, 0, 0};
    for (const auto& r : table3) ++counts[static_cast<int>(r.which)];
    CHECK(counts[0] == 2);
    CHECK(counts[1] == 4);
    CHECK(counts[2] == 6);

    for (int k = 2; k <= 50; ++k) {
        const auto table = trig_identity_table(k);
        CHECK(table.size() == static_cast<std::size_t>((k - 1) + (2 * k - 2) + k * (k - 1)));
        for (const auto& r : table) REQUIRE(r.residual < 1e-12);
    }
    CHECK_THROWS_AS(trig_identity_residual(TrigIdentity::Sum2, 3, 3), std::out_of_range);
    CHECK_THROWS_AS(trig_identity_residual(TrigIdentity::Sum, 3, 0), std::out_of_range);
    CHECK_THROWS_AS(trig_identity_residual(TrigIdentity::ProdSum, 3, 1, 1), std::out_of_range);
    CHECK_THROWS_AS(trig_identity_table(1), std::invalid_argument);
}

TEST_CASE("trigonometric identities against long double sums") {
    const long double pl = std::numbers::pi_v<long double>;
    for (int k = 2; k <= 30; ++k) {
        const long double q = 2 * k - 1;
        auto c = [&](int l, int j) { return std::cos((2 * l - 1) * 2 * j * pl / q); };
        for (int l = 1; l <= k - 1; ++l) {
            long double s = 0;
            for (int j = 1; j <= k - 1; ++j) s += c(l, j);
            CHECK(std::fabs(static_cast<double>(s + 0.5L)) < 1e-15);
        }
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) {
                if (i == j) continue;
                long double s = 0;
                for (int l = 1; l <= k - 1; ++l) s += c(l, i) * c(l, j);
                CHECK(std::fabs(static_cast<double>(s + 0.5L)) < 1e-15);
            }
        }
    }
}
