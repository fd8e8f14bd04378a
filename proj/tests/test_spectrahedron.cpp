#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "orbitope/curves.hpp"
#include "orbitope/hull.hpp"
#include "orbitope/spectrahedron.hpp"

using namespace orbitope;
using std::numbers::pi;

namespace {

Complex cis(double t) { return std::polar(1.0, t); }

HermitianToeplitz random_toeplitz(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Complex> d(static_cast<std::size_t>(n - 1));
    for (auto& z : d) z = Complex(u(rng), u(rng));
    return HermitianToeplitz(d);
}

// Random point of R^2k: a convex combination of two or three curve points,
// scaled to land on either side of the boundary.
Eigen::VectorXd random_point(std::mt19937_64& rng, int k) {
    std::uniform_real_distribution<double> ang(0.0, 2 * pi), w(0.0, 1.0), s(0.6, 1.25);
    const int m = 2 + static_cast<int>(rng() % 2);
    Eigen::VectorXd p = Eigen::VectorXd::Zero(2 * k);
    double total = 0.0;
    for (int i = 0; i < m; ++i) {
        const double wi = w(rng) + 0.05;
        p += wi * symmetric_curve(k, Angle::radians(ang(rng))).coords;
        total += wi;
    }
    return s(rng) * p / total;
}

}  // namespace

TEST_CASE("assembly places z_d on the d-th superdiagonal") {
    const double t = 0.7;
    const HermitianToeplitz m = toeplitz_assemble({cis(t), cis(3 * t)}, {cis(2 * t)});
    Eigen::VectorXcd v(4);
    v << cis(3 * t), cis(2 * t), cis(t), 1.0;
    CHECK((m.matrix() - v * v.adjoint()).norm() < 1e-14);
    CHECK(std::fabs(min_eigenvalue(m)) < 1e-10);
    CHECK(numerical_rank(m.matrix()) == 1);

    const HermitianToeplitz id = toeplitz_assemble({0.0, 0.0}, {0.0});
    CHECK(id.matrix() == Eigen::MatrixXcd::Identity(4, 4));
    CHECK(min_eigenvalue(id) == doctest::Approx(1.0));

    CHECK_NOTHROW(toeplitz_assemble({0.0, 0.0, 0.0}, {0.0, 0.0}));
    CHECK_THROWS_AS(toeplitz_assemble({0.0, 0.0, 0.0}, {0.0, 0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(toeplitz_assemble({0.0}, {}), std::invalid_argument);
}

TEST_CASE("property: assembled matrices are exactly Hermitian with unit diagonal") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 200; ++t) {
        const HermitianToeplitz m = random_toeplitz(rng, 2 + t % 9);
        const Eigen::MatrixXcd a = m.matrix();
        CHECK(a == a.adjoint());
        for (Eigen::Index i = 0; i < a.rows(); ++i) CHECK(a(i, i) == Complex(1.0));
        for (Eigen::Index i = 0; i + 1 < a.rows(); ++i) CHECK(a(i, i + 1) == m.z(1));
    }
}

TEST_CASE("property: curve points lift to rank-one PSD matrices at every k") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> ang(0.0, 2 * pi);
    for (int k = 2; k <= 8; ++k) {
        for (int i = 0; i < 20; ++i) {
            const double t = ang(rng);
            std::vector<Complex> even;
            for (int l = 1; l < k; ++l) even.push_back(cis(2 * l * t));
            const HermitianToeplitz m =
                toeplitz_assemble(odd_entries_from_point(symmetric_curve(k, Angle::radians(t)).coords), even);
            CHECK(std::fabs(min_eigenvalue(m)) < 1e-10);
            CHECK(numerical_rank(m.matrix()) == 1);
        }
    }
}

TEST_CASE("property: eigensolver agrees with characteristic polynomial roots") {
    std::mt19937_64 rng(43);
    double worst = 0.0;
    for (int n : {4, 6}) {
        for (int t = 0; t < 1000; ++t) {
            const HermitianToeplitz m = random_toeplitz(rng, n);
            const double oracle_min = oracle::smallest_real_root(oracle::char_poly(m.matrix()));
            worst = std::max(worst, std::fabs(min_eigenvalue(m) - oracle_min));
        }
    }
    CHECK(worst < 1e-8);
}

TEST_CASE("property: PSD projection is idempotent") {
    std::mt19937_64 rng(44);
    for (int t = 0; t < 200; ++t) {
        const Eigen::MatrixXcd a = random_toeplitz(rng, 4 + 2 * (t % 3)).matrix();
        const Eigen::MatrixXcd p = project_psd(a);
        CHECK((project_psd(p) - p).norm() < 1e-10);
        CHECK(min_eigenvalue(p) > -1e-12);
        CHECK((p - p.adjoint()).norm() == 0.0);
    }
}

TEST_CASE("scaled curve point cannot be completed") {
    // Best z_2 over a grid of the unit square; |z_2| <= 1 is forced by the
    // 2x2 minors anyway.
    const double t = 1.0;
    const std::vector<Complex> odd = odd_entries_from_point(1.1 * symmetric_curve(2, Angle::radians(t)).coords);
    double best = -INFINITY;
    for (int i = 0; i <= 100; ++i) {
        for (int j = 0; j <= 100; ++j) {
            const Complex z2(-1.0 + 0.02 * i, -1.0 + 0.02 * j);
            best = std::max(best, min_eigenvalue(toeplitz_assemble(odd, {z2})));
        }
    }
    CHECK(best < 0.0);
    const MembershipVerdict v = b2k_membership(1.1 * symmetric_curve(2, Angle::radians(t)).coords);
    CHECK(v.verdict == Membership::NonMemberLikely);
    CHECK(v.min_eigenvalue < 0.0);
}

TEST_CASE("membership examples") {
    const double t = 1.0;
    const MembershipVerdict curve = b2k_membership(symmetric_curve(2, Angle::radians(t)).coords);
    REQUIRE(curve.verdict == Membership::Member);
    REQUIRE(curve.free_entries.size() == 1);
    CHECK(std::abs(curve.free_entries[0] - cis(2 * t)) < 1e-4);
    CHECK(curve.rank == 1);
    CHECK(curve.min_eigenvalue >= -1e-8);

    const MembershipVerdict origin = b2k_membership(Eigen::VectorXd::Zero(4));
    REQUIRE(origin.verdict == Membership::Member);
    CHECK(origin.free_entries[0] == Complex(0.0));
    CHECK(origin.min_eigenvalue == doctest::Approx(1.0));
    CHECK(origin.iterations_used == 1);

    const double half = pi / 3 - 0.1;  // chord shorter than 2pi/3
    const Eigen::VectorXd mid = 0.5 * (symmetric_curve(2, Angle::radians(-half)).coords +
                                       symmetric_curve(2, Angle::radians(half)).coords);
    const MembershipVerdict m = b2k_membership(mid);
    REQUIRE(m.verdict == Membership::Member);
    CHECK(std::fabs(m.min_eigenvalue) < 1e-8);

    CHECK_THROWS_AS(b2k_membership(Eigen::VectorXd::Zero(3)), std::invalid_argument);
    CHECK(b2k_membership(mid, 3).verdict == Membership::Inconclusive);
}

TEST_CASE("property: Member verdicts are PSD") {
    std::mt19937_64 rng(45);
    for (int t = 0; t < 200; ++t) {
        const int k = 2 + t % 3;
        const MembershipVerdict v = b2k_membership(random_point(rng, k));
        if (v.verdict == Membership::Member) CHECK(v.min_eigenvalue >= -1e-8);
    }
}

TEST_CASE("property: membership agrees with the sampled hull away from the boundary") {
    std::mt19937_64 rng(46);
    for (int k : {2, 3}) {
        const Eigen::MatrixXd samples = sample_symmetric_curve(k, 4000);
        int compared = 0;
        for (int t = 0; t < 60; ++t) {
            const Eigen::VectorXd p = random_point(rng, k);
            const MembershipVerdict v = b2k_membership(p);
            const bool lp_member = in_hull(p, samples).member();
            if (v.verdict == Membership::Inconclusive) continue;
            if ((v.verdict == Membership::Member) == lp_member) {
                ++compared;
                continue;
            }
            // Disagreement: only allowed within 1e-3 of the boundary.
            const Eigen::VectorXd step = 1e-3 * p.normalized();
            CHECK(in_hull(p + step, samples).member() != in_hull(p - step, samples).member());
        }
        CHECK(compared > 40);
    }
}
