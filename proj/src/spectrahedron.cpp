#include "orbitope/spectrahedron.hpp"

#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace orbitope {

HermitianToeplitz::HermitianToeplitz(std::vector<Complex> diagonals) : diagonals_(std::move(diagonals)) {}

Complex HermitianToeplitz::z(int d) const {
    if (d == 0) return 1.0;
    if (d < 0) return std::conj(z(-d));
    if (d >= size()) throw std::out_of_range("diagonal index out of range");
    return diagonals_[static_cast<std::size_t>(d - 1)];
}

Eigen::MatrixXcd HermitianToeplitz::matrix() const {
    const Eigen::Index n = size();
    Eigen::MatrixXcd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) m(i, j) = z(static_cast<int>(j - i));
    }
    return m;
}

HermitianToeplitz toeplitz_assemble(const std::vector<Complex>& odd, const std::vector<Complex>& even) {
    const std::size_t k = odd.size();
    if (k < 2 || even.size() != k - 1) {
        throw std::invalid_argument("expected k odd entries and k-1 even entries with k >= 2");
    }
    std::vector<Complex> diag(2 * k - 1);
    for (std::size_t l = 0; l < k; ++l) diag[2 * l] = odd[l];
    for (std::size_t l = 0; l + 1 < k; ++l) diag[2 * l + 1] = even[l];
    return HermitianToeplitz(std::move(diag));
}

std::vector<Complex> odd_entries_from_point(const Eigen::Ref<const Eigen::VectorXd>& point) {
    if (point.size() < 2 || point.size() % 2 != 0) throw std::invalid_argument("point must have even dimension 2k");
    const Eigen::Index k = point.size() / 2;
    std::vector<Complex> odd(static_cast<std::size_t>(k));
    for (Eigen::Index l = 0; l < k; ++l) odd[static_cast<std::size_t>(l)] = Complex(point[l], point[k + l]);
    return odd;
}

double min_eigenvalue(const Eigen::Ref<const Eigen::MatrixXcd>& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

double min_eigenvalue(const HermitianToeplitz& m) { return min_eigenvalue(m.matrix()); }

int numerical_rank(const Eigen::Ref<const Eigen::MatrixXcd>& m, double rel_tol) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
    const double top = es.eigenvalues().cwiseAbs().maxCoeff();
    if (top == 0.0) return 0;
    return static_cast<int>((es.eigenvalues().array() > rel_tol * top).count());
}

Eigen::MatrixXcd project_psd(const Eigen::Ref<const Eigen::MatrixXcd>& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
    const Eigen::VectorXd clipped = es.eigenvalues().cwiseMax(0.0);
    Eigen::MatrixXcd out = es.eigenvectors() * clipped.asDiagonal() * es.eigenvectors().adjoint();
    return 0.5 * (out + out.adjoint());
}

const char* to_string(Membership m) {
    switch (m) {
    case Membership::Member:
        return "member";
    case Membership::NonMemberLikely:
        return "non-member-likely";
    case Membership::Inconclusive:
        return "inconclusive";
    }
    return "unknown";
}

namespace {

// Projection onto unit-diagonal Toeplitz matrices with the odd diagonals
// fixed: each free diagonal becomes the average of its entries (the
// mirrored entries enter conjugated).
std::vector<Complex> average_free_diagonals(const Eigen::MatrixXcd& m, std::size_t k) {
    const Eigen::Index n = m.rows();
    std::vector<Complex> even(k - 1);
    for (std::size_t l = 0; l + 1 < k; ++l) {
        const Eigen::Index d = 2 * static_cast<Eigen::Index>(l) + 2;
        Complex sum = 0.0;
        for (Eigen::Index i = 0; i + d < n; ++i) sum += m(i, i + d) + std::conj(m(i + d, i));
        even[l] = sum / (2.0 * static_cast<double>(n - d));
    }
    return even;
}

}  // namespace

MembershipVerdict b2k_membership(const Eigen::Ref<const Eigen::VectorXd>& point, int max_iters, double tol) {
    const std::vector<Complex> odd = odd_entries_from_point(point);
    const std::size_t k = odd.size();
    if (k < 2) throw std::invalid_argument("membership needs k >= 2");

    constexpr int kWindow = 100;
    constexpr double kMinProgress = 1e-12;

    MembershipVerdict v;
    v.free_entries.assign(k - 1, Complex(0.0));
    std::vector<double> history;
    Eigen::MatrixXcd m = toeplitz_assemble(odd, v.free_entries).matrix();

    for (int it = 1; it <= max_iters; ++it) {
        const Eigen::MatrixXcd p = project_psd(m);
        v.residual = (p - m).norm();
        v.iterations_used = it;
        history.push_back(v.residual);
        if (v.residual < tol) {
            v.verdict = Membership::Member;
            break;
        }
        if (it > kWindow && v.residual > 10.0 * tol &&
            history[static_cast<std::size_t>(it - 1 - kWindow)] - v.residual < kMinProgress) {
            v.verdict = Membership::NonMemberLikely;
            break;
        }
        v.free_entries = average_free_diagonals(p, k);
        m = toeplitz_assemble(odd, v.free_entries).matrix();
    }
    v.min_eigenvalue = min_eigenvalue(m);
    v.rank = numerical_rank(m);
    return v;
}

}  // namespace orbitope
