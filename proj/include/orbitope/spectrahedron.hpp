#pragma once

#include <complex>
#include <vector>

#include <Eigen/Core>

namespace orbitope {

using Complex = std::complex<double>;

/// Unit-diagonal Hermitian Toeplitz matrix of size n: entry (i, i+d) is
/// z_d and entry (i+d, i) is conj(z_d), for d = 1..n-1.
class HermitianToeplitz {
public:
    /// diagonals[d-1] = z_d; the size is diagonals.size() + 1.
    explicit HermitianToeplitz(std::vector<Complex> diagonals);

    Eigen::Index size() const { return static_cast<Eigen::Index>(diagonals_.size()) + 1; }
    const std::vector<Complex>& diagonals() const { return diagonals_; }
    Complex z(int d) const;

    Eigen::MatrixXcd matrix() const;

private:
    std::vector<Complex> diagonals_;
};

/// Interleaves odd = (z_1, z_3, ..., z_{2k-1}) and even = (z_2, ..., z_{2k-2})
/// into a size-2k matrix. Throws std::invalid_argument unless the counts are
/// k and k-1 with k >= 2.
HermitianToeplitz toeplitz_assemble(const std::vector<Complex>& odd, const std::vector<Complex>& even);

/// Odd entries of a point (x_1..x_k, y_1..y_k) of R^{2k}: z_{2l-1} = x_l + i y_l.
std::vector<Complex> odd_entries_from_point(const Eigen::Ref<const Eigen::VectorXd>& point);

double min_eigenvalue(const Eigen::Ref<const Eigen::MatrixXcd>& m);
double min_eigenvalue(const HermitianToeplitz& m);

/// Number of eigenvalues above rel_tol times the largest one.
int numerical_rank(const Eigen::Ref<const Eigen::MatrixXcd>& m, double rel_tol = 1e-6);

/// Nearest PSD matrix in Frobenius norm (negative eigenvalues clipped).
Eigen::MatrixXcd project_psd(const Eigen::Ref<const Eigen::MatrixXcd>& m);

enum class Membership { Member, NonMemberLikely, Inconclusive };

const char* to_string(Membership m);

struct MembershipVerdict {
    Membership verdict = Membership::Inconclusive;
    std::vector<Complex> free_entries;  // z_2, z_4, ..., z_{2k-2} at the last iterate
    double residual = 0.0;              // ||P_psd(M) - M||_F at the last iterate
    int iterations_used = 0;
    double min_eigenvalue = 0.0;        // of the assembled matrix at the last iterate
    int rank = 0;                       // numerical rank of the same matrix
};

inline constexpr int kMembershipMaxIters = 20000;
inline constexpr double kMembershipTol = 1e-9;

/// Whether a point of R^{2k} lies in B_2k, decided by alternating
/// projections between the PSD cone and the unit-diagonal Toeplitz matrices
/// with the point's odd entries. Starts from zero free entries.
/// NonMemberLikely means the residual stopped decreasing (by less than 1e-12
/// over 100 iterations) while still above 10 * tol.
MembershipVerdict b2k_membership(const Eigen::Ref<const Eigen::VectorXd>& point,
                                 int max_iters = kMembershipMaxIters, double tol = kMembershipTol);

}  // namespace orbitope
