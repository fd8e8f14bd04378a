#pragma once

#include <limits>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

namespace orbitope {

enum class Relation { LessEqual, Equal, GreaterEqual };
enum class Sense { Maximize, Minimize };

/// Dense linear program
///
///     optimize  objective . x
///     s.t.      row_i . x  (<=, =, >=)  rhs_i
///               lower <= x <= upper
///
/// Variables are free unless bounds are set.
class LinearProgram {
public:
    LinearProgram(Sense sense, Eigen::VectorXd objective);

    void add_row(const Eigen::Ref<const Eigen::RowVectorXd>& coeffs, Relation rel, double rhs);
    void set_bounds(Eigen::Index var, double lower, double upper);
    void set_nonnegative(Eigen::Index var) { set_bounds(var, 0.0, kInf); }

    Sense sense() const { return sense_; }
    const Eigen::VectorXd& objective() const { return objective_; }
    Eigen::Index num_vars() const { return objective_.size(); }
    Eigen::Index num_rows() const { return static_cast<Eigen::Index>(rows_.size()); }
    const Eigen::MatrixXd& matrix() const;
    const std::vector<Relation>& relations() const { return relations_; }
    const Eigen::VectorXd& rhs() const;
    const Eigen::VectorXd& lower() const { return lower_; }
    const Eigen::VectorXd& upper() const { return upper_; }

    /// Throws std::invalid_argument on non-finite data or inverted bounds.
    void validate() const;

    static constexpr double kInf = std::numeric_limits<double>::infinity();

private:
    void flush() const;

    Sense sense_;
    Eigen::VectorXd objective_;
    Eigen::VectorXd lower_;
    Eigen::VectorXd upper_;
    std::vector<Eigen::RowVectorXd> rows_;
    std::vector<Relation> relations_;
    std::vector<double> rhs_values_;
    mutable Eigen::MatrixXd matrix_;
    mutable Eigen::VectorXd rhs_;
    mutable bool dirty_ = true;
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

/// Result of lp_solve.
///
/// For Optimal, `dual` holds one multiplier per row with
/// objective - A^T dual equal to the reduced costs; the solver recomputes
/// both primal and dual from the final basis and verifies the duality gap.
/// For Infeasible, `dual` is a Farkas ray y over the rows: y^T A x is
/// bounded by the bound constraints in a way that contradicts y^T b. For
/// rows that are all equalities over nonnegative variables this means
/// A^T y <= 0 and b^T y > 0.
struct LPCertificate {
    LPStatus status = LPStatus::Infeasible;
    Eigen::VectorXd primal;
    double objective_value = 0.0;
    Eigen::VectorXd dual;
    double duality_gap = 0.0;
    double infeasibility = 0.0;  // phase-one optimum (residual l1 norm)
    int iterations = 0;
};

struct LPOptions {
    double feasibility_tol = 1e-9;
    double optimality_tol = 1e-10;
    double pivot_tol = 1e-9;
    double duality_tol = 1e-8;
    int max_iterations = 200000;
};

class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two-phase revised simplex with the basis refactored every iteration.
/// Dantzig pricing with a Harris ratio test, falling back to Bland's rule on
/// streaks of degenerate pivots. Deterministic for identical input. Throws
/// NumericalError if the iteration budget runs out, the basis turns
/// singular, or the final duality check fails.
LPCertificate lp_solve(const LinearProgram& lp, const LPOptions& options = {});

}  // namespace orbitope
