#include "orbitope/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/LU>

namespace orbitope {

LinearProgram::LinearProgram(Sense sense, Eigen::VectorXd objective)
    : sense_(sense),
      objective_(std::move(objective)),
      lower_(Eigen::VectorXd::Constant(objective_.size(), -kInf)),
      upper_(Eigen::VectorXd::Constant(objective_.size(), kInf)) {}

void LinearProgram::add_row(const Eigen::Ref<const Eigen::RowVectorXd>& coeffs, Relation rel, double rhs) {
    if (coeffs.size() != num_vars()) throw std::invalid_argument("constraint row length mismatch");
    rows_.emplace_back(coeffs);
    relations_.push_back(rel);
    rhs_values_.push_back(rhs);
    dirty_ = true;
}

void LinearProgram::set_bounds(Eigen::Index var, double lower, double upper) {
    if (var < 0 || var >= num_vars()) throw std::out_of_range("variable index out of range");
    if (lower > upper) throw std::invalid_argument("lower bound exceeds upper bound");
    lower_[var] = lower;
    upper_[var] = upper;
}

void LinearProgram::flush() const {
    if (!dirty_) return;
    matrix_.resize(num_rows(), num_vars());
    rhs_.resize(num_rows());
    for (Eigen::Index i = 0; i < num_rows(); ++i) {
        matrix_.row(i) = rows_[static_cast<std::size_t>(i)];
        rhs_[i] = rhs_values_[static_cast<std::size_t>(i)];
    }
    dirty_ = false;
}

const Eigen::MatrixXd& LinearProgram::matrix() const {
    flush();
    return matrix_;
}

const Eigen::VectorXd& LinearProgram::rhs() const {
    flush();
    return rhs_;
}

void LinearProgram::validate() const {
    if (!objective_.allFinite()) throw std::invalid_argument("objective has non-finite entries");
    if (!matrix().allFinite() || !rhs().allFinite()) throw std::invalid_argument("constraints have non-finite entries");
    for (Eigen::Index j = 0; j < num_vars(); ++j) {
        if (std::isnan(lower_[j]) || std::isnan(upper_[j]) || lower_[j] > upper_[j] || lower_[j] == kInf ||
            upper_[j] == -kInf) {
            throw std::invalid_argument("invalid variable bounds");
        }
    }
}

namespace {

enum class VarKind { Shifted, Mirrored, Free };

struct VarMap {
    VarKind kind;
    Eigen::Index col;
    double offset;
};

// min c^T z  s.t.  A z = b, z >= 0, b >= 0
struct StandardForm {
    Eigen::MatrixXd a;
    Eigen::VectorXd b;
    Eigen::VectorXd c;
    std::vector<VarMap> vars;
    std::vector<double> flip;  // +-1 per row
    Eigen::Index original_rows = 0;
};

StandardForm to_standard_form(const LinearProgram& lp) {
    const Eigen::Index n = lp.num_vars();
    const Eigen::Index m0 = lp.num_rows();
    const auto& lo = lp.lower();
    const auto& up = lp.upper();
    const double sense_sign = lp.sense() == Sense::Maximize ? -1.0 : 1.0;

    StandardForm sf;
    sf.original_rows = m0;
    Eigen::Index cols = 0;
    Eigen::Index bound_rows = 0;
    for (Eigen::Index j = 0; j < n; ++j) {
        if (std::isfinite(lo[j])) {
            sf.vars.push_back({VarKind::Shifted, cols++, lo[j]});
            if (std::isfinite(up[j])) ++bound_rows;
        } else if (std::isfinite(up[j])) {
            sf.vars.push_back({VarKind::Mirrored, cols++, up[j]});
        } else {
            sf.vars.push_back({VarKind::Free, cols, 0.0});
            cols += 2;
        }
    }
    const Eigen::Index structural = cols;
    Eigen::Index slacks = bound_rows;
    for (Relation r : lp.relations()) {
        if (r != Relation::Equal) ++slacks;
    }

    const Eigen::Index m = m0 + bound_rows;
    sf.a = Eigen::MatrixXd::Zero(m, structural + slacks);
    sf.b = Eigen::VectorXd::Zero(m);
    sf.c = Eigen::VectorXd::Zero(structural + slacks);

    const auto& A = lp.matrix();
    for (Eigen::Index j = 0; j < n; ++j) {
        const VarMap& v = sf.vars[static_cast<std::size_t>(j)];
        const double cj = sense_sign * lp.objective()[j];
        switch (v.kind) {
        case VarKind::Shifted:
            sf.a.col(v.col).head(m0) = A.col(j);
            sf.b.head(m0) -= A.col(j) * v.offset;
            sf.c[v.col] = cj;
            break;
        case VarKind::Mirrored:
            sf.a.col(v.col).head(m0) = -A.col(j);
            sf.b.head(m0) -= A.col(j) * v.offset;
            sf.c[v.col] = -cj;
            break;
        case VarKind::Free:
            sf.a.col(v.col).head(m0) = A.col(j);
            sf.a.col(v.col + 1).head(m0) = -A.col(j);
            sf.c[v.col] = cj;
            sf.c[v.col + 1] = -cj;
            break;
        }
    }
    sf.b.head(m0) += lp.rhs();

    Eigen::Index slack = structural;
    for (Eigen::Index i = 0; i < m0; ++i) {
        switch (lp.relations()[static_cast<std::size_t>(i)]) {
        case Relation::LessEqual:
            sf.a(i, slack++) = 1.0;
            break;
        case Relation::GreaterEqual:
            sf.a(i, slack++) = -1.0;
            break;
        case Relation::Equal:
            break;
        }
    }
    Eigen::Index row = m0;
    for (Eigen::Index j = 0; j < n; ++j) {
        const VarMap& v = sf.vars[static_cast<std::size_t>(j)];
        if (v.kind == VarKind::Shifted && std::isfinite(up[j])) {
            sf.a(row, v.col) = 1.0;
            sf.a(row, slack++) = 1.0;
            sf.b[row] = up[j] - lo[j];
            ++row;
        }
    }

    sf.flip.assign(static_cast<std::size_t>(m), 1.0);
    for (Eigen::Index i = 0; i < m; ++i) {
        if (sf.b[i] < 0) {
            sf.a.row(i) *= -1.0;
            sf.b[i] = -sf.b[i];
            sf.flip[static_cast<std::size_t>(i)] = -1.0;
        }
    }
    return sf;
}

// Revised simplex over the columns of [A | I]. The basis is refactored from
// the original data at every iteration; with few rows and many columns this
// costs about the same as a tableau pivot and never accumulates drift.
class RevisedSimplex {
public:
    RevisedSimplex(const StandardForm& sf, const LPOptions& opt)
        : sf_(sf), opt_(opt), m_(sf.a.rows()), n_(sf.a.cols()), basis_(m_) {
        for (Eigen::Index i = 0; i < m_; ++i) basis_[static_cast<std::size_t>(i)] = n_ + i;
    }

    // Phase one: minimize the sum of artificials. Returns the optimum.
    double phase_one() {
        costs_ = Eigen::VectorXd::Zero(n_ + m_);
        costs_.tail(m_).setOnes();
        run();
        factor();
        return basic_costs().dot(xb_);
    }

    // Swaps basic artificials for structural columns where the row allows
    // it; artificials left behind sit on redundant rows and stay at zero.
    void drive_out_artificials() {
        for (Eigen::Index i = 0; i < m_; ++i) {
            if (basis_[static_cast<std::size_t>(i)] < n_) continue;
            factor();
            const Eigen::VectorXd ei = Eigen::VectorXd::Unit(m_, i);
            const Eigen::VectorXd ri = lu_.transpose().solve(ei);
            const Eigen::VectorXd row = sf_.a.transpose() * ri;
            Eigen::Index col = -1;
            double best = opt_.pivot_tol;
            for (Eigen::Index j = 0; j < n_; ++j) {
                if (!is_basic(j) && std::fabs(row[j]) > best) {
                    best = std::fabs(row[j]);
                    col = j;
                }
            }
            if (col >= 0) basis_[static_cast<std::size_t>(i)] = col;
        }
    }

    // Phase two with the true costs. Returns false when unbounded.
    bool phase_two() {
        costs_ = Eigen::VectorXd::Zero(n_ + m_);
        costs_.head(n_) = sf_.c;
        return run();
    }

    const std::vector<Eigen::Index>& basis() const { return basis_; }
    int iterations() const { return iterations_; }

private:
    bool is_basic(Eigen::Index j) const { return std::find(basis_.begin(), basis_.end(), j) != basis_.end(); }

    Eigen::VectorXd basic_costs() const {
        Eigen::VectorXd cb(m_);
        for (Eigen::Index i = 0; i < m_; ++i) cb[i] = costs_[basis_[static_cast<std::size_t>(i)]];
        return cb;
    }

    void factor() {
        Eigen::MatrixXd bm = Eigen::MatrixXd::Zero(m_, m_);
        for (Eigen::Index i = 0; i < m_; ++i) {
            const Eigen::Index bi = basis_[static_cast<std::size_t>(i)];
            if (bi < n_) {
                bm.col(i) = sf_.a.col(bi);
            } else {
                bm(bi - n_, i) = 1.0;
            }
        }
        lu_.compute(bm);
        if (!lu_.isInvertible()) throw NumericalError("simplex basis became singular");
        xb_ = lu_.solve(sf_.b);
    }

    // Most negative reduced cost enters; Harris two-pass ratio test picks
    // the largest pivot among near-minimal ratios. After kDegenerateStreak
    // degenerate pivots in a row we switch to Bland's rule (lowest-index
    // improving column, lowest basic index on exact ratio ties) until the
    // objective moves again, which rules out cycling.
    bool run() {
        constexpr int kDegenerateStreak = 50;
        int degenerate = 0;
        std::vector<bool> basic(static_cast<std::size_t>(n_ + m_), false);
        for (;;) {
            factor();
            std::fill(basic.begin(), basic.end(), false);
            for (Eigen::Index b : basis_) basic[static_cast<std::size_t>(b)] = true;
            const Eigen::VectorXd y = lu_.transpose().solve(basic_costs());
            const Eigen::VectorXd reduced = costs_.head(n_) - sf_.a.transpose() * y;

            const bool bland = degenerate >= kDegenerateStreak;
            Eigen::Index enter = -1;
            double most_negative = -opt_.optimality_tol;
            for (Eigen::Index j = 0; j < n_; ++j) {
                if (basic[static_cast<std::size_t>(j)]) continue;
                if (reduced[j] < most_negative) {
                    enter = j;
                    if (bland) break;
                    most_negative = reduced[j];
                }
            }
            if (enter < 0) return true;

            const Eigen::VectorXd u = lu_.solve(sf_.a.col(enter));
            const double piv_tol = opt_.pivot_tol * std::max(1.0, u.lpNorm<Eigen::Infinity>());
            Eigen::Index leave = -1;
            double step = 0.0;
            if (bland) {
                for (Eigen::Index i = 0; i < m_; ++i) {
                    if (u[i] <= piv_tol) continue;
                    const double ratio = std::max(0.0, xb_[i]) / u[i];
                    if (leave < 0 || ratio < step ||
                        (ratio == step && basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(leave)])) {
                        leave = i;
                        step = ratio;
                    }
                }
            } else {
                double bound = std::numeric_limits<double>::infinity();
                for (Eigen::Index i = 0; i < m_; ++i) {
                    if (u[i] > piv_tol) bound = std::min(bound, (std::max(0.0, xb_[i]) + kHarrisTol) / u[i]);
                }
                for (Eigen::Index i = 0; i < m_; ++i) {
                    if (u[i] <= piv_tol) continue;
                    const double ratio = std::max(0.0, xb_[i]) / u[i];
                    if (ratio <= bound && (leave < 0 || u[i] > u[leave])) {
                        leave = i;
                        step = ratio;
                    }
                }
            }
            if (leave < 0) return false;
            degenerate = step * -reduced[enter] <= 1e-14 ? degenerate + 1 : 0;
            basis_[static_cast<std::size_t>(leave)] = enter;
            if (++iterations_ > opt_.max_iterations) throw NumericalError("simplex iteration limit exceeded");
        }
    }

    static constexpr double kHarrisTol = 1e-12;

    const StandardForm& sf_;
    const LPOptions& opt_;
    Eigen::Index m_;
    Eigen::Index n_;
    std::vector<Eigen::Index> basis_;
    Eigen::VectorXd costs_;
    Eigen::FullPivLU<Eigen::MatrixXd> lu_;
    Eigen::VectorXd xb_;
    int iterations_ = 0;
};

Eigen::MatrixXd basis_matrix(const StandardForm& sf, const std::vector<Eigen::Index>& basis) {
    const Eigen::Index m = sf.a.rows();
    const Eigen::Index n = sf.a.cols();
    Eigen::MatrixXd bm = Eigen::MatrixXd::Zero(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
        const Eigen::Index bi = basis[static_cast<std::size_t>(i)];
        if (bi < n) {
            bm.col(i) = sf.a.col(bi);
        } else {
            bm(bi - n, i) = 1.0;
        }
    }
    return bm;
}

Eigen::VectorXd to_original_rows(const StandardForm& sf, const Eigen::VectorXd& y, double sign) {
    Eigen::VectorXd out(sf.original_rows);
    for (Eigen::Index i = 0; i < sf.original_rows; ++i) out[i] = sign * sf.flip[static_cast<std::size_t>(i)] * y[i];
    return out;
}

Eigen::VectorXd to_original_vars(const StandardForm& sf, const Eigen::VectorXd& z) {
    Eigen::VectorXd x(static_cast<Eigen::Index>(sf.vars.size()));
    for (std::size_t j = 0; j < sf.vars.size(); ++j) {
        const VarMap& v = sf.vars[j];
        const auto jj = static_cast<Eigen::Index>(j);
        switch (v.kind) {
        case VarKind::Shifted:
            x[jj] = v.offset + z[v.col];
            break;
        case VarKind::Mirrored:
            x[jj] = v.offset - z[v.col];
            break;
        case VarKind::Free:
            x[jj] = z[v.col] - z[v.col + 1];
            break;
        }
    }
    return x;
}

}  // namespace

LPCertificate lp_solve(const LinearProgram& lp, const LPOptions& options) {
    lp.validate();
    const StandardForm sf = to_standard_form(lp);
    const Eigen::Index m = sf.a.rows();
    const Eigen::Index n = sf.a.cols();

    LPCertificate cert;
    RevisedSimplex tab(sf, options);

    const double infeasibility = tab.phase_one();
    cert.infeasibility = std::max(0.0, infeasibility);

    if (infeasibility > options.feasibility_tol) {
        // Phase-one duals form a Farkas ray.
        Eigen::VectorXd cb = Eigen::VectorXd::Zero(m);
        for (Eigen::Index i = 0; i < m; ++i) {
            if (tab.basis()[static_cast<std::size_t>(i)] >= n) cb[i] = 1.0;
        }
        const Eigen::MatrixXd bm = basis_matrix(sf, tab.basis());
        const Eigen::VectorXd y = bm.transpose().partialPivLu().solve(cb);
        cert.status = LPStatus::Infeasible;
        cert.dual = to_original_rows(sf, y, 1.0);
        cert.iterations = tab.iterations();
        return cert;
    }

    tab.drive_out_artificials();
    const bool bounded = tab.phase_two();
    cert.iterations = tab.iterations();

    // Recompute the basic solution from the original data.
    const Eigen::MatrixXd bm = basis_matrix(sf, tab.basis());
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(bm);
    const Eigen::VectorXd xb = lu.solve(sf.b);
    if (!xb.allFinite()) throw NumericalError("singular simplex basis");

    Eigen::VectorXd z = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd cb = Eigen::VectorXd::Zero(m);
    for (Eigen::Index i = 0; i < m; ++i) {
        const Eigen::Index bi = tab.basis()[static_cast<std::size_t>(i)];
        if (bi < n) {
            if (xb[i] < -1e3 * options.feasibility_tol) throw NumericalError("basic solution lost feasibility");
            z[bi] = std::max(0.0, xb[i]);
            cb[i] = sf.c[bi];
        }
    }
    cert.primal = to_original_vars(sf, z);
    cert.objective_value = lp.objective().dot(cert.primal);

    if (!bounded) {
        cert.status = LPStatus::Unbounded;
        return cert;
    }

    const Eigen::VectorXd y = lu.transpose().solve(cb);
    const Eigen::VectorXd reduced = sf.c - sf.a.transpose() * y;
    const double primal_obj = sf.c.dot(z);
    const double dual_obj = sf.b.dot(y);
    cert.duality_gap = std::fabs(primal_obj - dual_obj);
    const double scale = std::max(1.0, std::fabs(primal_obj));
    if (!(cert.duality_gap <= options.duality_tol * scale) || (n > 0 && !(reduced.minCoeff() >= -options.duality_tol * scale))) {
        throw NumericalError("duality check failed at the final basis");
    }

    cert.status = LPStatus::Optimal;
    cert.dual = to_original_rows(sf, y, lp.sense() == Sense::Maximize ? -1.0 : 1.0);
    return cert;
}

}  // namespace orbitope
