#pragma once

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "orbitope/affine.hpp"
#include "orbitope/angle.hpp"
#include "orbitope/lp.hpp"

namespace orbitope {

enum class HullStatus {
    Member,    // in the hull; interior/boundary not resolved
    Interior,
    Boundary,
    Outside,
};

const char* to_string(HullStatus s);

/// Strictly separating affine functional: functional(p) <= 0 on every hull
/// point and functional(query) = margin > 0. Coefficients are scaled to
/// unit max-norm.
struct Separator {
    AffineFunctional functional;
    double margin = 0.0;
};

struct HullVerdict {
    HullStatus status = HullStatus::Outside;
    std::optional<ConvexCombination> combination;  // members
    std::optional<Separator> separator;            // outsiders

    bool member() const { return status != HullStatus::Outside; }
};

/// Membership of `query` in conv(columns of `points`) via a feasibility LP
/// over barycentric weights. Outside verdicts carry the separator read off
/// the phase-one Farkas ray.
HullVerdict in_hull(const Eigen::Ref<const Eigen::VectorXd>& query, const Eigen::Ref<const Eigen::MatrixXd>& points,
                    double tol = 1e-9);
HullVerdict in_hull(const Eigen::Ref<const Eigen::VectorXd>& query, const std::vector<Eigen::VectorXd>& points,
                    double tol = 1e-9);

/// Interior iff query +- delta e_i is a member for every axis direction i,
/// Boundary if query is a member but some probe is not, Outside otherwise.
/// Throws std::invalid_argument when the points do not span the space.
HullVerdict interiority_probe(const Eigen::Ref<const Eigen::VectorXd>& query,
                              const Eigen::Ref<const Eigen::MatrixXd>& points, double delta, double tol = 1e-9);

struct TangentConeResult {
    bool interior = false;
    double max_step = 0.0;  // eps* from the step LP
    LPCertificate step_lp;
    std::optional<HullVerdict> midpoint_probe;  // at eps*/2, in the affine hull
};

/// Whether `direction` lies in the relative interior of the tangent cone of
/// conv(facet_vertices) at `vertex`: the largest step eps* keeping
/// vertex + eps * direction in the polytope must be positive, and the point
/// at eps*/2 must be relatively interior.
TangentConeResult tangent_cone_interior(const Eigen::Ref<const Eigen::VectorXd>& vertex,
                                        const Eigen::Ref<const Eigen::VectorXd>& direction,
                                        const std::vector<Eigen::VectorXd>& facet_vertices);

/// A supporting functional of B_2k exposing [SM(alpha), SM(beta)]:
/// functional(SM(alpha)) = functional(SM(beta)) = 0 and
/// functional(SM(t)) >= margin on every sample t outside the exclusion arcs.
struct EdgeCertificate {
    AffineFunctional functional;
    double margin = 0.0;
};

/// Raw solution of the edge LP, whether or not it certifies anything.
struct EdgeSupport {
    AffineFunctional functional;
    double margin = 0.0;
    int samples_used = 0;   // samples outside the exclusion arcs
    double exclusion_radius = 0.0;
    LPCertificate lp;
};

inline constexpr double kEdgeMarginThreshold = 1e-7;

/// Maximizes the minimum slack min_i [h0 - h.SM(t_i)] over |h_j| <= 1 with
/// h.SM(alpha) = h.SM(beta) = h0, for samples t_i = 2 pi i / n farther than
/// 10 sample spacings from alpha and beta. Solved through its dual (the
/// l1 distance between the line through SM(alpha), SM(beta) and the hull
/// of the samples), which has only 2k + 2 rows.
EdgeSupport edge_support(int k, const Angle& alpha, const Angle& beta, int num_samples);

/// Certificate when the optimal margin exceeds kEdgeMarginThreshold.
std::optional<EdgeCertificate> exposed_edge_certificate(int k, const Angle& alpha, const Angle& beta,
                                                        int num_samples);

}  // namespace orbitope
