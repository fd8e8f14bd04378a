#pragma once

#include <string>
#include <string_view>

#include <Eigen/Core>

#include "orbitope/angle.hpp"
#include "orbitope/report.hpp"

// One function per CLI subcommand. Each returns a finished report whose
// passed() decides the exit status. Bad arguments throw
// std::invalid_argument or std::out_of_range (usage errors); numerical
// failures are recorded in the report as failed checks.

namespace orbitope {

RunReport cmd_identities(int k, double tol = 1e-12);
RunReport cmd_facets(int k, double tol = 1e-10);
RunReport cmd_roots(int k, double tol = 1e-10);
RunReport cmd_witness(int k, double tol = 1e-12);
RunReport cmd_tangent_cone(int k);
RunReport cmd_threshold(int k, int samples, double resolution, double tol = 5e-3);
RunReport cmd_edge(int k, const Angle& alpha, const Angle& beta, int samples);

/// `point` must have 2k coordinates (x_1..x_k, y_1..y_k).
RunReport cmd_membership(int k, const Eigen::VectorXd& point, int iters, double tol);
/// Same with the point SM_2k(theta).
RunReport cmd_membership(int k, const Angle& theta, int iters, double tol);

/// Writes CSV for kind curve | f-graphs | facet-projection | threshold-sweep.
/// `samples` is the grid size (curve, f-graphs, facet-projection) or the
/// hull sample count (threshold-sweep).
RunReport cmd_plot_data(std::string_view kind, int k, const std::string& out_path, int samples);

/// "x1,x2,..." into a vector; throws std::invalid_argument on junk.
Eigen::VectorXd parse_point(std::string_view text);

}  // namespace orbitope
