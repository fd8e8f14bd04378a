#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "orbitope/affine.hpp"
#include "orbitope/angle.hpp"
#include "orbitope/curves.hpp"

// Geometry of the facet {x_k = 1} of conv(C_k). Everything here lives in
// R^{k-1}: the frozen coordinate x_k = 1 is dropped and the curve seen on
// the facet is C_{k-1}.

namespace orbitope {

// Tolerance ladder shared by the checks below and their tests.
inline constexpr double kStructuralZeroTol = 1e-10;
inline constexpr double kReconstructionTol = 1e-12;
inline constexpr double kDerivativeTol = 1e-8;
inline constexpr double kSignDeadZone = 1e-12;

/// [pi/2, 2pi/(2k-1), 4pi/(2k-1), ..., 2(k-1)pi/(2k-1)]; index 0 is pi/2.
std::vector<Angle> theta_nodes(int k);

/// j = 0: 1/2 + sum x_l. j >= 1: sum (cos((2l-1) theta_j) - 1) x_l.
AffineFunctional facet_functional(int k, int j);

/// The trigonometric polynomial f_{j,k}(theta) = h_{j,k}(C_{k-1}(theta)).
double facet_poly(int k, int j, const Angle& theta);

/// Closed-form zeros of f_{j,k} in [0, pi], sorted, exactly 2k-3 of them.
std::vector<Angle> facet_poly_roots(int k, int j);

enum class SimplexKind { P, Q };

struct SimplexSpec {
    int k;
    SimplexKind which;
    std::vector<CurvePoint> vertices;     // C_{k-1} at the defining nodes
    std::vector<AffineFunctional> facets; // only filled for Q

    std::vector<Eigen::VectorXd> vertex_coords() const;
};

/// P_k = conv{C_{k-1}(0), C_{k-1}(theta_1), ..., C_{k-1}(theta_{k-1})}.
SimplexSpec simplex_p(int k);
/// Q_k = conv{C_{k-1}(theta_0), ..., C_{k-1}(theta_{k-1})} with its facets.
SimplexSpec simplex_q(int k);

struct FacetPairCheck {
    int j;       // functional
    int i;       // node
    double value;
    bool passed;
};

struct FacetDescriptionReport {
    int k;
    double tol;
    std::vector<FacetPairCheck> pairs;
    double max_offdiagonal = 0.0;  // max |f_{j,k}(theta_i)|, i != j
    double min_diagonal = 0.0;     // min f_{j,k}(theta_j)

    bool passed() const;
};

/// f_{j,k}(theta_i) = 0 for i != j and f_{j,k}(theta_j) > tol, all pairs.
FacetDescriptionReport verify_facet_description(int k, double tol);

/// The origin C_{k-1}(pi/2) written over the vertices of P_k, with weight
/// 1/(2k-1) on C_{k-1}(0) and 2/(2k-1) on each C_{k-1}(theta_j).
ConvexCombination origin_witness(int k);

/// Sign of f_{j,k}(theta) with |f| < kSignDeadZone mapped to 0.
int sign_profile(int k, int j, const Angle& theta);

/// The sign f_{j,k} is known to take on the windows
/// ((k-1)pi/(2k-1), pi/2) and (pi/2, k pi/(2k-1)); nullopt elsewhere.
std::optional<int> window_sign(int k, int j, double theta);

enum class TrigIdentity {
    Sum2,     // sum_{j=1}^{k-1} cos((2l-1) 2j pi/(2k-1)), l in 1..k-1
    Sum,      // sum_{l=1}^{k-1} cos((2l-1) 2j pi/(2k-1)), j in 1..2k-2
    ProdSum,  // sum_{l=1}^{k-1} cos((2l-1)2i pi/(2k-1)) cos((2l-1)2j pi/(2k-1)), i != j in 0..k-1
};

/// |sum + 1/2| for one instance. `first` is l, j or i; `second` is j for
/// ProdSum and ignored otherwise. Throws std::out_of_range on bad indices.
double trig_identity_residual(TrigIdentity which, int k, int first, int second = 0);

struct TrigIdentityInstance {
    TrigIdentity which;
    int first;
    int second;
    double residual;
};

/// Every valid instance of the three identities for one k.
std::vector<TrigIdentityInstance> trig_identity_table(int k);

/// Sign-change scan on a uniform grid followed by bisection down to xtol.
/// Grid points where f is exactly zero are reported as roots.
std::vector<double> find_roots_bisection(const std::function<double(double)>& f, double lo, double hi,
                                         int grid, double xtol);

struct RootCrossCheck {
    int k;
    int j;
    std::vector<Angle> closed_form;
    std::vector<double> bisection;
    double max_deviation = 0.0;      // closed form vs bisection
    double max_abs_value = 0.0;      // |f| at the closed-form roots
    double min_abs_derivative = 0.0; // central difference at the roots
    bool sign_changes = false;       // f changes sign across every root

    bool passed() const;
};

/// Compares the closed-form zeros with a bisection search over [0, pi]
/// (grid 10^4, refined to 1e-12).
RootCrossCheck cross_check_roots(int k, int j);

}  // namespace orbitope
