#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbitope/angle.hpp"
#include "orbitope/hull.hpp"

namespace orbitope {

/// 2 pi (k-1) / (2k-1): chords of SM_2k shorter than this are edges of
/// B_2k, longer ones are not.
double edge_threshold(int k);

inline constexpr double kInteriorityDelta = 1e-6;
inline constexpr double kGuardBand = 0.02;
inline constexpr double kThresholdTolerance = 5e-3;

/// Whether C_k(theta), the midpoint of [SM(-theta), SM(theta)] projected to
/// the cosine coordinates, is interior to conv(C_k). The hull is C_k sampled
/// at num_samples points on [0, pi] plus C_k(theta) itself; C_k retraces
/// itself on [pi, 2pi] so nothing is lost. Interior means the chord is not
/// an edge.
HullVerdict midpoint_interiority(int k, const Angle& theta, int num_samples, double delta = kInteriorityDelta);

struct ThresholdEstimate {
    int k = 0;
    double psi_hat = 0.0;  // estimated threshold arc
    double lo = 0.0;       // bracket on the arc
    double hi = 0.0;
    int samples_used = 0;
    int probes = 0;        // midpoint_interiority calls
    bool scanned = false;  // initial bracket failed, full scan used
};

class ThresholdError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Locates the arc 2 theta where midpoint_interiority switches from
/// Boundary to Interior, bisecting on theta in (0, pi/2] until the arc
/// bracket is narrower than `resolution`. Starts from theta within 0.15 of
/// the expected value and falls back to a 64-cell scan of (0, pi/2] when the
/// ends do not disagree. Throws ThresholdError if the scan finds no
/// transition or more than one.
ThresholdEstimate estimate_threshold(int k, int num_samples, double resolution);

enum class EdgeKind { Edge, NotEdge, NearThreshold, Contradiction };

const char* to_string(EdgeKind e);

struct EdgeVerdict {
    EdgeKind verdict = EdgeKind::NearThreshold;
    double arc = 0.0;
    double threshold = 0.0;
    double rotation = 0.0;  // pair is (rotation - arc/2, rotation + arc/2)
    // Supporting functional, mapped back to the original pair. Present for Edge.
    std::optional<EdgeCertificate> certificate;
    // Midpoint probe of the rotated pair. Present for NotEdge.
    std::optional<HullVerdict> interiority;
    double lp_margin = 0.0;
    std::string diagnostic;  // set for Contradiction
};

/// Edge or not, with evidence. Inside the guard band around the threshold
/// the answer is NearThreshold and nothing is computed. Otherwise both the
/// edge LP and the midpoint probe run on the pair rotated to be symmetric
/// about 0; Edge needs a positive LP margin and a non-interior midpoint,
/// NotEdge needs the reverse, and either must agree with the arc-length
/// prediction. Anything else is a Contradiction.
EdgeVerdict edge_verdict(int k, const Angle& alpha, const Angle& beta, int num_samples);

enum class ClauseStatus { Pass, Fail, TrivialPass };

const char* to_string(ClauseStatus c);

struct SignCheck {
    int j;
    double value;  // f_{j,k} at the probe angle
    int expected;
    bool passed;
};

/// Checks that C_{k-1} leaves the vertex C_{k-1}(t0) of P_k into its
/// interior, where t0 = (k-1)pi/(2k-1) for odd k and k pi/(2k-1) for even k.
struct LemmaFaceReport {
    int k = 0;
    Angle t0;
    int direction_sign = 1;  // +C'_{k-1}(t0) for odd k, -C'_{k-1}(t0) for even k
    double epsilon = 1e-3;
    Angle probe;             // t0 + direction_sign * epsilon

    // (a) C_k(t0) lies on the facet x_k = 1
    double face_residual = 0.0;
    ClauseStatus face = ClauseStatus::Fail;
    // (b) the direction is in the relative interior of the tangent cone
    std::optional<TangentConeResult> cone;
    ClauseStatus tangent = ClauseStatus::Fail;
    // (c) every f_{j,k} has its predicted sign at the probe angle
    std::vector<SignCheck> signs;
    ClauseStatus sign = ClauseStatus::Fail;

    bool passed() const;
};

inline constexpr double kMinTangentStep = 1e-6;

LemmaFaceReport lemma_face_check(int k);

}  // namespace orbitope
