#pragma once

#include <Eigen/Core>

#include "orbitope/angle.hpp"

namespace orbitope {

enum class CurveKind {
    Cosine,     // C_k(t) = (cos t, cos 3t, ..., cos (2k-1)t)
    Symmetric,  // SM_2k(t) = (cos t, ..., cos (2k-1)t, sin t, ..., sin (2k-1)t)
};

struct CurveId {
    CurveKind kind;
    int k;

    int dimension() const { return kind == CurveKind::Cosine ? k : 2 * k; }
    friend bool operator==(const CurveId&, const CurveId&) = default;
};

/// A point of one of the moment curves, tagged with where it came from.
struct CurvePoint {
    Eigen::VectorXd coords;
    Angle source_angle;
    CurveId curve;
};

/// The cosine moment curve C_k. Accepts k >= 1 because the facet
/// geometry of C_k lives on C_{k-1}.
CurvePoint cosine_curve(int k, const Angle& theta);

/// Componentwise derivative of C_k: entry l is -(2l-1) sin((2l-1) theta).
Eigen::VectorXd cosine_curve_derivative(int k, const Angle& theta);

/// The symmetric trigonometric moment curve SM_2k, k >= 1.
CurvePoint symmetric_curve(int k, const Angle& theta);

/// C_k sampled at n equally spaced angles covering [0, pi], endpoints
/// included, as the columns of a k x n matrix.
Eigen::MatrixXd sample_cosine_curve(int k, int n);

/// SM_2k at n equally spaced angles 2*pi*i/n, i = 0..n-1, as columns.
Eigen::MatrixXd sample_symmetric_curve(int k, int n);

}  // namespace orbitope
