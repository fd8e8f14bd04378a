#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Core>

namespace orbitope {

/// h(x) = constant + coeffs . x
struct AffineFunctional {
    Eigen::VectorXd coeffs;
    double constant = 0.0;

    double operator()(const Eigen::Ref<const Eigen::VectorXd>& x) const {
        return constant + coeffs.dot(x);
    }
    Eigen::Index dimension() const { return coeffs.size(); }
};

/// Nonnegative weights summing to one over a list of points.
struct ConvexCombination {
    Eigen::VectorXd weights;
    std::vector<Eigen::VectorXd> points;

    Eigen::VectorXd combine() const {
        Eigen::VectorXd out = Eigen::VectorXd::Zero(points.empty() ? 0 : points.front().size());
        for (std::size_t i = 0; i < points.size(); ++i) out += weights[static_cast<Eigen::Index>(i)] * points[i];
        return out;
    }

    /// Max-norm distance between the combination and a target point.
    double reconstruction_error(const Eigen::Ref<const Eigen::VectorXd>& target) const {
        return (combine() - target).lpNorm<Eigen::Infinity>();
    }

    /// |sum(weights) - 1| plus the magnitude of the most negative weight.
    double weight_defect() const {
        const double neg = weights.size() == 0 ? 0.0 : std::max(0.0, -weights.minCoeff());
        return std::abs(weights.sum() - 1.0) + neg;
    }
};

}  // namespace orbitope
