#pragma once

#include <optional>

#include "lbs/model.hpp"

namespace lbs {

// A point is on a boundary when
//   |C| <= max(rel * (1 + |g| + |l| + |m|)^3, abs)  or  |Q1| <= max(rel * (1 + |l| + |m|)^2, abs).
struct BoundaryTolerance {
    double rel = 1e-12;
    double abs = 0.0;

    double cubic(const Couplings& c) const;
    double quadratic(double lambda, double mu) const;
};

struct QPolynomials {
    double q0 = 0.0;
    double q1 = 0.0;
};

// C(below) = gamma * Q1 + Q0 and C(above) = -gamma * Q1 + Q0.
QPolynomials q_polynomials(Side side, double lambda, double mu);
double c_polynomial(Side side, const Couplings& c);

// gamma on the surface C(side) = 0 over (lambda, mu); empty on the curve Q1 = 0.
std::optional<double> boundary_gamma(Side side, double lambda, double mu,
                                     const BoundaryTolerance& tol = {});

// The curve Q1(side) = 0 as a graph over mu; empty at mu = -1 (below) or mu = 1 (above).
std::optional<double> boundary_lambda(Side side, double mu);

enum class Region { d1, d2, d3, on_tau };

const char* to_string(Region r) noexcept;

Region classify_region(Side side, double lambda, double mu, const BoundaryTolerance& tol = {});

struct RegionLabel {
    Side side = Side::below;
    // Eigenvalue count on this side; empty for boundary points.
    std::optional<int> alpha;
    bool on_boundary = false;
};

RegionLabel classify_component(Side side, const Couplings& c, const BoundaryTolerance& tol = {});

struct ComponentLabel {
    std::optional<int> alpha;
    std::optional<int> beta;
    // False on any boundary, or if alpha + beta > 3.
    bool valid = false;
};

ComponentLabel predicted_counts(const Couplings& c, const BoundaryTolerance& tol = {});

}  // namespace lbs
