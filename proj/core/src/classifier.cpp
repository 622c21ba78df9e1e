#include "lbs/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lbs/errors.hpp"

namespace lbs {

double BoundaryTolerance::cubic(const Couplings& c) const {
    const double s = 1.0 + std::abs(c.gamma()) + std::abs(c.lambda()) + std::abs(c.mu());
    return std::max(rel * s * s * s, abs);
}

double BoundaryTolerance::quadratic(double lambda, double mu) const {
    const double s = 1.0 + std::abs(lambda) + std::abs(mu);
    return std::max(rel * s * s, abs);
}

QPolynomials q_polynomials(Side side, double lambda, double mu) {
    const double sg = side == Side::below ? 1.0 : -1.0;
    return QPolynomials{sg * (lambda + mu) + lambda * mu, sg * (lambda + 2.0 * mu) + 1.0 + lambda * mu};
}

double c_polynomial(Side side, const Couplings& c) {
    const QPolynomials q = q_polynomials(side, c.lambda(), c.mu());
    // Above the band the gamma coefficient of C is -Q1, not Q1.
    const double sg = side == Side::below ? 1.0 : -1.0;
    return sg * c.gamma() * q.q1 + q.q0;
}

std::optional<double> boundary_gamma(Side side, double lambda, double mu,
                                     const BoundaryTolerance& tol) {
    const QPolynomials q = q_polynomials(side, lambda, mu);
    if (std::abs(q.q1) <= tol.quadratic(lambda, mu)) {
        return std::nullopt;
    }
    return side == Side::below ? -q.q0 / q.q1 : q.q0 / q.q1;
}

std::optional<double> boundary_lambda(Side side, double mu) {
    if (side == Side::below) {
        if (mu == -1.0) {
            return std::nullopt;
        }
        return -(2.0 * mu + 1.0) / (1.0 + mu);
    }
    if (mu == 1.0) {
        return std::nullopt;
    }
    return -(2.0 * mu - 1.0) / (1.0 - mu);
}

const char* to_string(Region r) noexcept {
    switch (r) {
        case Region::d1: return "D1";
        case Region::d2: return "D2";
        case Region::d3: return "D3";
        case Region::on_tau: return "on_tau";
    }
    return "?";
}

namespace {

// mu > -1 below the band, mu < 1 above: the side of the pole of boundary_lambda holding D1.
bool on_d1_side(Side side, double mu, bool closed) {
    if (side == Side::below) {
        return closed ? mu >= -1.0 : mu > -1.0;
    }
    return closed ? mu <= 1.0 : mu < 1.0;
}

bool on_d3_side(Side side, double mu) {
    return side == Side::below ? mu < -1.0 : mu > 1.0;
}

}  // namespace

Region classify_region(Side side, double lambda, double mu, const BoundaryTolerance& tol) {
    const double q1 = q_polynomials(side, lambda, mu).q1;
    if (std::abs(q1) <= tol.quadratic(lambda, mu)) {
        return Region::on_tau;
    }
    if (q1 < 0.0) {
        return Region::d2;
    }
    return on_d1_side(side, mu, false) ? Region::d1 : Region::d3;
}

RegionLabel classify_component(Side side, const Couplings& c, const BoundaryTolerance& tol) {
    RegionLabel out;
    out.side = side;
    const double cc = c_polynomial(side, c);
    const double q1 = q_polynomials(side, c.lambda(), c.mu()).q1;
    const double mu = c.mu();
    if (std::abs(cc) <= tol.cubic(c)) {
        out.on_boundary = true;
        return out;
    }
    // Near tau, C < 0 lands in the closure of D1 or in D2, both giving one eigenvalue.
    // C > 0 is split between D1 (none) and the closure of D2 (two), so it stays unlabeled.
    if (std::abs(q1) <= tol.quadratic(c.lambda(), mu)) {
        if (cc < 0.0) {
            out.alpha = 1;
        } else {
            out.on_boundary = true;
        }
        return out;
    }

    const bool in_d1 = q1 > 0.0 && on_d1_side(side, mu, false);
    const bool in_d2 = q1 < 0.0;
    const bool in_d3 = q1 > 0.0 && on_d3_side(side, mu);
    const bool in_cl_d1 = q1 >= 0.0 && on_d1_side(side, mu, true);
    const bool in_cl_d2 = q1 <= 0.0;

    if (cc > 0.0 && in_d1) {
        out.alpha = 0;
    } else if (cc < 0.0 && (in_cl_d1 || in_d2)) {
        out.alpha = 1;
    } else if (cc > 0.0 && (in_cl_d2 || in_d3)) {
        out.alpha = 2;
    } else if (cc < 0.0 && in_d3) {
        out.alpha = 3;
    } else {
        std::ostringstream msg;
        msg.precision(17);
        msg << "no component matches (" << c.gamma() << ", " << c.lambda() << ", " << c.mu()
            << ") on side " << to_string(side);
        throw ClassificationError(msg.str());
    }
    return out;
}

ComponentLabel predicted_counts(const Couplings& c, const BoundaryTolerance& tol) {
    const RegionLabel lo = classify_component(Side::below, c, tol);
    const RegionLabel hi = classify_component(Side::above, c, tol);
    ComponentLabel out;
    out.alpha = lo.alpha;
    out.beta = hi.alpha;
    out.valid = lo.alpha && hi.alpha && *lo.alpha + *hi.alpha <= 3;
    return out;
}

}  // namespace lbs
