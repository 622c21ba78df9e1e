#include "lbs/determinant.hpp"

#include <cmath>

#include "lbs/errors.hpp"

namespace lbs {

namespace {

double cubic_scale(const Couplings& c) {
    const double s = 1.0 + std::abs(c.gamma()) + std::abs(c.lambda()) + std::abs(c.mu());
    return s * s * s;
}

// T with rho and r at the edge values 1 and 1/B.
double edge_numerator(const Couplings& c, double b) {
    const double g = c.gamma(), l = c.lambda(), m = c.mu();
    const double r = 1.0 / b;
    return 2.0 * (g + l + m) + 2.0 * r * (2.0 * g * l + 2.0 * (2.0 * g + l) * m) +
           8.0 * g * l * m * r * r;
}

// dT/ds at s = 0, using drho/ds = -1/B and dr/ds = -1/B^2 there.
double edge_slope(const Couplings& c, double b) {
    const double g = c.gamma(), l = c.lambda(), m = c.mu();
    const double b2 = b * b;
    return -(2.0 * l + 4.0 * m) / b - 4.0 * (2.0 * g + l) * m / b2 -
           2.0 * (2.0 * g * l + 2.0 * (2.0 * g + l) * m) / b2 - 16.0 * g * l * m / (b2 * b);
}

}  // namespace

double fredholm_det(const Couplings& c, const BandIntegrals& v) {
    const double g = c.gamma(), l = c.lambda(), m = c.mu();
    const double m00 = 1.0 + g * v.a, m01 = l * v.b, m02 = m * v.c;
    const double m10 = g * v.b, m11 = 1.0 + l * v.d, m12 = m * v.e;
    const double m20 = g * v.c, m21 = l * v.e, m22 = 1.0 + m * v.f;
    return m00 * (m11 * m22 - m12 * m21) - m01 * (m10 * m22 - m12 * m20) +
           m02 * (m10 * m21 - m11 * m20);
}

double fredholm_det(const Couplings& c, const Quasimomentum& k, double z, double edge_guard) {
    return fredholm_det(c, band_integrals(k, z, edge_guard));
}

double scaled_det(const Couplings& c, const EdgeFrame& f) {
    if (!std::isfinite(f.r)) {
        throw DomainError("scaled determinant is undefined at the edge of a collapsed band");
    }
    const double g = c.gamma(), l = c.lambda(), m = c.mu();
    const double rho2 = f.rho * f.rho;
    const double t = 2.0 * g + l * (1.0 + rho2) + m * (1.0 + rho2 * rho2) +
                     2.0 * f.r * (2.0 * g * l + (2.0 * g + l) * m * (1.0 + rho2)) +
                     8.0 * g * l * m * f.r * f.r;
    return f.s + t;
}

double scaled_det(const Couplings& c, double band_half_width, Side side, double delta) {
    return scaled_det(side_couplings(c, side), edge_frame(band_half_width, delta));
}

std::array<double, 9> reduced_form(const Couplings& c, const EdgeFrame& f) {
    const double g = c.gamma(), l = c.lambda(), m = c.mu();
    const double p = f.rho, p2 = p * p;
    // s D^-1 + L^T diag(g, l, m) L with L = [[1,0,0],[p,1,0],[p^2,p,1]].
    const double y00 = 0.5 * f.s + g + l * p2 + m * p2 * p2;
    const double y01 = l * p + m * p2 * p;
    const double y02 = m * p2;
    const double inv = std::isfinite(f.r) ? 0.5 / f.r : f.delta;
    const double y11 = inv + l + m * p2;
    const double y12 = m * p;
    const double y22 = inv + m;
    return {y00, y01, y02, y01, y11, y12, y02, y12, y22};
}

ThresholdCoefficients threshold_coefficients(const Couplings& c) {
    const double g = c.gamma(), l = c.lambda(), m = c.mu();
    const double cubic = g + l + m + g * l * m;
    const double quad = g * l + 2.0 * g * m + l * m;
    const double lin = l + 2.0 * m + 2.0 * g * l * m;
    const double even = g * l + 4.0 * g * m + 2.0 * l * m;
    ThresholdCoefficients t;
    t.c_minus = cubic + quad;
    t.c_plus = -cubic + quad;
    t.d_minus = 1.0 - even - lin;
    t.d_plus = 1.0 - even + lin;
    return t;
}

EdgeExpansion edge_expansion(const Couplings& c, const Quasimomentum& k, Side side) {
    const double b = k.band_half_width();
    if (b == 0.0) {
        throw DomainError("no edge expansion for a collapsed band");
    }
    const Couplings cs = side_couplings(c, side);
    return EdgeExpansion{edge_numerator(cs, b) / std::sqrt(2.0 * b), 1.0 + edge_slope(cs, b)};
}

EdgeLimit det_edge_limit(const Couplings& c, const Quasimomentum& k, Side side,
                         double rel_tol) {
    const EdgeExpansion x = edge_expansion(c, k, side);
    if (std::abs(x.c) <= rel_tol * cubic_scale(c)) {
        return EdgeLimit{0, x.d};
    }
    return EdgeLimit{x.c > 0.0 ? 1 : -1, 0.0};
}

EdgeLimit det_edge_limit(const Couplings& c, Side side, double rel_tol) {
    const ThresholdCoefficients t = threshold_coefficients(c);
    const double cc = side == Side::below ? t.c_minus : t.c_plus;
    if (std::abs(cc) <= rel_tol * cubic_scale(c)) {
        return EdgeLimit{0, side == Side::below ? t.d_minus : t.d_plus};
    }
    return EdgeLimit{cc > 0.0 ? 1 : -1, 0.0};
}

}  // namespace lbs
