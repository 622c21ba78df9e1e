#pragma once

#include <array>

#include "lbs/integrals.hpp"
#include "lbs/model.hpp"

namespace lbs {

// det of [[1+ga, lb, mc], [gb, 1+ld, me], [gc, le, 1+mf]] by cofactor expansion.
double fredholm_det(const Couplings& c, const BandIntegrals& v);
double fredholm_det(const Couplings& c, const Quasimomentum& k, double z,
                    double edge_guard = default_edge_guard);

// Couplings as seen from one side: above the band the determinant of (g, l, m)
// coincides with the below-band determinant of (-g, -l, -m) at the same distance.
inline Couplings side_couplings(const Couplings& c, Side side) {
    return side == Side::below ? c : -c;
}

// s * Delta at distance delta beyond the edge on the given side. Analytic in s,
// finite at the edge, and equal to the edge numerator T_edge at delta = 0.
double scaled_det(const Couplings& c, double band_half_width, Side side, double delta);
double scaled_det(const Couplings& c, const EdgeFrame& f);

// Symmetric 3x3 matrix Y with det(Y) = (s + T) / (8 r^2) whose negative inertia is
// the number of eigenvalues farther than delta from the edge (below side couplings).
std::array<double, 9> reduced_form(const Couplings& c, const EdgeFrame& f);

struct ThresholdCoefficients {
    double c_minus = 0.0;
    double c_plus = 0.0;
    double d_minus = 0.0;
    double d_plus = 0.0;
};

// Delta(0; z) = C-/sqrt(-z) + D- + O(sqrt(-z)) as z -> 0-, and the mirrored pair at z -> 4+.
ThresholdCoefficients threshold_coefficients(const Couplings& c);

// Same expansion at arbitrary k in the variable delta = distance to the edge.
struct EdgeExpansion {
    double c = 0.0;
    double d = 0.0;
};

EdgeExpansion edge_expansion(const Couplings& c, const Quasimomentum& k, Side side);

struct EdgeLimit {
    // +1 or -1 when Delta diverges at the edge, 0 when it has a finite limit.
    int diverges_to = 0;
    double finite_limit = 0.0;

    bool diverges() const noexcept { return diverges_to != 0; }
};

// Behaviour of Delta(0; z) at the band edge. C is treated as zero when
// |C| <= rel_tol * (1 + |g| + |l| + |m|)^3.
EdgeLimit det_edge_limit(const Couplings& c, Side side, double rel_tol = 1e-12);
EdgeLimit det_edge_limit(const Couplings& c, const Quasimomentum& k, Side side,
                         double rel_tol = 1e-12);

}  // namespace lbs
