#pragma once

#include "lbs/model.hpp"

namespace lbs {

// Resolvent moments of the free fiber operator against 1, cos t, cos 2t:
//   a = <2/(E-z)>, b = <2 cos t/(E-z)>, c = <2 cos 2t/(E-z)>,
//   d = <2 cos^2 t/(E-z)>, e = <2 cos t cos 2t/(E-z)>, f = <2 cos^2 2t/(E-z)>,
// where <g> = (1/2pi) * integral of g over (-pi, pi].
struct BandIntegrals {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;
    double e = 0.0;
    double f = 0.0;
};

inline constexpr double default_edge_guard = 1e-12;

// Closed-form quantities at distance delta beyond a band edge, with B = 2 cos(k/2):
//   s = sqrt(delta (delta + 2B)),  r = 1/(B + delta + s),  rho = B r.
// Everything stays finite and cancellation-free as delta -> 0.
struct EdgeFrame {
    double delta = 0.0;
    double s = 0.0;
    double r = 0.0;
    double rho = 0.0;
};

EdgeFrame edge_frame(double band_half_width, double delta);

// I_n(k, z) = (1/2pi) * integral of cos(nt)/(E_k(t) - z), n in [0, 4].
double moment(int n, const Quasimomentum& k, double z, double edge_guard = default_edge_guard);

BandIntegrals band_integrals(const Quasimomentum& k, double z,
                             double edge_guard = default_edge_guard);

// Same integrals by adaptive Gauss-Kronrod quadrature of the defining integrands.
// Throws QuadratureError when the requested relative tolerance is not reached.
BandIntegrals band_integrals_quadrature(const Quasimomentum& k, double z, double rel_tol = 1e-12);

}  // namespace lbs
