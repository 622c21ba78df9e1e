#include "lbs/integrals.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "lbs/errors.hpp"

namespace lbs {

namespace {

struct Placement {
    Side side;
    double delta;
};

Placement place(const Quasimomentum& k, double z, double edge_guard) {
    if (!std::isfinite(z)) {
        throw DomainError("energy must be finite");
    }
    const SpectralWindow w = spectral_window(k);
    if (z < w.e_min && w.e_min - z >= edge_guard) {
        return {Side::below, w.e_min - z};
    }
    if (z > w.e_max && z - w.e_max >= edge_guard) {
        return {Side::above, z - w.e_max};
    }
    std::ostringstream msg;
    msg.precision(17);
    msg << "energy " << z << " is not outside [" << w.e_min << ", " << w.e_max
        << "] by at least " << edge_guard;
    throw DomainError(msg.str());
}

std::array<double, 5> moments(const Quasimomentum& k, double z, double edge_guard) {
    const Placement at = place(k, z, edge_guard);
    const EdgeFrame f = edge_frame(k.band_half_width(), at.delta);
    // Above the band, t -> t + pi maps the integral onto the one below with rho -> -rho.
    const double step = at.side == Side::below ? f.rho : -f.rho;
    const double sign = at.side == Side::below ? 1.0 : -1.0;
    std::array<double, 5> out{};
    double pw = 1.0;
    for (double& v : out) {
        v = sign * pw / f.s;
        pw *= step;
    }
    return out;
}

}  // namespace

EdgeFrame edge_frame(double band_half_width, double delta) {
    if (!(delta >= 0.0) || !(band_half_width >= 0.0)) {
        throw DomainError("edge frame needs non-negative distance and bandwidth");
    }
    EdgeFrame f;
    f.delta = delta;
    f.s = std::sqrt(delta * (delta + 2.0 * band_half_width));
    const double denom = band_half_width + delta + f.s;
    f.r = denom > 0.0 ? 1.0 / denom : std::numeric_limits<double>::infinity();
    f.rho = band_half_width == 0.0 ? 0.0 : band_half_width * f.r;
    return f;
}

double moment(int n, const Quasimomentum& k, double z, double edge_guard) {
    if (n < 0 || n > 4) {
        throw std::invalid_argument("moment order must lie in [0, 4]");
    }
    return moments(k, z, edge_guard)[static_cast<std::size_t>(n)];
}

BandIntegrals band_integrals(const Quasimomentum& k, double z, double edge_guard) {
    const auto m = moments(k, z, edge_guard);
    return BandIntegrals{2.0 * m[0],     2.0 * m[1],     2.0 * m[2],
                         m[0] + m[2], m[1] + m[3], m[0] + m[4]};
}

BandIntegrals band_integrals_quadrature(const Quasimomentum& k, double z, double rel_tol) {
    place(k, z, 0.0);
    using boost::math::quadrature::gauss_kronrod;
    constexpr unsigned max_depth = 20;

    // Integrands are even in t, so (1/2pi) over (-pi, pi] equals (1/pi) over [0, pi].
    auto integrate = [&](auto weight) {
        auto g = [&](double t) { return weight(t) / (dispersion(k, t) - z); };
        double err = 0.0;
        double l1 = 0.0;
        const double v = gauss_kronrod<double, 61>::integrate(g, 0.0, pi, max_depth, rel_tol,
                                                               &err, &l1);
        if (!std::isfinite(v) || err > rel_tol * std::max(std::abs(v), l1)) {
            std::ostringstream msg;
            msg.precision(6);
            msg << "quadrature did not converge at z = " << z << " (error estimate " << err
                << ")";
            throw QuadratureError(msg.str());
        }
        return v / pi;
    };

    BandIntegrals out;
    out.a = integrate([](double) { return 2.0; });
    out.b = integrate([](double t) { return 2.0 * std::cos(t); });
    out.c = integrate([](double t) { return 2.0 * std::cos(2.0 * t); });
    out.d = integrate([](double t) { return 2.0 * std::cos(t) * std::cos(t); });
    out.e = integrate([](double t) { return 2.0 * std::cos(t) * std::cos(2.0 * t); });
    out.f = integrate([](double t) { return 2.0 * std::cos(2.0 * t) * std::cos(2.0 * t); });
    return out;
}

}  // namespace lbs
