#include "lbs/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lbs/errors.hpp"

namespace lbs {

Couplings::Couplings(double gamma, double lambda, double mu)
    : gamma_(gamma), lambda_(lambda), mu_(mu) {
    if (!std::isfinite(gamma) || !std::isfinite(lambda) || !std::isfinite(mu)) {
        throw std::invalid_argument("couplings must be finite");
    }
}

Quasimomentum::Quasimomentum(double k) {
    if (!std::isfinite(k)) {
        throw std::invalid_argument("quasimomentum must be finite");
    }
    double r = std::remainder(k, 2.0 * pi);
    if (r <= -pi) {
        r = pi;
    }
    k_ = r;
    // cos(pi/2) evaluates to 6e-17 in floating point; the band must collapse exactly.
    half_cos_ = (r == pi || r == -pi) ? 0.0 : std::cos(0.5 * r);
}

double SpectralWindow::distance(double z) const noexcept {
    if (z < e_min) {
        return e_min - z;
    }
    if (z > e_max) {
        return z - e_max;
    }
    return -std::min(z - e_min, e_max - z);
}

double dispersion(const Quasimomentum& k, double p) {
    return 2.0 * (1.0 - k.half_cos() * std::cos(p));
}

SpectralWindow spectral_window(const Quasimomentum& k) {
    const double b = k.band_half_width();
    return SpectralWindow{2.0 - b, 2.0 + b};
}

}  // namespace lbs
