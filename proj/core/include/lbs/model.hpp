#pragma once

#include <numbers>

namespace lbs {

inline constexpr double pi = std::numbers::pi;

// Which side of the band a quantity refers to.
enum class Side { below, above };

constexpr const char* to_string(Side s) noexcept { return s == Side::below ? "below" : "above"; }

// Interaction strengths: on-site, nearest-neighbour, next-nearest-neighbour.
class Couplings {
public:
    Couplings() = default;
    Couplings(double gamma, double lambda, double mu);

    double gamma() const noexcept { return gamma_; }
    double lambda() const noexcept { return lambda_; }
    double mu() const noexcept { return mu_; }

    Couplings operator-() const noexcept { return Couplings(-gamma_, -lambda_, -mu_, 0); }
    bool operator==(const Couplings&) const = default;

private:
    Couplings(double g, double l, double m, int) noexcept : gamma_(g), lambda_(l), mu_(m) {}

    double gamma_ = 0.0;
    double lambda_ = 0.0;
    double mu_ = 0.0;
};

// Total quasimomentum, stored as its representative in (-pi, pi].
class Quasimomentum {
public:
    Quasimomentum() = default;
    explicit Quasimomentum(double k);

    double value() const noexcept { return k_; }
    // cos(k/2), forced to exactly zero at k = pi.
    double half_cos() const noexcept { return half_cos_; }
    // Bandwidth parameter 2 cos(k/2).
    double band_half_width() const noexcept { return 2.0 * half_cos_; }
    bool is_degenerate() const noexcept { return half_cos_ == 0.0; }

    bool operator==(const Quasimomentum& o) const noexcept { return k_ == o.k_; }

private:
    double k_ = 0.0;
    double half_cos_ = 1.0;
};

struct SpectralWindow {
    double e_min = 0.0;
    double e_max = 4.0;

    double width() const noexcept { return e_max - e_min; }
    bool contains(double z) const noexcept { return z >= e_min && z <= e_max; }
    // Signed distance to the window: positive outside, zero or negative inside.
    double distance(double z) const noexcept;
};

double dispersion(const Quasimomentum& k, double p);

SpectralWindow spectral_window(const Quasimomentum& k);

}  // namespace lbs
