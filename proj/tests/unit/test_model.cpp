#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <limits>

#include <lbs/model.hpp>

#include "generators.hpp"

using namespace lbs;

TEST_CASE("couplings reject non-finite values") {
    CHECK_NOTHROW(Couplings(1.0, -2.0, 3.0));
    CHECK_THROWS_AS(Couplings(std::nan(""), 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(Couplings(0, std::numeric_limits<double>::infinity(), 0), std::invalid_argument);
    CHECK_THROWS_AS(Couplings(0, 0, -std::numeric_limits<double>::infinity()), std::invalid_argument);
    const Couplings c(1, -2, 3);
    CHECK(-c == Couplings(-1, 2, -3));
}

TEST_CASE("quasimomentum reduces into (-pi, pi]") {
    CHECK(Quasimomentum(0.0).value() == 0.0);
    CHECK(Quasimomentum(pi).value() == pi);
    CHECK(Quasimomentum(-pi).value() == pi);
    CHECK(Quasimomentum(3.0 * pi).value() == doctest::Approx(pi));
    CHECK(Quasimomentum(2.0 * pi + 0.25).value() == doctest::Approx(0.25));
    CHECK(Quasimomentum(-2.0 * pi - 0.25).value() == doctest::Approx(-0.25));
    CHECK_THROWS_AS(Quasimomentum(std::nan("")), std::invalid_argument);

    test::for_all(11, 2000, [](test::Gen& g, int) {
        const double k = g.real(-50.0, 50.0);
        const double r = Quasimomentum(k).value();
        REQUIRE(r > -pi);
        REQUIRE(r <= pi);
        const double turns = (k - r) / (2.0 * pi);
        CHECK(std::abs(turns - std::round(turns)) < 1e-12);
    });
}

TEST_CASE("band collapses exactly at k = pi") {
    const Quasimomentum k(pi);
    CHECK(k.half_cos() == 0.0);
    CHECK(k.is_degenerate());
    for (double p : {-3.0, -1.0, 0.0, 0.5, 2.0, 3.1}) {
        CHECK(dispersion(k, p) == 2.0);
    }
    const SpectralWindow w = spectral_window(k);
    CHECK(w.e_min == 2.0);
    CHECK(w.e_max == 2.0);
}

TEST_CASE("dispersion examples") {
    const Quasimomentum k0(0.0);
    CHECK(dispersion(k0, 0.0) == 0.0);
    CHECK(dispersion(k0, pi) == 4.0);
}

TEST_CASE("spectral window examples") {
    SpectralWindow w = spectral_window(Quasimomentum(0.0));
    CHECK(w.e_min == 0.0);
    CHECK(w.e_max == 4.0);
    w = spectral_window(Quasimomentum(pi / 2));
    CHECK(w.e_min == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-15));
    CHECK(w.e_max == doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-15));
    CHECK(w.distance(-1.0) == doctest::Approx(2.0 - std::sqrt(2.0) + 1.0));
    CHECK(w.distance(2.0) < 0.0);
}

TEST_CASE("window and dispersion invariants") {
    test::for_all(12, 2000, [](test::Gen& g, int) {
        const Quasimomentum k = g.k();
        const SpectralWindow w = spectral_window(k);
        CHECK(0.0 <= w.e_min);
        CHECK(w.e_min <= 2.0);
        CHECK(2.0 <= w.e_max);
        CHECK(w.e_max <= 4.0);
        CHECK(w.e_min + w.e_max == doctest::Approx(4.0).epsilon(1e-15));
        CHECK(w.width() == doctest::Approx(4.0 * std::cos(0.5 * k.value())).epsilon(1e-14));
        if (k.value() != pi) {
            CHECK(w.e_min < w.e_max);
        }

        const double p = g.real(-10.0, 10.0);
        const double e = dispersion(k, p);
        CHECK(e >= w.e_min - 1e-15);
        CHECK(e <= w.e_max + 1e-15);
        CHECK(dispersion(k, p + pi) == doctest::Approx(4.0 - e).epsilon(1e-14));
        CHECK(dispersion(k, -p) == e);
        CHECK(dispersion(Quasimomentum(-k.value()), p) == e);
    });
}
