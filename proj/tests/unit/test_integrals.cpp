#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include <lbs/errors.hpp>
#include <lbs/integrals.hpp>

#include "generators.hpp"
#include "reference.hpp"

using namespace lbs;

namespace {

std::array<double, 6> as_array(const BandIntegrals& v) { return {v.a, v.b, v.c, v.d, v.e, v.f}; }

double max_rel(const std::array<double, 6>& x, const std::array<double, 6>& y) {
    double worst = 0.0;
    for (int i = 0; i < 6; ++i) {
        worst = std::max(worst, std::abs(x[i] - y[i]) / std::max(1.0, std::abs(y[i])));
    }
    return worst;
}

}  // namespace

TEST_CASE("moment examples") {
    const Quasimomentum k0(0.0);
    CHECK(moment(0, k0, -1.0) == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-15));
    CHECK(moment(1, k0, -1.0) == doctest::Approx((3.0 - std::sqrt(5.0)) / (2.0 * std::sqrt(5.0))).epsilon(1e-14));
    CHECK(moment(0, Quasimomentum(pi), 0.0) == 0.5);
    CHECK(moment(3, Quasimomentum(pi), 0.0) == 0.0);
}

TEST_CASE("moment rejects bad arguments") {
    const Quasimomentum k0(0.0);
    CHECK_THROWS_AS(moment(0, k0, 1.0), DomainError);
    CHECK_THROWS_AS(moment(0, k0, 0.0), DomainError);
    CHECK_THROWS_AS(moment(0, k0, 4.0), DomainError);
    CHECK_THROWS_AS(moment(0, k0, -1e-13), DomainError);
    CHECK_NOTHROW(moment(0, k0, -1e-11));
    CHECK_THROWS_AS(moment(0, k0, std::nan("")), DomainError);
    CHECK_THROWS_AS(moment(0, Quasimomentum(pi), 2.0), DomainError);
    CHECK_THROWS_AS(moment(5, k0, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(moment(-1, k0, -1.0), std::invalid_argument);
}

TEST_CASE("band integral examples") {
    const BandIntegrals v = band_integrals(Quasimomentum(0.0), -1.0);
    CHECK(v.a == doctest::Approx(2.0 / std::sqrt(5.0)).epsilon(1e-15));
    CHECK(v.b == doctest::Approx(0.3416407864998738).epsilon(1e-14));

    const BandIntegrals far = band_integrals(Quasimomentum(0.0), -1e6);
    CHECK(far.a == doctest::Approx(2.0 / std::sqrt(1e12 + 4e6)).epsilon(1e-12));

    for (double dist : {1e-4, 1e-6, 1e-8}) {
        const BandIntegrals lo = band_integrals(Quasimomentum(0.0), -dist);
        CHECK(std::abs(lo.a * std::sqrt(dist) - 1.0) <= 2.0 * std::sqrt(dist));
        const BandIntegrals hi = band_integrals(Quasimomentum(0.0), 4.0 + dist);
        CHECK(std::abs(hi.c + 1.0 / std::sqrt(dist) - 2.0) <= 4.0 * std::sqrt(dist));
    }
}

// 40-digit reference values of the defining integrals.
TEST_CASE("band integrals match high-precision references") {
    struct Case {
        double k;
        double z;
        std::array<double, 6> expected;
    };
    const double c6 = std::cos(pi / 6.0);
    const double c4 = std::cos(pi / 4.0);
    const Case cases[] = {
        {pi / 3.0, 2.0 + 2.0 * c6 + 0.7,
         {-1.1714407197463020525, 0.49017231178670203412, -0.20510546645019704092,
          -0.6882730930982495467, 0.28799785383729655321, -0.60367613503899279011}},
        {0.0, -0.5,
         {4.0 / 3.0, 2.0 / 3.0, 1.0 / 3.0, 5.0 / 6.0, 5.0 / 12.0, 17.0 / 24.0}},
        {pi / 2.0, 2.0 - 2.0 * c4 - 0.3,
         {2.0644594025896711676, 1.088183813133221689, 0.57358551574313375589,
          1.3190224591664024618, 0.69526137807483968318, 1.1119116614868395031}},
    };
    for (const Case& cs : cases) {
        CAPTURE(cs.k);
        const auto got = as_array(band_integrals(Quasimomentum(cs.k), cs.z));
        CHECK(max_rel(got, cs.expected) <= 1e-13);
        const auto quad = as_array(band_integrals_quadrature(Quasimomentum(cs.k), cs.z));
        CHECK(max_rel(quad, cs.expected) <= 1e-12);
    }
}

TEST_CASE("closed form agrees with quadrature and with the trapezoid reference") {
    test::for_all(21, 100, [](test::Gen& g, int i) {
        CAPTURE(i);
        const Quasimomentum k(g.real(-3.0, 3.0));
        const Side side = g.side();
        const double z = g.energy_outside(k, side, -3.0, 1.0);
        const auto closed = as_array(band_integrals(k, z));
        const auto quad = as_array(band_integrals_quadrature(k, z));
        CHECK(max_rel(closed, quad) <= 1e-10);
        const auto trap = test::trapezoid_integrals(k.value(), z, 4000);
        CHECK(max_rel(closed, trap) <= 1e-10);
    });
}

TEST_CASE("sign and monotonicity of the even integrals") {
    test::for_all(22, 300, [](test::Gen& g, int) {
        const Quasimomentum k(g.real(-3.0, 3.0));
        const Side side = g.side();
        const double z = g.energy_outside(k, side, -6.0, 2.0);
        const double step = 1e-3 * spectral_window(k).distance(z);
        const double z_far = side == Side::below ? z - step : z + step;
        const BandIntegrals v = band_integrals(k, z);
        const BandIntegrals w = band_integrals(k, z_far);
        const double sg = side == Side::below ? 1.0 : -1.0;
        CHECK(sg * v.a > 0.0);
        CHECK(sg * v.d > 0.0);
        CHECK(sg * v.f > 0.0);
        // Increasing in z on both sides: the derivative is an integral of 2/(E - z)^2.
        const double dz = z - z_far;
        CHECK((v.a - w.a) / dz > 0.0);
        CHECK((v.d - w.d) / dz > 0.0);
        CHECK((v.f - w.f) / dz > 0.0);
    });
}

TEST_CASE("mirror identity of the moments") {
    test::for_all(23, 300, [](test::Gen& g, int) {
        const Quasimomentum k(g.real(-3.0, 3.0));
        const double z = g.energy_outside(k, Side::below, -4.0, 2.0);
        const double dist = spectral_window(k).distance(z);
        for (int n = 0; n <= 4; ++n) {
            const double lo = moment(n, k, z);
            const double hi = moment(n, k, 4.0 - z);
            const double sign = n % 2 == 0 ? -1.0 : 1.0;
            // 4 - z rounds; the moment amplifies that by roughly 1/dist.
            CHECK(std::abs(lo - sign * hi) <= 1e-13 * std::abs(lo) * (1.0 + std::abs(z) / dist));
        }
    });
}

TEST_CASE("edge frame stays finite at the edge") {
    const EdgeFrame f = edge_frame(2.0, 0.0);
    CHECK(f.s == 0.0);
    CHECK(f.r == 0.5);
    CHECK(f.rho == 1.0);
    const EdgeFrame g = edge_frame(2.0, 1.0);
    CHECK(g.s == doctest::Approx(std::sqrt(5.0)));
    CHECK(g.rho == doctest::Approx((3.0 - std::sqrt(5.0)) / 2.0));
}

TEST_CASE("quadrature reports failure close to the edge") {
    CHECK_THROWS_AS(band_integrals_quadrature(Quasimomentum(0.0), -1e-14), QuadratureError);
    CHECK_THROWS_AS(band_integrals_quadrature(Quasimomentum(0.0), 2.0), DomainError);
}
