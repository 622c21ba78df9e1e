#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <lbs/classifier.hpp>
#include <lbs/determinant.hpp>
#include <lbs/errors.hpp>
#include <lbs/solver.hpp>

#include "generators.hpp"

using namespace lbs;

namespace {

void check_close(const std::vector<double>& got, const std::vector<double>& expected, double tol) {
    REQUIRE(got.size() == expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
        CHECK(std::abs(got[i] - expected[i]) <= tol * (1.0 + std::abs(expected[i])));
    }
}

bool off_boundaries(const Couplings& c, double guard) {
    for (Side s : {Side::below, Side::above}) {
        if (std::abs(c_polynomial(s, c)) < guard || std::abs(q_polynomials(s, c.lambda(), c.mu()).q1) < guard) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("solver examples") {
    SpectrumReport r = find_eigenvalues(Couplings(-1, 0, 0), Quasimomentum(0.0));
    check_close(r.below, {2.0 - 2.0 * std::sqrt(2.0)}, 1e-12);
    CHECK(r.above.empty());
    CHECK(r.method == Method::determinant);

    for (double k : {0.0, 1.0, -2.5, pi}) {
        r = find_eigenvalues(Couplings(0, 0, 0), Quasimomentum(k));
        CHECK(r.below.empty());
        CHECK(r.above.empty());
    }

    r = find_eigenvalues(Couplings(-3, -4, -2), Quasimomentum(0.0));
    CHECK(r.n_minus() == 3);
    CHECK(r.n_plus() == 0);
}

// Roots of the 40-digit determinant bracketed on a fine grid and polished.
TEST_CASE("solver matches high-precision roots") {
    struct Case {
        Couplings c;
        double k;
        std::vector<double> below;
        std::vector<double> above;
    };
    const Case cases[] = {
        {Couplings(-3, -4, -2), 0.0, {-4.7800288104459871, -1.77395449126830088, -0.0681516360803510231}, {}},
        {Couplings(0, -1, 0), 0.0, {-0.382975767906237494}, {}},
        {Couplings(3, 4, 2), 0.0, {}, {4.06815163608035102, 5.77395449126830088, 8.7800288104459871}},
        {Couplings(-3, -3, 0), 0.0, {-4.58345118788190639, -0.796598637085361631}, {}},
        {Couplings(1.5, -2, 0.5), pi / 4.0, {-0.616152439034680939}, {5.34089275511073423}},
    };
    for (const Case& cs : cases) {
        CAPTURE(cs.c.gamma());
        const SpectrumReport r = find_eigenvalues(cs.c, Quasimomentum(cs.k));
        check_close(r.below, cs.below, 1e-11);
        check_close(r.above, cs.above, 1e-11);
        CHECK(r.warnings.empty());
    }
}

TEST_CASE("report invariants") {
    test::for_all(61, 300, [](test::Gen& g, int i) {
        CAPTURE(i);
        const Couplings c = g.couplings(5.0);
        const Quasimomentum k(g.real(-3.0, 3.0));
        const SolverOptions opt;
        const SpectrumReport r = find_eigenvalues(c, k, opt);
        CHECK(r.n_minus() <= 3);
        CHECK(r.n_plus() <= 3);
        CHECK(std::is_sorted(r.below.begin(), r.below.end()));
        CHECK(std::is_sorted(r.above.begin(), r.above.end()));
        CHECK(r.residuals.size() == r.below.size() + r.above.size());
        for (double z : r.below) {
            CHECK(z < r.window.e_min);
        }
        for (double z : r.above) {
            CHECK(z > r.window.e_max);
        }
        CHECK(count_beyond(c, k, Side::below, 0.0) == r.n_minus());
        CHECK(count_beyond(c, k, Side::above, 0.0) == r.n_plus());
        for (double z : r.below) {
            const double d = fredholm_det(c, k, z, 0.0);
            const double dz = 1e-7 * (1.0 + std::abs(z));
            const double left = fredholm_det(c, k, z - dz, 0.0);
            const double right = r.window.e_min - (z + dz) > 0 ? fredholm_det(c, k, z + dz, 0.0) : left;
            CHECK((std::abs(d) < 1e-8 || left * right <= 0.0));
        }
    });
}

TEST_CASE("classifier and solver agree at k = 0") {
    test::for_all(62, 2000, [](test::Gen& g, int i) {
        const Couplings c = g.couplings(5.0);
        if (!off_boundaries(c, 1e-4)) {
            return;
        }
        CAPTURE(i);
        const ComponentLabel p = predicted_counts(c);
        const SpectrumReport r = find_eigenvalues(c, Quasimomentum(0.0));
        CHECK(p.alpha == r.n_minus());
        CHECK(p.beta == r.n_plus());
    });
}

TEST_CASE("spectral mirror") {
    test::for_all(63, 200, [](test::Gen& g, int i) {
        CAPTURE(i);
        const Couplings c = g.couplings(5.0);
        const Quasimomentum k(g.real(-3.0, 3.0));
        const SpectrumReport r = find_eigenvalues(c, k);
        const SpectrumReport m = find_eigenvalues(-c, k);
        REQUIRE(r.below.size() == m.above.size());
        for (std::size_t j = 0; j < r.below.size(); ++j) {
            CHECK(std::abs(r.below[j] - (4.0 - m.above[m.above.size() - 1 - j])) <= 1e-8);
        }
    });
}

TEST_CASE("degenerate branch at k = pi") {
    const SpectrumReport r = find_eigenvalues(Couplings(-1, 1, 0), Quasimomentum(pi));
    check_close(r.below, {0.0}, 1e-15);
    check_close(r.above, {3.0}, 1e-15);
    const SpectrumReport s = find_eigenvalues(Couplings(0.25, -0.5, 3), Quasimomentum(-pi));
    check_close(s.below, {1.5}, 1e-15);
    check_close(s.above, {2.5, 5.0}, 1e-15);
}

TEST_CASE("count is non-increasing with distance") {
    test::for_all(64, 200, [](test::Gen& g, int) {
        const Couplings c = g.couplings(5.0);
        const Quasimomentum k(g.real(-3.0, 3.0));
        const Side side = g.side();
        int prev = 3;
        for (double delta : {0.0, 1e-6, 1e-3, 0.1, 1.0, 10.0, 100.0}) {
            const int n = count_beyond(c, k, side, delta);
            CHECK(n <= prev);
            prev = n;
        }
        CHECK(prev == 0);
    });
}

TEST_CASE("interlacing check") {
    CHECK(count_interlacing_check(Couplings(-3, -4, -2)));
    if (predicted_counts(Couplings(-3, -5, -2)).alpha == 3) {
        CHECK(count_interlacing_check(Couplings(-3, -5, -2)));
    }
    CHECK_THROWS_AS(count_interlacing_check(Couplings(0, 0, 1)), PreconditionError);
}

TEST_CASE("k sweep examples") {
    auto reports = k_sweep(Couplings(0, -1, 0), {Quasimomentum(0.0), Quasimomentum(pi / 2)});
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].n_minus() == 1);
    CHECK(reports[1].n_minus() >= 1);
    CHECK(reports[1].k.value() == doctest::Approx(pi / 2));

    reports = k_sweep(Couplings(0, 0, 0), {Quasimomentum(0.3), Quasimomentum(0.0), Quasimomentum(-2.0)});
    for (const auto& r : reports) {
        CHECK(r.n_minus() == 0);
        CHECK(r.n_plus() == 0);
    }

    reports = k_sweep(Couplings(-3, -4, -2), {Quasimomentum(0.0), Quasimomentum(pi / 3), Quasimomentum(2 * pi / 3)});
    for (const auto& r : reports) {
        CHECK(r.n_minus() == 3);
        CHECK(r.n_plus() == 0);
    }

    CHECK_THROWS_AS(k_sweep(Couplings(0, 0, 0), {}), std::invalid_argument);
}

TEST_CASE("k sweep preserves input order") {
    std::vector<Quasimomentum> ks;
    for (int i = 0; i < 24; ++i) {
        ks.emplace_back(-3.0 + 0.25 * i);
    }
    const auto reports = k_sweep(Couplings(1.2, -0.7, 2.1), ks);
    REQUIRE(reports.size() == ks.size());
    for (std::size_t i = 0; i < ks.size(); ++i) {
        CHECK(reports[i].k.value() == ks[i].value());
        const SpectrumReport single = find_eigenvalues(Couplings(1.2, -0.7, 2.1), ks[i]);
        CHECK(reports[i].below == single.below);
        CHECK(reports[i].above == single.above);
    }
}

TEST_CASE("theorem on counts for all k") {
    test::for_all(65, 60, [](test::Gen& g, int i) {
        const Couplings c = g.couplings(5.0);
        if (!off_boundaries(c, 1e-4)) {
            return;
        }
        CAPTURE(i);
        const ComponentLabel p = predicted_counts(c);
        for (int j = 0; j < 6; ++j) {
            const SpectrumReport r = find_eigenvalues(c, Quasimomentum(j * pi / 6.0));
            CHECK(r.n_minus() >= *p.alpha);
            CHECK(r.n_plus() >= *p.beta);
            if (*p.alpha + *p.beta == 3) {
                CHECK(r.n_minus() == *p.alpha);
                CHECK(r.n_plus() == *p.beta);
            }
        }
    });
}

TEST_CASE("points on the tau curve with C < 0 carry one eigenvalue on that side") {
    test::for_all(66, 300, [](test::Gen& g, int i) {
        const double mu = g.real(-5.0, 5.0);
        const double gamma = g.real(-5.0, 5.0);
        for (Side side : {Side::below, Side::above}) {
            const auto lambda = boundary_lambda(side, mu);
            if (!lambda || std::abs(*lambda) > 20.0) {
                continue;
            }
            const Couplings c(gamma, *lambda, mu);
            const RegionLabel label = classify_component(side, c);
            if (c_polynomial(side, c) >= -1e-3) {
                continue;
            }
            CAPTURE(i);
            REQUIRE(label.alpha.has_value());
            CHECK(*label.alpha == 1);
            const SpectrumReport r = find_eigenvalues(c, Quasimomentum(0.0));
            CHECK((side == Side::below ? r.n_minus() : r.n_plus()) == 1);
        }
    });
}
