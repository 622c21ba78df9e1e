#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <lbs/symmetric_eigen.hpp>

#include "generators.hpp"
#include "reference.hpp"

using namespace lbs;

namespace {

SymmetricMatrix random_symmetric(test::Gen& g, std::size_t n) {
    SymmetricMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            a(i, j) = a(j, i) = g.real(-1.0, 1.0);
        }
    }
    return a;
}

double max_diff(const std::vector<double>& x, const std::vector<double>& y) {
    REQUIRE(x.size() == y.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        worst = std::max(worst, std::abs(x[i] - y[i]));
    }
    return worst;
}

}  // namespace

TEST_CASE("small known spectra") {
    SymmetricMatrix a(2);
    a(0, 0) = 2;
    a(1, 1) = 2;
    a(0, 1) = a(1, 0) = 1;
    for (const auto& ev : {jacobi_eigenvalues(a), householder_eigenvalues(a)}) {
        REQUIRE(ev.size() == 2);
        CHECK(ev[0] == doctest::Approx(1.0));
        CHECK(ev[1] == doctest::Approx(3.0));
    }
    const auto t = tridiagonal_eigenvalues({2, 2, 2}, {-1, -1});
    CHECK(t[0] == doctest::Approx(2.0 - std::sqrt(2.0)));
    CHECK(t[1] == doctest::Approx(2.0));
    CHECK(t[2] == doctest::Approx(2.0 + std::sqrt(2.0)));
    CHECK_THROWS_AS(jacobi_eigenvalues(SymmetricMatrix(0)), std::invalid_argument);
}

TEST_CASE("dense solvers agree") {
    test::for_all(51, 40, [](test::Gen& g, int i) {
        const std::size_t n = 1 + static_cast<std::size_t>(g.rng.below(40));
        CAPTURE(i);
        const SymmetricMatrix a = random_symmetric(g, n);
        const auto j = jacobi_eigenvalues(a);
        const auto h = householder_eigenvalues(a);
        CHECK(max_diff(j, h) <= 1e-12);
        CHECK(std::is_sorted(j.begin(), j.end()));
        double trace = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            trace += a(k, k);
        }
        double sum = 0.0;
        for (double v : h) {
            sum += v;
        }
        CHECK(sum == doctest::Approx(trace).epsilon(1e-12).scale(1.0));
    });
}

TEST_CASE("tridiagonal solver matches Sturm counts") {
    test::for_all(52, 40, [](test::Gen& g, int) {
        const std::size_t n = 2 + static_cast<std::size_t>(g.rng.below(60));
        std::vector<double> d(n), e(n - 1);
        for (double& x : d) {
            x = g.real(-3.0, 3.0);
        }
        for (double& x : e) {
            x = g.real(-1.0, 1.0);
        }
        const auto ev = tridiagonal_eigenvalues(d, e);
        for (std::size_t k = 0; k + 1 < n; ++k) {
            const double mid = 0.5 * (ev[k] + ev[k + 1]);
            if (ev[k + 1] - ev[k] > 1e-9) {
                CHECK(test::sturm_count(d, e, mid) == static_cast<int>(k + 1));
            }
        }
    });
}

TEST_CASE("structured diagonal plus rank three matches dense") {
    test::for_all(53, 30, [](test::Gen& g, int i) {
        const std::size_t n = 1 + static_cast<std::size_t>(g.rng.below(120));
        CAPTURE(i);
        CAPTURE(n);
        std::vector<double> d(n);
        std::vector<std::array<double, 3>> w(n);
        for (std::size_t k = 0; k < n; ++k) {
            d[k] = g.real(0.0, 4.0);
            w[k] = {g.real(-1.0, 1.0), g.real(-1.0, 1.0), g.real(-1.0, 1.0)};
        }
        const std::array<double, 3> gs = {g.real(-5.0, 5.0), g.real(-5.0, 5.0), g.real(-5.0, 5.0)};
        SymmetricMatrix a(n);
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = 0; q < n; ++q) {
                double v = p == q ? d[p] : 0.0;
                for (int r = 0; r < 3; ++r) {
                    v += w[p][r] * gs[r] * w[q][r];
                }
                a(p, q) = v;
            }
        }
        const auto ref = householder_eigenvalues(a);
        const auto got = diagonal_plus_rank3_eigenvalues(d, w, gs);
        CHECK(max_diff(got, ref) <= 1e-11 * (1.0 + static_cast<double>(n)));
    });
}

TEST_CASE("solvers are deterministic") {
    test::Gen g(54);
    const SymmetricMatrix a = random_symmetric(g, 30);
    CHECK(householder_eigenvalues(a) == householder_eigenvalues(a));
    CHECK(jacobi_eigenvalues(a) == jacobi_eigenvalues(a));
}

TEST_CASE("negative inertia of 3x3 matrices") {
    CHECK(negative_inertia({1, 0, 0, 0, 1, 0, 0, 0, 1}) == 0);
    CHECK(negative_inertia({-1, 0, 0, 0, 2, 0, 0, 0, -3}) == 2);
    CHECK(negative_inertia({0, 1, 0, 1, 0, 0, 0, 0, 1}) == 1);
    test::for_all(55, 500, [](test::Gen& g, int) {
        SymmetricMatrix a = random_symmetric(g, 3);
        const auto ev = householder_eigenvalues(a);
        if (std::min({std::abs(ev[0]), std::abs(ev[1]), std::abs(ev[2])}) < 1e-9) {
            return;
        }
        const int expected = static_cast<int>(std::count_if(ev.begin(), ev.end(), [](double v) { return v < 0.0; }));
        std::array<double, 9> m{};
        std::copy(a.data().begin(), a.data().end(), m.begin());
        CHECK(negative_inertia(m) == expected);
    });
}
