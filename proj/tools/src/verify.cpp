#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <sstream>

#include <lbs/determinant.hpp>
#include <lbs/errors.hpp>
#include <lbs/integrals.hpp>
#include <lbs/random.hpp>

#include "lbs_cli/commands.hpp"
#include "lbs_cli/json_writer.hpp"

namespace lbs::cli {

namespace {

struct Check {
    std::string name;
    bool pass = true;
    double worst = 0.0;
    std::string note;

    // Records a residual against its bound.
    void bound(double residual, double limit) {
        if (!(residual <= limit)) {
            pass = false;
        }
        if (std::isfinite(residual)) {
            worst = std::max(worst, residual);
        } else {
            worst = residual;
        }
    }
    void require(bool ok) { pass = pass && ok; }
};

Couplings random_couplings(SplitMix64& rng, double box) {
    return Couplings(rng.uniform(-box, box), rng.uniform(-box, box), rng.uniform(-box, box));
}

double cube(double x) { return x * x * x; }

double scale(const Couplings& c) {
    return 1.0 + std::abs(c.gamma()) + std::abs(c.lambda()) + std::abs(c.mu());
}

std::string pm(int n_minus, int n_plus) {
    return "(" + std::to_string(n_minus) + "," + std::to_string(n_plus) + ")";
}

const std::vector<Couplings>& anchors() {
    static const std::vector<Couplings> a{{0, 0, 1}, {0, -1, 0}, {-3, -3, 0}, {-3, -4, -2}, {3, 4, 2}};
    return a;
}

std::vector<Quasimomentum> k_grid() {
    std::vector<Quasimomentum> ks;
    for (int i = 0; i < 6; ++i) {
        ks.emplace_back(i * pi / 6.0);
    }
    return ks;
}

// A segment whose 100 sample points all carry the same off-boundary label.
bool segment_in_component(SplitMix64& rng, std::vector<Couplings>& pts, ComponentLabel& label) {
    BoundaryTolerance guard;
    guard.abs = 1e-3;
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const Couplings p0 = random_couplings(rng, 5.0);
        double dx = rng.uniform(-1, 1), dy = rng.uniform(-1, 1), dz = rng.uniform(-1, 1);
        const double len = rng.uniform(0.2, 2.0) / std::max(1e-12, std::sqrt(dx * dx + dy * dy + dz * dz));
        dx *= len;
        dy *= len;
        dz *= len;
        pts.clear();
        bool ok = true;
        for (int i = 0; i < 100 && ok; ++i) {
            const double t = i / 99.0;
            const Couplings c(p0.gamma() + t * dx, p0.lambda() + t * dy, p0.mu() + t * dz);
            const ComponentLabel l = predicted_counts(c, guard);
            if (!l.valid) {
                ok = false;
            } else if (i == 0) {
                label = l;
            } else {
                ok = l.alpha == label.alpha && l.beta == label.beta;
            }
            pts.push_back(c);
        }
        if (ok) {
            return true;
        }
    }
    return false;
}

}  // namespace

int cmd_verify(std::uint64_t seed, int samples, const Settings& s, std::ostream& out) {
    if (samples < 1) {
        throw UsageError("samples must be at least 1");
    }
    SplitMix64 master(seed);
    std::vector<Check> checks;
    std::uint64_t stream = 0;
    auto run = [&](const std::string& name, const std::function<void(Check&, SplitMix64&)>& body) {
        Check c;
        c.name = name;
        SplitMix64 rng = master.split(stream++);
        try {
            body(c, rng);
        } catch (const std::exception& e) {
            c.pass = false;
            c.note = std::string("exception: ") + e.what();
        }
        checks.push_back(std::move(c));
    };
    const std::size_t n = static_cast<std::size_t>(samples);
    const BoundaryTolerance guard{1e-12, 1e-4};

    run("window symmetric about 2 with width 4 cos(k/2)", [&](Check& c, SplitMix64& rng) {
        for (std::size_t i = 0; i < n; ++i) {
            const Quasimomentum k(rng.uniform(-pi, pi));
            const SpectralWindow w = spectral_window(k);
            c.bound(std::abs(w.e_min + w.e_max - 4.0), 1e-15);
            c.bound(std::abs(w.width() - 4.0 * std::cos(0.5 * k.value())), 1e-14);
        }
    });

    run("dispersion reflection E(p + pi) = 4 - E(p), even in p and k", [&](Check& c, SplitMix64& rng) {
        for (std::size_t i = 0; i < n; ++i) {
            const double kv = rng.uniform(-pi, pi), p = rng.uniform(-pi, pi);
            const Quasimomentum k(kv), mk(-kv);
            c.bound(std::abs(dispersion(k, p + pi) + dispersion(k, p) - 4.0), 1e-14);
            c.bound(std::abs(dispersion(k, p) - dispersion(k, -p)), 0.0);
            c.bound(std::abs(dispersion(k, p) - dispersion(mk, p)), 0.0);
        }
    });

    run("band integrals: closed form vs adaptive quadrature", [&](Check& c, SplitMix64& rng) {
        for (std::size_t i = 0; i < std::min<std::size_t>(n, 100); ++i) {
            const Quasimomentum k(rng.uniform(-pi, pi));
            const SpectralWindow w = spectral_window(k);
            const double dist = std::pow(10.0, rng.uniform(-3.0, 1.0));
            const double z = rng.uniform() < 0.5 ? w.e_min - dist : w.e_max + dist;
            const BandIntegrals x = band_integrals(k, z), q = band_integrals_quadrature(k, z);
            const double pairs[6][2] = {{x.a, q.a}, {x.b, q.b}, {x.c, q.c}, {x.d, q.d}, {x.e, q.e}, {x.f, q.f}};
            const double ref = std::abs(x.a);
            for (const auto& p : pairs) {
                c.bound(std::abs(p[0] - p[1]) / ref, 1e-10);
            }
        }
    });

    run("moment mirror I_n(z) = (-1)^(n+1) I_n(4 - z)", [&](Check& c, SplitMix64& rng) {
        for (std::size_t i = 0; i < n; ++i) {
            const Quasimomentum k(rng.uniform(-pi, pi));
            const double dist = std::pow(10.0, rng.uniform(-6.0, 2.0));
            const double z = spectral_window(k).e_min - dist;
            // Forming 4 - z rounds; the moments amplify that by the inverse distance.
            const double tol = 1e-13 + 8.0 * 2.3e-16 * (4.0 + std::abs(z)) / dist;
            for (int m = 0; m <= 4; ++m) {
                const double lhs = moment(m, k, z);
                const double rhs = (m % 2 == 0 ? -1.0 : 1.0) * moment(m, k, 4.0 - z);
                c.bound(std::abs(lhs - rhs) / std::abs(moment(0, k, z)) / tol, 1.0);
            }
        }
        c.note = "worst is the error over its rounding bound";
    });

    run("a, d, f positive below the band, negative above, increasing in z", [&](Check& c, SplitMix64& rng) {
        for (std::size_t i = 0; i < std::min<std::size_t>(n, 50); ++i) {
            const Quasimomentum k(rng.uniform(-pi, pi));
            const SpectralWindow w = spectral_window(k);
            for (Side side : {Side::below, Side::above}) {
                BandIntegrals prev{};
                for (int j = 0; j < 40; ++j) {
                    const double dist = std::pow(10.0, 2.0 - j * 0.2);
                    // Walk toward the edge below, away from it above: z increases.
                    const double z = side == Side::below ? w.e_min - dist : w.e_max + std::pow(10.0, -6.0 + j * 0.2);
                    const BandIntegrals v = band_integrals(k, z);
                    const double sg = side == Side::below ? 1.0 : -1.0;
                    c.require(sg * v.a > 0 && sg * v.d > 0 && sg * v.f > 0);
                    if (j > 0) {
                        c.require(v.a > prev.a && v.d > prev.d && v.f > prev.f);
                    }
                    prev = v;
                }
            }
        }
    });

    run("edge expansions of a..f at k = 0: correction at most 4 sqrt(dist)", [&](Check& c, SplitMix64&) {
        const Quasimomentum k0(0.0);
        for (double dist : {1e-2, 1e-4, 1e-6}) {
            const double root = std::sqrt(dist);
            const BandIntegrals lo = band_integrals(k0, -dist);
            const BandIntegrals hi = band_integrals(k0, 4.0 + dist);
            const double lower[6] = {lo.a - 1 / root, lo.b - 1 / root + 1, lo.c - 1 / root + 2,
                                     lo.d - 1 / root + 1, lo.e - 1 / root + 2, lo.f - 1 / root + 2};
            const double upper[6] = {hi.a + 1 / root, hi.b - 1 / root + 1, hi.c + 1 / root - 2,
                                     hi.d + 1 / root - 1, hi.e - 1 / root + 2, hi.f + 1 / root - 2};
            for (int i = 0; i < 6; ++i) {
                c.bound(std::abs(lower[i]) / root, 4.0);
                c.bound(std::abs(upper[i]) / root, 4.0);
            }
        }
        c.note = "worst is the ratio to sqrt(dist)";
    });

    run("Delta(0; -1e6) -> 1", [&](Check& c, SplitMix64& rng) {
        for (std::size_t i = 0; i < std::min<std::size_t>(n, 50); ++i) {
            c.bound(std::abs(fredholm_det(random_couplings(rng, 10.0), Quasimomentum(0.0), -1e6) - 1.0), 1e-4);
        }
    });

    run("sqrt(dist) Delta -> C at both edges with residual O(sqrt(dist))", [&](Check& c, SplitMix64& rng) {
        const Quasimomentum k0(0.0);
        for (std::size_t i = 0; i < std::min<std::size_t>(n, 50); ++i) {
            const Couplings cp = random_couplings(rng, 10.0);
            const ThresholdCoefficients t = threshold_coefficients(cp);
            for (Side side : {Side::below, Side::above}) {
                const double cc = side == Side::below ? t.c_minus : t.c_plus;
                const double dd = side == Side::below ? t.d_minus : t.d_plus;
                for (double dist : {1e-2, 1e-4, 1e-6}) {
                    const double z = side == Side::below ? -dist : 4.0 + dist;
                    const double root = std::sqrt(dist);
                    const double r = std::abs(root * fredholm_det(cp, k0, z) - cc);
                    c.bound(r / ((std::abs(dd) + 10.0 * cube(scale(cp)) * root) * root), 1.0);
                }
            }
        }
        c.note = "worst is the residual over (|D| + 10 s^3 sqrt(dist)) sqrt(dist)";
    });

    run("constant terms D-, D+ of the edge expansion", [&](Check& c, SplitMix64& rng) {
        const Quasimomentum k0(0.0);
        for (std::size_t i = 0; i < std::min<std::size_t>(n, 50); ++i) {
            const Couplings cp = random_couplings(rng, 3.0);
            const ThresholdCoefficients t = threshold_coefficients(cp);
            for (Side side : {Side::below, Side::above}) {
                const double cc = side == Side::below ? t.c_minus : t.c_plus;
                const double dd = side == Side::below ? t.d_minus : t.d_plus;
                auto est = [&](double h) {
                    const double z = side == Side::below ? -h * h : 4.0 + h * h;
                    return fredholm_det(cp, k0, z) - cc / h;
                };
                // Remainder is a power series in h = sqrt(dist); cancel its h and h^2 terms.
                const double h = 1e-3;
                const double d = (8.0 * est(h) - 6.0 * est(2.0 * h) + est(4.0 * h)) / 3.0;
                c.bound(std::abs(d - dd) / cube(scale(cp)), 1e-6);
            }
        }
    });

    run("threshold coefficient identities", [&](Check& c, SplitMix64& rng) {
        for (std::size_t i = 0; i < 10 * n; ++i) {
            const Couplings cp = random_couplings(rng, 10.0);
            const ThresholdCoefficients t = threshold_coefficients(cp), u = threshold_coefficients(-cp);
            const double tol = 1e-13 * cube(scale(cp));
            c.bound(std::abs(t.c_plus - u.c_minus), tol);
            c.bound(std::abs(t.d_plus - u.d_minus), tol);
            c.bound(std::abs(t.c_minus - c_polynomial(Side::below, cp)), tol);
            c.bound(std::abs(t.c_plus - c_polynomial(Side::above, cp)), tol);
        }
    });

    run("regularized determinant equals the cofactor expansion", [&](Check& c, SplitMix64& rng) {
        for (std::size_t i = 0; i < n; ++i) {
            const Couplings cp = random_couplings(rng, 5.0);
            const Quasimomentum k(rng.uniform(-3.0, 3.0));
            const double dist = std::pow(10.0, rng.uniform(-4.0, 1.0));
            const Side side = rng.uniform() < 0.5 ? Side::below : Side::above;
            const SpectralWindow w = spectral_window(k);
            const double z = side == Side::below ? w.e_min - dist : w.e_max + dist;
            const EdgeFrame f = edge_frame(k.band_half_width(), dist);
            const double direct = fredholm_det(cp, k, z);
            const double reg = scaled_det(cp, k.band_half_width(), side, dist) / f.s;
            c.bound(std::abs(direct - reg) / (1.0 + std::abs(direct)) / cube(scale(cp)), 1e-12);
            const double rank1 = fredholm_det(Couplings(cp.gamma(), 0, 0), k, z);
            c.bound(std::abs(rank1 - 1.0 - cp.gamma() * band_integrals(k, z).a), 1e-12 * (1 + std::abs(rank1)));
        }
    });

    run("components partition coupling space with alpha + beta <= 3", [&](Check& c, SplitMix64& rng) {
        int used = 0;
        for (std::size_t i = 0; i < 50 * n; ++i) {
            const Couplings cp = random_couplings(rng, 10.0);
            BoundaryTolerance g6{1e-12, 1e-6};
            const ComponentLabel l = predicted_counts(cp, g6);
            if (!l.alpha || !l.beta) {
                continue;
            }
            ++used;
            c.require(l.valid && *l.alpha + *l.beta <= 3);
            const RegionLabel mirrored = classify_component(Side::above, -cp, g6);
            c.require(mirrored.alpha == l.alpha);
        }
        c.note = std::to_string(used) + " interior points";
    });

    run("region inclusions D3- in D1+, D3+ in D1-, D3- and D3+ disjoint", [&](Check& c, SplitMix64& rng) {
        for (std::size_t i = 0; i < 50 * n; ++i) {
            const double l = rng.uniform(-10, 10), m = rng.uniform(-10, 10);
            const Region lo = classify_region(Side::below, l, m), hi = classify_region(Side::above, l, m);
            if (lo == Region::d3) c.require(hi == Region::d1);
            if (hi == Region::d3) c.require(lo == Region::d1);
        }
    });

    run("C vanishes on the boundary surface gamma(lambda, mu)", [&](Check& c, SplitMix64& rng) {
        for (std::size_t i = 0; i < 10 * n; ++i) {
            const double l = rng.uniform(-10, 10), m = rng.uniform(-10, 10);
            for (Side side : {Side::below, Side::above}) {
                const auto g = boundary_gamma(side, l, m);
                if (!g) continue;
                const QPolynomials q = q_polynomials(side, l, m);
                const double cval = c_polynomial(side, Couplings(*g, l, m));
                c.bound(std::abs(cval) / (1.0 + std::abs(q.q0) + std::abs(*g * q.q1)), 1e-10);
            }
        }
    });

    run("solver counts match the classifier at K = 0", [&](Check& c, SplitMix64& rng) {
        int used = 0;
        for (std::size_t i = 0; i < 20 * n; ++i) {
            const Couplings cp = random_couplings(rng, 5.0);
            const ComponentLabel l = predicted_counts(cp, guard);
            if (!l.alpha || !l.beta) continue;
            ++used;
            const SpectrumReport r = find_eigenvalues(cp, Quasimomentum(0.0), s.solver);
            if (r.n_minus() != *l.alpha || r.n_plus() != *l.beta) {
                c.pass = false;
                c.note = "mismatch at (" + format_double(cp.gamma()) + ", " + format_double(cp.lambda()) + ", " +
                         format_double(cp.mu()) + ")";
            }
        }
        if (c.pass) c.note = std::to_string(used) + " points";
    });

    run("spectral mirror: below(g, l, m) = 4 - above(-g, -l, -m)", [&](Check& c, SplitMix64& rng) {
        for (std::size_t i = 0; i < n; ++i) {
            const Couplings cp = random_couplings(rng, 5.0);
            const Quasimomentum k(rng.uniform(-3.0, 3.0));
            const auto a = find_eigenvalues(cp, k, s.solver), b = find_eigenvalues(-cp, k, s.solver);
            c.require(a.n_minus() == b.n_plus() && a.n_plus() == b.n_minus());
            if (a.n_minus() != b.n_plus()) continue;
            for (int j = 0; j < a.n_minus(); ++j) {
                c.bound(std::abs(a.below[static_cast<std::size_t>(j)] - (4.0 - b.above[static_cast<std::size_t>(a.n_minus() - 1 - j)])), 1e-8);
            }
        }
    });

    run("determinant and oracle agree", [&](Check& c, SplitMix64& rng) {
        const double ks[7] = {0, pi / 4, -pi / 4, pi / 2, -pi / 2, 3 * pi / 4, -3 * pi / 4};
        const std::size_t m = std::max<std::size_t>(1, n / 10);
        for (std::size_t i = 0; i < m; ++i) {
            const Couplings cp = random_couplings(rng, 5.0);
            const Quasimomentum k(ks[rng.below(7)]);
            const auto d = find_eigenvalues(cp, k, s.solver);
            const auto o = oracle_spectrum(cp, k, s.oracle);
            const bool same = d.n_minus() == o.n_minus() && d.n_plus() == o.n_plus();
            c.require(same);
            if (!same) {
                c.note = "counts " + pm(d.n_minus(), d.n_plus()) + " vs " + pm(o.n_minus(), o.n_plus());
                continue;
            }
            for (std::size_t j = 0; j < d.below.size(); ++j) c.bound(std::abs(d.below[j] - o.below[j]), 1e-6);
            for (std::size_t j = 0; j < d.above.size(); ++j) c.bound(std::abs(d.above[j] - o.above[j]), 1e-6);
        }
        if (c.pass) c.note = std::to_string(m) + " oracle runs";
    });

    run("n-(K) >= n-(0) and n+(K) >= n+(0)", [&](Check& c, SplitMix64& rng) {
        std::vector<Couplings> pts = anchors();
        for (std::size_t i = 0; i < std::min<std::size_t>(n, 50); ++i) pts.push_back(random_couplings(rng, 5.0));
        for (const auto& cp : pts) {
            try {
                k_sweep(cp, k_grid(), s.solver);
            } catch (const MonotonicityError& e) {
                c.pass = false;
                c.note = e.what();
            }
        }
    });

    run("counts independent of K when alpha + beta = 3", [&](Check& c, SplitMix64& rng) {
        std::vector<Couplings> pts = anchors();
        for (std::size_t i = 0; i < 20 * n && pts.size() < 5 + n; ++i) {
            const Couplings cp = random_couplings(rng, 5.0);
            const ComponentLabel l = predicted_counts(cp, guard);
            if (l.valid && *l.alpha + *l.beta == 3) pts.push_back(cp);
        }
        for (const auto& cp : pts) {
            const ComponentLabel l = predicted_counts(cp, guard);
            if (!l.valid || *l.alpha + *l.beta != 3) continue;
            for (const auto& k : k_grid()) {
                const auto r = find_eigenvalues(cp, k, s.solver);
                c.require(r.n_minus() == *l.alpha && r.n_plus() == *l.beta);
            }
        }
    });

    run("gap to the band non-decreasing in K on [0, pi)", [&](Check& c, SplitMix64& rng) {
        std::vector<Couplings> pts = anchors();
        for (std::size_t i = 0; i < std::min<std::size_t>(n, 30); ++i) pts.push_back(random_couplings(rng, 5.0));
        for (const auto& cp : pts) {
            std::vector<double> prev_lo, prev_hi;
            for (const auto& k : k_grid()) {
                const auto r = find_eigenvalues(cp, k, s.solver);
                std::vector<double> lo, hi;
                for (double z : r.below) lo.push_back(r.window.e_min - z);
                for (double z : r.above) hi.push_back(z - r.window.e_max);
                // n-th gap counted from the farthest eigenvalue outward.
                for (std::size_t j = 0; j < prev_lo.size() && j < lo.size(); ++j) c.bound(prev_lo[j] - lo[j], 1e-9);
                std::reverse(hi.begin(), hi.end());
                for (std::size_t j = 0; j < prev_hi.size() && j < hi.size(); ++j) c.bound(prev_hi[j] - hi[j], 1e-9);
                prev_lo = lo;
                prev_hi = hi;
            }
        }
        c.note = "worst is the largest decrease of a gap";
    });

    run("counts constant along segments inside one component", [&](Check& c, SplitMix64& rng) {
        int segments = 0;
        for (std::size_t i = 0; i < std::min<std::size_t>(n, 20); ++i) {
            std::vector<Couplings> pts;
            ComponentLabel label;
            if (!segment_in_component(rng, pts, label)) continue;
            ++segments;
            for (const auto& cp : pts) {
                const auto r = find_eigenvalues(cp, Quasimomentum(0.0), s.solver);
                c.require(r.n_minus() == *label.alpha && r.n_plus() == *label.beta);
            }
        }
        c.note = std::to_string(segments) + " segments";
    });

    run("roots of truncated determinants interlace in G3-", [&](Check& c, SplitMix64& rng) {
        int used = 0;
        for (std::size_t i = 0; i < 200 * n && used < 20; ++i) {
            const Couplings cp = random_couplings(rng, 5.0);
            const RegionLabel l = classify_component(Side::below, cp, guard);
            if (!l.alpha || *l.alpha != 3) continue;
            ++used;
            c.require(count_interlacing_check(cp, s.solver));
        }
        c.require(count_interlacing_check(Couplings(-3, -4, -2), s.solver));
        c.note = std::to_string(used + 1) + " points";
    });

    run("oracle: midpoint and trapezoid rules agree", [&](Check& c, SplitMix64& rng) {
        for (int i = 0; i < 2; ++i) {
            const Couplings cp = random_couplings(rng, 3.0);
            const Quasimomentum k(rng.uniform(-2.5, 2.5));
            DiscretizationConfig mid = s.oracle, trap = s.oracle;
            mid.rule = QuadratureRule::midpoint;
            trap.rule = QuadratureRule::trapezoid;
            const auto a = oracle_spectrum(cp, k, mid), b = oracle_spectrum(cp, k, trap);
            c.require(a.n_minus() == b.n_minus() && a.n_plus() == b.n_plus());
            for (std::size_t j = 0; j < a.below.size() && j < b.below.size(); ++j) c.bound(std::abs(a.below[j] - b.below[j]), 1e-6);
            for (std::size_t j = 0; j < a.above.size() && j < b.above.size(); ++j) c.bound(std::abs(a.above[j] - b.above[j]), 1e-6);
        }
    });

    int failures = 0;
    out << "verification suite, seed " << seed << ", samples " << samples << '\n';
    for (const auto& c : checks) {
        failures += c.pass ? 0 : 1;
        out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << "  worst=" << std::setprecision(3) << c.worst;
        if (!c.note.empty()) out << "  (" << c.note << ")";
        out << '\n';
    }
    out << checks.size() - static_cast<std::size_t>(failures) << "/" << checks.size() << " checks passed\n";
    return failures == 0 ? exit_ok : exit_verification_failed;
}

}  // namespace lbs::cli
