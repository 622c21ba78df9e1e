#include "lbs/solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "lbs/classifier.hpp"
#include "lbs/determinant.hpp"
#include "lbs/errors.hpp"
#include "lbs/integrals.hpp"
#include "lbs/parallel.hpp"
#include "lbs/symmetric_eigen.hpp"

namespace lbs {

namespace {

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

double coupling_scale(const Couplings& c) {
    return 1.0 + std::abs(c.gamma()) + std::abs(c.lambda()) + std::abs(c.mu());
}

struct Root {
    double delta;
    int multiplicity;
};

// Root search on one side of the band in the distance variable delta.
class SideSearch {
public:
    SideSearch(const Couplings& c, const Quasimomentum& k, Side side, const SolverOptions& opt,
               std::vector<std::string>& warnings)
        : c_(side_couplings(c, side)),
          b_(k.band_half_width()),
          side_(side),
          window_(spectral_window(k)),
          opt_(opt),
          warnings_(warnings) {}

    int count(double delta) const { return negative_inertia(reduced_form(c_, edge_frame(b_, delta))); }

    double value(double delta) const { return scaled_det(c_, edge_frame(b_, delta)); }

    double energy(double delta) const {
        return side_ == Side::below ? window_.e_min - delta : window_.e_max + delta;
    }

    std::vector<Root> run() {
        // The perturbation has eigenvalues 2g, l, m, so no eigenvalue is farther than
        // its norm from the band.
        const double reach =
            1.0 + std::max({2.0 * std::abs(c_.gamma()), std::abs(c_.lambda()), std::abs(c_.mu())});
        std::vector<double> grid{reach};
        while (grid.back() > grid_floor) {
            grid.push_back(grid.back() * 0.25);
        }
        grid.push_back(0.0);

        std::vector<int> counts(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i) {
            counts[i] = count(grid[i]);
        }
        if (counts.front() != 0) {
            throw std::logic_error("eigenvalue beyond the norm bound of the perturbation");
        }

        const double edge = value(0.0);
        const double edge_scale = std::pow(coupling_scale(c_), 3) * std::max(1.0, 1.0 / (b_ * b_));
        if (std::abs(edge) <= opt_.tangency_tol * edge_scale) {
            warnings_.push_back(std::string("edge numerator vanishes ") + to_string(side_) +
                                " the band: threshold resonance, count may be unstable");
        }

        for (std::size_t i = grid.size() - 1; i > 0; --i) {
            const double lo = grid[i], hi = grid[i - 1];
            if (counts[i] < counts[i - 1]) {
                warnings_.push_back("non-monotone inertia count near delta = " + fmt(hi));
                continue;
            }
            isolate(lo, hi, counts[i], counts[i - 1], 0);
        }
        std::sort(roots_.begin(), roots_.end(),
                  [](const Root& a, const Root& b) { return a.delta < b.delta; });
        return roots_;
    }

private:
    static constexpr double grid_floor = 1e-14;
    static constexpr int max_depth = 200;
    static constexpr int max_bisections = 400;

    double tolerance(double delta) const { return opt_.root_tol * (1.0 + std::abs(energy(delta))); }

    static double split(double lo, double hi) {
        if (lo > 0.0 && hi > 4.0 * lo) {
            return std::sqrt(lo * hi);
        }
        return 0.5 * (lo + hi);
    }

    void isolate(double lo, double hi, int n_lo, int n_hi, int depth) {
        const int m = n_lo - n_hi;
        if (m <= 0) {
            return;
        }
        if (m == 1) {
            roots_.push_back({refine(lo, hi, n_lo), 1});
            return;
        }
        if (hi - lo <= tolerance(hi) || depth > max_depth) {
            const double z = energy(0.5 * (lo + hi));
            warnings_.push_back("tangency: " + std::to_string(m) + " eigenvalues merge at z = " +
                                fmt(z) + " " + to_string(side_) + " the band");
            roots_.push_back({0.5 * (lo + hi), m});
            return;
        }
        const double mid = split(lo, hi);
        const int n_mid = std::clamp(count(mid), n_hi, n_lo);
        isolate(mid, hi, n_mid, n_hi, depth + 1);
        isolate(lo, mid, n_lo, n_mid, depth + 1);
    }

    // One eigenvalue lies in (lo, hi]. Bisect on the sign of s * Delta; if rounding hides
    // the sign change, fall back to the inertia count, which is exact.
    double refine(double lo, double hi, int n_lo) const {
        double f_lo = value(lo);
        const double f_hi = value(hi);
        const bool by_sign = (f_lo < 0.0) != (f_hi < 0.0) && f_lo != 0.0 && f_hi != 0.0;
        for (int it = 0; it < max_bisections && hi - lo > tolerance(hi); ++it) {
            const double mid = split(lo, hi);
            if (mid <= lo || mid >= hi) {
                break;
            }
            if (by_sign) {
                const double f_mid = value(mid);
                if (f_mid == 0.0) {
                    return mid;
                }
                if ((f_mid < 0.0) == (f_lo < 0.0)) {
                    lo = mid;
                    f_lo = f_mid;
                } else {
                    hi = mid;
                }
            } else if (count(mid) >= n_lo) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        return 0.5 * (lo + hi);
    }

    Couplings c_;
    double b_;
    Side side_;
    SpectralWindow window_;
    SolverOptions opt_;
    std::vector<std::string>& warnings_;
    std::vector<Root> roots_;
};

SpectrumReport degenerate_spectrum(const Couplings& c, const Quasimomentum& k,
                                   const SolverOptions& opt) {
    SpectrumReport rep;
    rep.k = k;
    rep.window = spectral_window(k);
    rep.method = Method::determinant;
    rep.warnings.push_back("collapsed band at k = pi: exact rank-3 spectrum");
    for (double v : {2.0 * c.gamma(), c.lambda(), c.mu()}) {
        if (v == 0.0) {
            continue;
        }
        if (std::abs(v) < opt.edge_guard) {
            rep.warnings.push_back("near-threshold eigenvalue at z = " + fmt(2.0 + v));
        }
        (v < 0.0 ? rep.below : rep.above).push_back(2.0 + v);
    }
    std::sort(rep.below.begin(), rep.below.end());
    std::sort(rep.above.begin(), rep.above.end());
    rep.residuals.assign(rep.below.size() + rep.above.size(), 0.0);
    return rep;
}

}  // namespace

int count_beyond(const Couplings& c, const Quasimomentum& k, Side side, double delta) {
    if (!(delta >= 0.0)) {
        throw DomainError("distance to the band must be non-negative");
    }
    const Couplings cs = side_couplings(c, side);
    return negative_inertia(reduced_form(cs, edge_frame(k.band_half_width(), delta)));
}

SpectrumReport find_eigenvalues(const Couplings& c, const Quasimomentum& k,
                                const SolverOptions& opt) {
    if (k.is_degenerate()) {
        return degenerate_spectrum(c, k, opt);
    }
    SpectrumReport rep;
    rep.k = k;
    rep.window = spectral_window(k);
    rep.method = Method::determinant;

    std::vector<double> residuals_above;
    for (Side side : {Side::below, Side::above}) {
        SideSearch search(c, k, side, opt, rep.warnings);
        const auto roots = search.run();
        auto& out = side == Side::below ? rep.below : rep.above;
        auto& res = side == Side::below ? rep.residuals : residuals_above;
        for (const Root& r : roots) {
            const EdgeFrame f = edge_frame(k.band_half_width(), r.delta);
            const double residual = std::abs(search.value(r.delta)) / f.s;
            const double z = search.energy(r.delta);
            if (r.delta < opt.edge_guard) {
                rep.warnings.push_back("near-threshold eigenvalue at z = " + fmt(z) +
                                       " (distance " + fmt(r.delta) + " to the band)");
            }
            for (int i = 0; i < r.multiplicity; ++i) {
                out.push_back(z);
                res.push_back(residual);
            }
        }
    }
    std::sort(rep.below.begin(), rep.below.end());
    std::reverse(rep.residuals.begin(), rep.residuals.end());
    rep.residuals.insert(rep.residuals.end(), residuals_above.begin(), residuals_above.end());
    return rep;
}

bool count_interlacing_check(const Couplings& c, const SolverOptions& opt) {
    const RegionLabel label = classify_component(Side::below, c);
    if (!label.alpha || *label.alpha != 3) {
        throw PreconditionError("interlacing check needs couplings with three eigenvalues below the band");
    }
    const Quasimomentum k0(0.0);
    const auto z1 = find_eigenvalues(Couplings(c.gamma(), 0.0, 0.0), k0, opt).below;
    const auto z2 = find_eigenvalues(Couplings(c.gamma(), c.lambda(), 0.0), k0, opt).below;
    const auto z3 = find_eigenvalues(c, k0, opt).below;
    if (z1.size() != 1 || z2.size() != 2 || z3.size() != 3) {
        return false;
    }
    return z3[0] < z2[0] && z2[0] < z3[1] && z3[1] < z2[1] && z2[1] < z3[2] && z3[2] < 0.0 &&
           z2[0] < z1[0] && z1[0] < z2[1];
}

std::vector<SpectrumReport> k_sweep(const Couplings& c, const std::vector<Quasimomentum>& ks,
                                    const SolverOptions& opt) {
    if (ks.empty()) {
        throw std::invalid_argument("k list must not be empty");
    }
    std::vector<SpectrumReport> out(ks.size());
    parallel_for(ks.size(), [&](std::size_t i) { out[i] = find_eigenvalues(c, ks[i], opt); });

    const auto zero = std::find_if(ks.begin(), ks.end(), [](const Quasimomentum& k) { return k.value() == 0.0; });
    if (zero != ks.end()) {
        const SpectrumReport& base = out[static_cast<std::size_t>(zero - ks.begin())];
        for (const SpectrumReport& r : out) {
            if (r.n_minus() < base.n_minus() || r.n_plus() < base.n_plus()) {
                throw MonotonicityError("eigenvalue count at k = " + fmt(r.k.value()) +
                                            " drops below its value at k = 0",
                                        r.k.value());
            }
        }
    }
    return out;
}

}  // namespace lbs
