#include "lbs/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace lbs {

namespace {

constexpr int max_reported = 3;
constexpr double guard_factor = 10.0;
constexpr double guard_floor = 1e-10;

void clip(std::vector<double>& v, bool keep_low, std::vector<std::string>& warnings,
          const char* side) {
    if (static_cast<int>(v.size()) <= max_reported) {
        return;
    }
    warnings.push_back(std::to_string(v.size()) + " eigenvalues " + side +
                       " the band exceed the rank bound; increase n_points");
    if (keep_low) {
        v.resize(max_reported);
    } else {
        v.erase(v.begin(), v.end() - max_reported);
    }
}

}  // namespace

void DiscretizationConfig::validate() const {
    if (n_points < 16) {
        throw std::invalid_argument("n_points must be at least 16");
    }
}

Discretization discretize(const DiscretizationConfig& cfg) {
    cfg.validate();
    const auto n = static_cast<std::size_t>(cfg.n_points);
    Discretization d;
    d.nodes.resize(n);
    d.weights.resize(n);
    if (cfg.rule == QuadratureRule::midpoint) {
        const double h = pi / static_cast<double>(n);
        for (std::size_t i = 0; i < n; ++i) {
            d.nodes[i] = (static_cast<double>(i) + 0.5) * h;
            d.weights[i] = h;
        }
    } else {
        const double h = pi / static_cast<double>(n - 1);
        for (std::size_t i = 0; i < n; ++i) {
            d.nodes[i] = static_cast<double>(i) * h;
            d.weights[i] = (i == 0 || i + 1 == n) ? 0.5 * h : h;
        }
        d.nodes[n - 1] = pi;
    }
    return d;
}

namespace {

struct Factors {
    std::vector<double> diag;
    std::vector<std::array<double, 3>> w;
    std::array<double, 3> g;
};

Factors factors(const Couplings& c, const Quasimomentum& k, const DiscretizationConfig& cfg) {
    const Discretization d = discretize(cfg);
    const std::size_t n = d.nodes.size();
    Factors f;
    f.diag.resize(n);
    f.w.resize(n);
    f.g = {c.gamma(), c.lambda(), c.mu()};
    for (std::size_t i = 0; i < n; ++i) {
        const double p = d.nodes[i];
        const double root = std::sqrt(2.0 * d.weights[i] / pi);
        f.diag[i] = dispersion(k, p);
        f.w[i] = {root, root * std::cos(p), root * std::cos(2.0 * p)};
    }
    return f;
}

}  // namespace

SymmetricMatrix build_matrix(const Couplings& c, const Quasimomentum& k,
                             const DiscretizationConfig& cfg) {
    const Factors f = factors(c, k, cfg);
    const std::size_t n = f.diag.size();
    SymmetricMatrix h(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double v = f.g[0] * f.w[i][0] * f.w[j][0] + f.g[1] * f.w[i][1] * f.w[j][1] +
                       f.g[2] * f.w[i][2] * f.w[j][2];
            if (i == j) {
                v += f.diag[i];
            }
            h(i, j) = v;
            h(j, i) = v;
        }
    }
    return h;
}

std::vector<double> oracle_eigenvalues(const Couplings& c, const Quasimomentum& k,
                                       const DiscretizationConfig& cfg) {
    switch (cfg.route) {
        case EigenRoute::structured: {
            const Factors f = factors(c, k, cfg);
            return diagonal_plus_rank3_eigenvalues(f.diag, f.w, f.g);
        }
        case EigenRoute::householder:
            return householder_eigenvalues(build_matrix(c, k, cfg));
        case EigenRoute::jacobi:
            return jacobi_eigenvalues(build_matrix(c, k, cfg));
    }
    throw std::invalid_argument("unknown eigensolver route");
}

double oracle_guard(const Quasimomentum& k, const DiscretizationConfig& cfg) {
    cfg.validate();
    const double spacing = cfg.rule == QuadratureRule::midpoint
                               ? 0.5 * pi / cfg.n_points
                               : pi / (cfg.n_points - 1);
    // Gap between the edge and the nearest node energy; 1 - cos h = 2 sin^2(h/2).
    const double sh = std::sin(0.5 * spacing);
    const double gap = 2.0 * k.band_half_width() * sh * sh;
    return std::max(guard_factor * gap, guard_floor);
}

SpectrumReport oracle_spectrum(const Couplings& c, const Quasimomentum& k,
                               const DiscretizationConfig& cfg) {
    SpectrumReport rep;
    rep.k = k;
    rep.window = spectral_window(k);
    rep.method = Method::oracle;
    const double guard = oracle_guard(k, cfg);
    const auto ev = oracle_eigenvalues(c, k, cfg);
    int dropped = 0;
    for (double z : ev) {
        if (z < rep.window.e_min - guard) {
            rep.below.push_back(z);
        } else if (z > rep.window.e_max + guard) {
            rep.above.push_back(z);
        } else if (z < rep.window.e_min || z > rep.window.e_max) {
            ++dropped;
        }
    }
    if (dropped > 0) {
        rep.warnings.push_back(std::to_string(dropped) +
                               " eigenvalue(s) inside the discretization guard were dropped");
    }
    clip(rep.below, true, rep.warnings, "below");
    clip(rep.above, false, rep.warnings, "above");
    return rep;
}

std::vector<ConvergenceRow> convergence_study(const Couplings& c, const Quasimomentum& k,
                                              const std::vector<int>& n_list,
                                              QuadratureRule rule) {
    if (!std::is_sorted(n_list.begin(), n_list.end())) {
        throw std::invalid_argument("n_list must be ascending");
    }
    std::vector<ConvergenceRow> rows;
    for (int n : n_list) {
        DiscretizationConfig cfg;
        cfg.n_points = n;
        cfg.rule = rule;
        const SpectrumReport rep = oracle_spectrum(c, k, cfg);
        ConvergenceRow row{n, rep.below, rep.above, {}};
        if (!rows.empty()) {
            const ConvergenceRow& prev = rows.back();
            if (prev.below.size() == row.below.size() && prev.above.size() == row.above.size()) {
                for (std::size_t i = 0; i < row.below.size(); ++i) {
                    row.differences.push_back(std::abs(row.below[i] - prev.below[i]));
                }
                for (std::size_t i = 0; i < row.above.size(); ++i) {
                    row.differences.push_back(std::abs(row.above[i] - prev.above[i]));
                }
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace lbs
