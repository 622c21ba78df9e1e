#include "lbs/symmetric_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lbs/errors.hpp"

namespace lbs {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();

// glibc's hypot is exact but several times slower than this; rescale only when the
// squares could overflow or underflow.
inline double norm2(double x, double y) {
    const double m = std::max(std::abs(x), std::abs(y));
    if (m > 1e-150 && m < 1e150) {
        return std::sqrt(x * x + y * y);
    }
    if (m == 0.0) {
        return 0.0;
    }
    const double u = x / m, v = y / m;
    return m * std::sqrt(u * u + v * v);
}

// Symmetric band matrix holding A(i, j) for |i - j| <= width.
class Band {
public:
    Band(std::size_t n, std::size_t width) : n_(n), w_(width), a_(n * (width + 1), 0.0) {}

    std::size_t size() const noexcept { return n_; }

    double get(std::size_t i, std::size_t j) const {
        if (i < j) {
            std::swap(i, j);
        }
        return i - j > w_ ? 0.0 : a_[i * (w_ + 1) + (i - j)];
    }

    void set(std::size_t i, std::size_t j, double v) {
        if (i < j) {
            std::swap(i, j);
        }
        a_[i * (w_ + 1) + (i - j)] = v;
    }

    // A <- G A G^T for G acting on rows p, p+1 as [[c, s], [-s, c]]. Only
    // columns within `reach` of the pair are touched; reach + 1 must not exceed the width.
    void rotate(std::size_t p, double c, double s, std::size_t reach) {
        const std::size_t q = p + 1;
        const std::size_t stride = w_ + 1;
        double* rp = &a_[p * stride];
        double* rq = &a_[q * stride];
        for (std::size_t k = p >= reach ? p - reach : 0; k < p; ++k) {
            double& x = rp[p - k];
            double& y = rq[q - k];
            const double xv = x, yv = y;
            x = c * xv + s * yv;
            y = -s * xv + c * yv;
        }
        const std::size_t hi = std::min(n_ - 1, q + reach);
        for (std::size_t k = q + 1; k <= hi; ++k) {
            double* rk = &a_[k * stride];
            double& x = rk[k - p];
            double& y = rk[k - q];
            const double xv = x, yv = y;
            x = c * xv + s * yv;
            y = -s * xv + c * yv;
        }
        const double app = rp[0], aqq = rq[0], apq = rq[1];
        const double cc = c * c, ss = s * s, cs = c * s;
        rp[0] = cc * app + 2.0 * cs * apq + ss * aqq;
        rq[0] = ss * app - 2.0 * cs * apq + cc * aqq;
        rq[1] = (cc - ss) * apq + cs * (aqq - app);
    }

    // Zero A(r, col) with a rotation in the plane (col - 1, col), then chase the
    // resulting bulge at offset `band + 1` to the bottom, where `band` is the width
    // of the rows below the rotation.
    template <typename OnRotate>
    void annihilate(std::size_t r, std::size_t col, std::size_t band, OnRotate&& on_rotate) {
        while (true) {
            const double x = get(r, col - 1);
            const double y = get(r, col);
            if (y != 0.0) {
                const double h = norm2(x, y);
                const double c = x / h, s = y / h;
                rotate(col - 1, c, s, band + 1);
                set(r, col, 0.0);
                on_rotate(col - 1, c, s);
            }
            r = col - 1;
            col += band;
            if (col >= n_) {
                return;
            }
        }
    }

private:
    std::size_t n_;
    std::size_t w_;
    std::vector<double> a_;
};

void check_square(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("empty matrix");
    }
}

}  // namespace

std::vector<double> jacobi_eigenvalues(SymmetricMatrix a, int max_sweeps) {
    const std::size_t n = a.size();
    check_square(n);
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0, total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const double v = a(i, j) * a(i, j);
                total += v;
                if (i != j) {
                    off += v;
                }
            }
        }
        if (off <= eps * eps * total || off == 0.0) {
            std::vector<double> ev(n);
            for (std::size_t i = 0; i < n; ++i) {
                ev[i] = a(i, i);
            }
            std::sort(ev.begin(), ev.end());
            return ev;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) {
                    continue;
                }
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = std::copysign(1.0, theta) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
            }
        }
    }
    throw EigensolverError("Jacobi iteration did not converge");
}

std::vector<double> tridiagonal_eigenvalues(std::vector<double> d, std::vector<double> e) {
    const std::size_t n = d.size();
    check_square(n);
    e.resize(n, 0.0);
    e[n - 1] = 0.0;
    constexpr int max_iter = 60;
    for (std::size_t l = 0; l < n; ++l) {
        int iter = 0;
        std::size_t m = l;
        do {
            for (m = l; m + 1 < n; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd) {
                    break;
                }
            }
            if (m == l) {
                break;
            }
            if (iter++ == max_iter) {
                throw EigensolverError("tridiagonal QL did not converge");
            }
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = norm2(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, p = 0.0;
            bool underflow = false;
            for (std::size_t i = m; i-- > l;) {
                const double f = s * e[i];
                const double b = c * e[i];
                r = norm2(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if (underflow) {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        } while (true);
    }
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<double> householder_eigenvalues(SymmetricMatrix a) {
    const std::size_t n = a.size();
    check_square(n);
    std::vector<double> v(n), p(n);
    for (std::size_t k = 0; k + 2 < n; ++k) {
        double norm2 = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) {
            norm2 += a(i, k) * a(i, k);
        }
        const double x0 = a(k + 1, k);
        if (norm2 == x0 * x0) {
            continue;
        }
        const double alpha = -std::copysign(std::sqrt(norm2), x0);
        // v = x - alpha e1, scaled so that H = I - v v^T / h.
        for (std::size_t i = k + 1; i < n; ++i) {
            v[i] = a(i, k);
        }
        v[k + 1] -= alpha;
        const double h = norm2 - x0 * alpha;
        for (std::size_t i = k + 1; i < n; ++i) {
            double acc = 0.0;
            for (std::size_t j = k + 1; j < n; ++j) {
                acc += a(i, j) * v[j];
            }
            p[i] = acc / h;
        }
        double kappa = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) {
            kappa += v[i] * p[i];
        }
        kappa /= 2.0 * h;
        for (std::size_t i = k + 1; i < n; ++i) {
            p[i] -= kappa * v[i];
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) -= v[i] * p[j] + p[i] * v[j];
            }
        }
        a(k + 1, k) = alpha;
        a(k, k + 1) = alpha;
        for (std::size_t i = k + 2; i < n; ++i) {
            a(i, k) = 0.0;
            a(k, i) = 0.0;
        }
    }
    std::vector<double> d(n), e(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        d[i] = a(i, i);
        if (i + 1 < n) {
            e[i] = a(i + 1, i);
        }
    }
    return tridiagonal_eigenvalues(std::move(d), std::move(e));
}

std::vector<double> diagonal_plus_rank3_eigenvalues(const std::vector<double>& d,
                                                    const std::vector<std::array<double, 3>>& w,
                                                    const std::array<double, 3>& g) {
    const std::size_t n = d.size();
    check_square(n);
    if (w.size() != n) {
        throw std::invalid_argument("factor rows must match the diagonal length");
    }
    if (n < 8) {
        SymmetricMatrix dense(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                double v = i == j ? d[i] : 0.0;
                for (std::size_t c = 0; c < 3; ++c) {
                    v += w[i][c] * g[c] * w[j][c];
                }
                dense(i, j) = v;
            }
        }
        return jacobi_eigenvalues(std::move(dense));
    }

    Band band(n, 5);
    for (std::size_t i = 0; i < n; ++i) {
        band.set(i, i, d[i]);
    }
    auto rows = w;
    auto rotate_rows = [&rows](std::size_t p, double c, double s) {
        for (std::size_t k = 0; k < 3; ++k) {
            const double x = rows[p][k], y = rows[p + 1][k];
            rows[p][k] = c * x + s * y;
            rows[p + 1][k] = -s * x + c * y;
        }
    };

    // Column c of W is folded into row c; the band grows to width c + 1.
    for (std::size_t c = 0; c < 3; ++c) {
        const std::size_t width = c + 1;
        for (std::size_t i = n - 1; i > c; --i) {
            const double x = rows[i - 1][c], y = rows[i][c];
            if (y == 0.0) {
                continue;
            }
            const double h = norm2(x, y);
            const double cs = x / h, sn = y / h;
            band.rotate(i - 1, cs, sn, width + 1);
            rotate_rows(i - 1, cs, sn);
            rows[i][c] = 0.0;
            // The rotation may push row i - 1 one step past the band.
            const std::size_t col = i - 1 + width + 1;
            if (col < n && band.get(i - 1, col) != 0.0) {
                band.annihilate(i - 1, col, width, rotate_rows);
            }
        }
    }

    // W is now upper triangular in its leading three rows.
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double v = 0.0;
            for (std::size_t c = 0; c < 3; ++c) {
                v += rows[i][c] * g[c] * rows[j][c];
            }
            band.set(i, j, band.get(i, j) + v);
        }
    }

    auto ignore = [](std::size_t, double, double) {};
    for (std::size_t width = 3; width > 1; --width) {
        for (std::size_t r = 0; r + width < n; ++r) {
            if (band.get(r, r + width) != 0.0) {
                band.annihilate(r, r + width, width, ignore);
            }
        }
    }

    std::vector<double> diag(n), off(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        diag[i] = band.get(i, i);
        if (i + 1 < n) {
            off[i] = band.get(i + 1, i);
        }
    }
    return tridiagonal_eigenvalues(std::move(diag), std::move(off));
}

int negative_inertia(const std::array<double, 9>& m) {
    SymmetricMatrix a(3);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            a(i, j) = 0.5 * (m[3 * i + j] + m[3 * j + i]);
        }
    }
    const auto ev = jacobi_eigenvalues(std::move(a));
    return static_cast<int>(std::count_if(ev.begin(), ev.end(), [](double x) { return x < 0.0; }));
}

}  // namespace lbs
