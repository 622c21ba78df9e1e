#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace lbs {

// Dense symmetric matrix in row-major storage.
class SymmetricMatrix {
public:
    SymmetricMatrix() = default;
    explicit SymmetricMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}

    std::size_t size() const noexcept { return n_; }
    double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    const std::vector<double>& data() const noexcept { return a_; }

private:
    std::size_t n_ = 0;
    std::vector<double> a_;
};

// All eigenvalues in ascending order. Every routine is deterministic and throws
// EigensolverError when its iteration budget is exhausted.

std::vector<double> jacobi_eigenvalues(SymmetricMatrix a, int max_sweeps = 100);

// Implicit QL on a tridiagonal matrix; off[i] couples rows i and i + 1.
std::vector<double> tridiagonal_eigenvalues(std::vector<double> diag, std::vector<double> off);

// Householder reduction to tridiagonal form followed by implicit QL.
std::vector<double> householder_eigenvalues(SymmetricMatrix a);

// Eigenvalues of diag(d) + W diag(g) W^T for an n x 3 matrix W, in O(n^2) time:
// Givens rotations fold W into its leading rows while chasing the fill-in of diag(d)
// down a band of width at most 3, which is then reduced to tridiagonal form.
std::vector<double> diagonal_plus_rank3_eigenvalues(const std::vector<double>& d,
                                                    const std::vector<std::array<double, 3>>& w,
                                                    const std::array<double, 3>& g);

// Number of strictly negative eigenvalues of a symmetric 3x3 matrix (row-major).
int negative_inertia(const std::array<double, 9>& m);

}  // namespace lbs
