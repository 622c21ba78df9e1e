#pragma once

#include <vector>

#include "lbs/model.hpp"
#include "lbs/spectrum.hpp"
#include "lbs/symmetric_eigen.hpp"

namespace lbs {

enum class QuadratureRule { midpoint, trapezoid };

enum class EigenRoute {
    structured,  // O(n^2) reduction exploiting diagonal + rank 3
    householder,
    jacobi,
};

struct DiscretizationConfig {
    int n_points = 2048;
    QuadratureRule rule = QuadratureRule::midpoint;
    EigenRoute route = EigenRoute::structured;

    void validate() const;
};

struct Discretization {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Nodes in [0, pi]; weights sum to pi.
Discretization discretize(const DiscretizationConfig& cfg);

// H_ij = E_k(p_i) delta_ij + (2/pi) sqrt(w_i w_j) (g + l cos p_i cos p_j + m cos 2p_i cos 2p_j),
// the even-subspace collocation of H(k), symmetrised by the sqrt(w) similarity.
SymmetricMatrix build_matrix(const Couplings& c, const Quasimomentum& k,
                             const DiscretizationConfig& cfg = {});

// Eigenvalues of the discretized operator, ascending.
std::vector<double> oracle_eigenvalues(const Couplings& c, const Quasimomentum& k,
                                       const DiscretizationConfig& cfg = {});

// Eigenvalues farther than the discretization guard from the band. The discrete band
// reaches within roughly one node spacing of each edge, so eigenvalues inside that
// margin are indistinguishable from band states and are dropped.
SpectrumReport oracle_spectrum(const Couplings& c, const Quasimomentum& k,
                               const DiscretizationConfig& cfg = {});

// Distance from the band edge below which the oracle reports nothing.
double oracle_guard(const Quasimomentum& k, const DiscretizationConfig& cfg);

struct ConvergenceRow {
    int n_points = 0;
    std::vector<double> below;
    std::vector<double> above;
    // Largest change of a matched eigenvalue against the previous row; empty for the
    // first row or when counts differ.
    std::vector<double> differences;
};

std::vector<ConvergenceRow> convergence_study(const Couplings& c, const Quasimomentum& k,
                                              const std::vector<int>& n_list,
                                              QuadratureRule rule = QuadratureRule::midpoint);

}  // namespace lbs
