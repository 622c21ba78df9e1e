#pragma once

#include <vector>

#include "lbs/model.hpp"
#include "lbs/spectrum.hpp"

namespace lbs {

struct SolverOptions {
    // Roots closer than this to the band edge are reported with a warning.
    double edge_guard = 1e-9;
    // Brackets are refined until their width is at most root_tol * (1 + |z|).
    double root_tol = 1e-12;
    // Relative size of the edge numerator below which a threshold resonance is flagged.
    double tangency_tol = 1e-10;
};

// All eigenvalues of H(k) outside the band, located as zeros of the Fredholm determinant.
//
// Each side is handled in the distance variable delta >= 0 from the edge. The number of
// eigenvalues farther than delta equals the negative inertia of a 3x3 matrix that is
// analytic in sqrt(delta), which certifies every bracket; single roots are then refined by
// bisection on the sign of s * Delta, whose value at delta = 0 is the edge limit. At
// k = pi the band is the single point 2 and the spectrum {2 + 2g, 2 + l, 2 + m} is exact.
SpectrumReport find_eigenvalues(const Couplings& c, const Quasimomentum& k,
                                const SolverOptions& opt = {});

// Number of eigenvalues farther than delta from the edge on one side.
int count_beyond(const Couplings& c, const Quasimomentum& k, Side side, double delta);

// For couplings in the component with three eigenvalues below the band, checks that the
// below-band roots of the rank-1, rank-2 and full determinants interlace:
//   z31 < z21 < z32 < z22 < z33 < 0 and z21 < z11 < z22.
// Throws PreconditionError for couplings outside that component.
bool count_interlacing_check(const Couplings& c, const SolverOptions& opt = {});

// One report per k, in input order. When k = 0 is in the list, throws MonotonicityError
// if any k has fewer eigenvalues on either side than k = 0.
std::vector<SpectrumReport> k_sweep(const Couplings& c, const std::vector<Quasimomentum>& ks,
                                    const SolverOptions& opt = {});

}  // namespace lbs
