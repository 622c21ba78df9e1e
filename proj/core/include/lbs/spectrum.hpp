#pragma once

#include <string>
#include <vector>

#include "lbs/model.hpp"

namespace lbs {

enum class Method { determinant, oracle };

constexpr const char* to_string(Method m) noexcept {
    return m == Method::determinant ? "determinant" : "oracle";
}

struct SpectrumReport {
    Quasimomentum k;
    SpectralWindow window;
    Method method = Method::determinant;
    std::vector<double> below;  // ascending
    std::vector<double> above;  // ascending
    // |Delta| at each root, below roots first; empty for the oracle.
    std::vector<double> residuals;
    std::vector<std::string> warnings;

    int n_minus() const noexcept { return static_cast<int>(below.size()); }
    int n_plus() const noexcept { return static_cast<int>(above.size()); }
};

}  // namespace lbs
